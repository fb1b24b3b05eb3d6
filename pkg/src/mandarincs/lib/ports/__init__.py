from .fs import FileSystem
from .display import RichTextInterface, PlainTextInterface
from .cli_env import CLIEnv

__all__ = [
    "FileSystem",
    "RichTextInterface",
    "PlainTextInterface",
    "CLIEnv",
]
