# pyright: strict

import logging
import sys
from typing import Optional

from .constants import DEFAULT_LOG_LEVEL

_FORMAT = "%(name)s: %(message)s"


def _rich_handler() -> Optional[logging.Handler]:
    try:
        from rich.console import Console
        from rich.logging import RichHandler
    except ImportError:
        return None
    return RichHandler(console=Console(stderr=True), show_path=False, show_time=False)


def configure_logging(level: Optional[str] = None) -> None:
    """Route the package loggers to stderr, through rich when it is installed."""
    name = (level or DEFAULT_LOG_LEVEL).upper()
    numeric = logging.getLevelName(name)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level {level!r}")

    handler = _rich_handler()
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s " + _FORMAT))
    else:
        handler.setFormatter(logging.Formatter(_FORMAT))

    root = logging.getLogger("mandarincs")
    for old in list(root.handlers):
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(numeric)
    root.propagate = False
