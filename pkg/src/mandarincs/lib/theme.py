from typing import Final

from .ports.display import DisplaySettings

BANNER: Final[str] = "Mandarin Cued Speech"


# Semantic color tokens, mapped to rich color names by RichTextInterface
class Colors:
    ACCENT: Final[str] = "bright_yellow"
    ERROR: Final[str] = "red"
    OK: Final[str] = "green"
    INFO: Final[str] = "cyan"
    NEUTRAL: Final[str] = "white"


REPORT_STYLE: DisplaySettings = {
    "box_style": "rounded",
    "color": Colors.INFO,
}

REFERENCE_STYLE: DisplaySettings = {
    "box_style": "single",
    "color": Colors.NEUTRAL,
}

VIOLATION_STYLE: DisplaySettings = {
    "box_style": "single",
    "color": Colors.ERROR,
}

CLEAN_STYLE: DisplaySettings = {
    "box_style": "rounded",
    "color": Colors.OK,
    "title": "Tables verified",
}

SEARCH_STYLE: DisplaySettings = {
    "box_style": "rounded",
    "color": Colors.ACCENT,
    "title": "Allocation search",
}

CHART_STYLE: DisplaySettings = {
    "box_style": "double",
    "color": Colors.ACCENT,
    "title": BANNER,
}

CONFUSION_STYLE: DisplaySettings = {
    "box_style": "single",
    "color": Colors.INFO,
}
