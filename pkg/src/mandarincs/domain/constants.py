from typing import Dict, Final, FrozenSet, Mapping, Optional, Tuple

from .values import (
    BaseVowel,
    ConsonantUnit,
    Final as FinalId,
    HeadMove,
    Initial,
    Position,
    PositionName,
    Semiconsonant,
    Tone,
)

# ------------------------------ Pinyin ------------------------------

INITIALS: Final[Tuple[Initial, ...]] = (
    "b", "p", "m", "f",
    "d", "t", "n", "l",
    "g", "k", "h",
    "j", "q", "x",
    "zh", "ch", "sh", "r",
    "z", "c", "s",
)

# Fixed display and tie-break order of the base vowels
BASE_VOWELS: Final[Tuple[BaseVowel, ...]] = (
    "a", "o", "e", "i", "u", "ü",
    "ai", "ei", "ao", "ou",
    "an", "en", "ang", "eng", "ong",
    "er",
)

SEMICONSONANTS: Final[Tuple[Semiconsonant, ...]] = ("[j]", "[w]", "[ɥ]")

CONSONANT_UNITS: Final[Tuple[ConsonantUnit, ...]] = INITIALS + SEMICONSONANTS

DENTAL_SIBILANTS: Final[FrozenSet[Initial]] = frozenset({"z", "c", "s"})
RETROFLEXES: Final[FrozenSet[Initial]] = frozenset({"zh", "ch", "sh", "r"})
PALATALS: Final[FrozenSet[Initial]] = frozenset({"j", "q", "x"})

# Rows of the finals table: compound finals starting with i/u/ü and what
# remains once the glide is taken out.
FINAL_DECOMPOSITION: Final[Mapping[FinalId, Tuple[Optional[Semiconsonant], BaseVowel]]] = {
    **{v: (None, v) for v in BASE_VOWELS},
    "ia": ("[j]", "a"),
    "ua": ("[w]", "a"),
    "uo": ("[w]", "o"),
    "ie": ("[j]", "e"),
    "üe": ("[ɥ]", "e"),
    "uai": ("[w]", "ai"),
    "uei": ("[w]", "ei"),
    "iao": ("[j]", "ao"),
    "iou": ("[j]", "ou"),
    "ian": ("[j]", "an"),
    "uan": ("[w]", "an"),
    "üan": ("[ɥ]", "an"),
    "in": ("[j]", "en"),
    "uen": ("[w]", "en"),
    "ün": ("[ɥ]", "en"),
    "iang": ("[j]", "ang"),
    "uang": ("[w]", "ang"),
    "ing": ("[j]", "eng"),
    "ueng": ("[w]", "eng"),
    "iong": ("[j]", "ong"),
}

FINALS: Final[Tuple[FinalId, ...]] = tuple(FINAL_DECOMPOSITION)

# Longest spelling a single syllable can take ("zhuang", "shuang", ...)
MAX_SYLLABLE_LENGTH: Final[int] = 6

# Combining marks as produced by NFD decomposition
TONE_MARKS: Final[Mapping[str, Tone]] = {
    "̄": 1,  # macron
    "́": 2,  # acute
    "̌": 3,  # caron
    "̆": 3,  # breve, common stand-in for the caron
    "̀": 4,  # grave
}

TONE_MARK_FOR: Final[Mapping[Tone, str]] = {
    1: "̄",
    2: "́",
    3: "̌",
    4: "̀",
}

# ------------------------------ Positions & handshapes ------------------------------

POSITIONS: Final[Tuple[Position, ...]] = ("P1", "P2", "P3", "P4", "P5")

POSITION_NAMES: Final[Mapping[Position, PositionName]] = {
    "P1": "cheek",
    "P2": "side",
    "P3": "mouth",
    "P4": "chin",
    "P5": "neck",
}

POSITION_CAPACITIES: Final[Mapping[Position, int]] = {
    "P1": 3,
    "P2": 4,
    "P3": 3,
    "P4": 3,
    "P5": 3,
}

# Position used for a consonant that is not directly followed by a vowel
CONSONANT_ONLY_POSITION: Final[Position] = "P2"

HANDSHAPE_COUNT: Final[int] = 8
HANDSHAPE_CAPACITY: Final[int] = 3
ISOLATED_VOWEL_HANDSHAPE: Final[int] = 5

# er only sits where it is least confusable
ER_POSITIONS: Final[FrozenSet[Position]] = frozenset({"P2", "P4", "P5"})

PRELIMINARY_ALLOCATION: Final[Mapping[Position, Tuple[BaseVowel, ...]]] = {
    "P1": ("an", "e", "o"),
    "P2": ("a", "ou", "en", "er"),
    "P3": ("i", "ong", "ang"),
    "P4": ("ai", "u", "ao"),
    "P5": ("ü", "ei", "eng"),
}

# Applied in order to the preliminary allocation
OPTIMIZATION_SWAPS: Final[Tuple[Tuple[BaseVowel, BaseVowel], ...]] = (
    ("ong", "ü"),
    ("eng", "en"),
)

# Pairs of vowels with similar lip shapes that must not share a position
CONFUSABLE_VOWEL_PAIRS: Final[FrozenSet[FrozenSet[BaseVowel]]] = frozenset(
    frozenset(p)
    for p in (
        ("e", "o"),
        ("en", "eng"),
        ("an", "ang"),
        ("a", "ai"),
        ("a", "ao"),
        ("a", "ang"),
        ("ai", "ei"),
        ("ei", "i"),
        ("u", "ou"),
        ("u", "ü"),
        ("u", "ong"),
        ("o", "u"),
        ("o", "ou"),
        ("ou", "ong"),
        ("ou", "ü"),
        ("ong", "ü"),
        ("e", "er"),
    )
)

# e and o almost never follow the same consonant, so the handshape tells them apart
COMPLEMENTARY_VOWEL_PAIRS: Final[FrozenSet[FrozenSet[BaseVowel]]] = frozenset(
    {frozenset(("e", "o"))}
)

# ------------------------------ Consonants ------------------------------

# Which glides each initial may precede
SEMI_COMBINABILITY: Final[Mapping[Initial, FrozenSet[Semiconsonant]]] = {
    **{c: frozenset({"[j]"}) for c in ("b", "p", "m", "f")},
    **{c: frozenset({"[j]", "[w]", "[ɥ]"}) for c in ("d", "t", "n", "l")},
    **{c: frozenset({"[w]"}) for c in ("g", "k", "h")},
    **{c: frozenset({"[j]", "[ɥ]"}) for c in ("j", "q", "x")},
    **{c: frozenset({"[w]"}) for c in ("zh", "ch", "sh", "r", "z", "c", "s")},
}

# Combinable pairs that may still share a handshape; lips keep them apart
CO_OCCURRENCE_WHITELIST: Final[FrozenSet[Tuple[Initial, Semiconsonant]]] = frozenset(
    {("l", "[w]")}
)

# Pairs that must share a handshape
REQUIRED_PAIRINGS: Final[FrozenSet[Tuple[ConsonantUnit, ConsonantUnit]]] = frozenset(
    {("l", "[w]")}
)

# ------------------------------ Tones ------------------------------

TONE_HEAD_MOVES: Final[Mapping[Tone, HeadMove]] = {
    0: "none",
    1: "right",
    2: "up",
    3: "down_up",
    4: "down",
}

TONE_DESCRIPTIONS: Final[Mapping[HeadMove, str]] = {
    "none": "head keeps still",
    "right": "head shifts right",
    "up": "head shifts up",
    "down_up": "head moves down then up (V)",
    "down": "head moves down",
}

# ------------------------------ Evaluation ------------------------------

DEFAULT_SEED: Final[int] = 20190101
DEFAULT_REPETITIONS: Final[int] = 100
DEFAULT_SEARCH_REPETITIONS: Final[int] = 20
DEFAULT_TRAIN_FRACTION: Final[float] = 0.8
MIN_SAMPLES_PER_VOWEL: Final[int] = 5
FRAMES_PER_OCCURRENCE: Final[int] = 5

# Ridge kicks in when the smallest eigenvalue falls under this share of the largest
RIDGE_TRIGGER_RATIO: Final[float] = 1e-9
RIDGE_SCALE: Final[float] = 1e-6
# Added when the covariance is exactly zero and no trace is available to scale by
RIDGE_FLOOR: Final[float] = 1e-9

# Occurrences of each base vowel in the 242-word corpus
CORPUS_VOWEL_COUNTS: Final[Mapping[BaseVowel, int]] = {
    "a": 21,
    "o": 5,
    "e": 16,
    "i": 16,
    "u": 18,
    "ü": 5,
    "ai": 18,
    "ei": 13,
    "ao": 18,
    "ou": 20,
    "an": 23,
    "en": 16,
    "ang": 20,
    "eng": 18,
    "ong": 14,
    "er": 1,
}

# Reported per-position accuracies (P1..P5) and their row averages
PRELIMINARY_SCORE_TABLE: Final[Dict[str, Tuple[Tuple[float, ...], float]]] = {
    "speaker 1": ((79.94, 88.54, 95.87, 97.95, 92.86), 91.03),
    "speaker 2": ((94.35, 75.28, 89.40, 94.55, 89.65), 86.65),
    "speaker 3": ((91.27, 82.58, 94.16, 99.22, 80.06), 89.46),
}

FINAL_SCORE_TABLE: Final[Dict[str, Tuple[Tuple[float, ...], float]]] = {
    "speaker 1": ((80.01, 84.65, 98.63, 98.12, 99.01), 92.08),
    "speaker 2": ((93.95, 84.51, 87.71, 95.64, 99.85), 92.33),
    "speaker 3": ((92.45, 81.65, 95.53, 98.95, 95.05), 92.73),
}
