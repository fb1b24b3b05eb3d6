# pyright: strict

from typing import Literal, NewType

# ------------------------------ Pinyin ------------------------------

Initial = Literal[
    "b", "p", "m", "f",
    "d", "t", "n", "l",
    "g", "k", "h",
    "j", "q", "x",
    "zh", "ch", "sh", "r",
    "z", "c", "s",
]

Final = Literal[
    "a", "o", "e", "i", "u", "ü",
    "ai", "ei", "ao", "ou",
    "an", "en", "ang", "eng", "ong",
    "er",
    "ia", "ua", "uo", "ie", "üe",
    "uai", "uei", "iao", "iou",
    "ian", "uan", "üan", "in", "uen", "ün",
    "iang", "uang", "ing", "ueng", "iong",
]

# The 16 finals left once a leading i/u/ü is coded as a semiconsonant
BaseVowel = Literal[
    "a", "o", "e", "i", "u", "ü",
    "ai", "ei", "ao", "ou",
    "an", "en", "ang", "eng", "ong",
    "er",
]

# 0 is the neutral tone
Tone = Literal[0, 1, 2, 3, 4]

# [ɿ] after z/c/s, [ʅ] after zh/ch/sh/r
ApicalVariant = Literal["none", "dental", "retroflex"]

# Original orthographic string of a syllable, tone annotation included
RawSyllable = NewType("RawSyllable", str)

# ------------------------------ Cues ------------------------------

Semiconsonant = Literal["[j]", "[w]", "[ɥ]"]

# Anything a handshape codes: the 21 initials plus the three glides
ConsonantUnit = Initial | Semiconsonant

Position = Literal["P1", "P2", "P3", "P4", "P5"]

PositionName = Literal["cheek", "side", "mouth", "chin", "neck"]

Handshape = NewType("Handshape", int)

HeadMove = Literal["none", "right", "up", "down_up", "down"]

# Lip-shape class a consonant falls into when speechread
VisemeClass = NewType("VisemeClass", str)

# ------------------------------ Verification ------------------------------

ViolationKind = Literal[
    "totality",
    "capacity",
    "placement",
    "confusable",
    "co_occurrence",
    "viseme",
    "semiconsonant",
    "required_pairing",
    "range",
]

# ------------------------------ Lip data ------------------------------

Speaker = NewType("Speaker", str)

# Accuracy in percent, 0-100
Percent = NewType("Percent", float)

# ------------------------------ CLI ------------------------------

Command = Literal[
    "transcode",
    "corpus-stats",
    "verify",
    "eval",
    "optimize",
    "gen-synthetic",
    "chart",
]

AllocationChoice = Literal["preliminary", "final"]

# Shipped generator configs
SyntheticPreset = Literal["separated", "confusion"]
