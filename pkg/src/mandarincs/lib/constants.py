from typing import Final

SEED_ENV_VAR: Final[str] = "MANDARINCS_SEED"
REPETITIONS_ENV_VAR: Final[str] = "MANDARINCS_REPETITIONS"
LOG_LEVEL_ENV_VAR: Final[str] = "MANDARINCS_LOG_LEVEL"

DEFAULT_LOG_LEVEL: Final[str] = "WARNING"

# Package resources under mandarincs/data
DATA_PACKAGE: Final[str] = "mandarincs.data"
SYLLABARY_FILE: Final[str] = "syllabary.txt"
CORPUS_FILE: Final[str] = "corpus.txt"
CONSONANTS_FILE: Final[str] = "consonants.txt"
VISEMES_FILE: Final[str] = "visemes.txt"
PRELIMINARY_ALLOCATION_FILE: Final[str] = "preliminary_allocation.txt"
FINAL_ALLOCATION_FILE: Final[str] = "final_allocation.txt"
SYNTHETIC_CONFUSION_FILE: Final[str] = "synthetic_confusion.json"
SYNTHETIC_SEPARATED_FILE: Final[str] = "synthetic_separated.json"

LIP_CSV_HEADER: Final[tuple[str, ...]] = ("speaker", "word", "vowel", "frame", "A", "B")

# Exit statuses
EXIT_OK: Final[int] = 0
EXIT_VIOLATIONS: Final[int] = 1
EXIT_ERROR: Final[int] = 2
