# pyright: strict

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .constants import (
    BASE_VOWELS,
    CONSONANT_UNITS,
    POSITIONS,
)
from .values import (
    AllocationChoice,
    ApicalVariant,
    BaseVowel,
    Command,
    ConsonantUnit,
    Final,
    Handshape,
    HeadMove,
    Initial,
    Percent,
    Position,
    RawSyllable,
    Semiconsonant,
    Speaker,
    SyntheticPreset,
    Tone,
    ViolationKind,
    VisemeClass,
)

FloatArray = npt.NDArray[np.float64]

# ------------------------------ Pinyin ------------------------------

# Valid (initial, final) pairs; None stands for the zero initial
Syllabary = FrozenSet[Tuple[Optional[Initial], Final]]


@dataclass(frozen=True)
class Syllable:
    initial: Optional[Initial]
    final: Final
    tone: Tone
    apical_variant: ApicalVariant = "none"
    source: RawSyllable = field(default=RawSyllable(""), compare=False)


@dataclass(frozen=True)
class SyllableSpan:
    raw: RawSyllable
    start: int
    end: int


# ------------------------------ Cue inventory ------------------------------


@dataclass(frozen=True)
class VowelAllocation:
    assignment: Mapping[BaseVowel, Position]

    @classmethod
    def from_groups(
        cls, groups: Mapping[Position, Tuple[BaseVowel, ...]]
    ) -> "VowelAllocation":
        return cls(
            MappingProxyType({v: pos for pos, vowels in groups.items() for v in vowels})
        )

    def lookup(self, vowel: BaseVowel) -> Position:
        return self.assignment[vowel]

    def members(self, position: Position) -> Tuple[BaseVowel, ...]:
        return tuple(v for v in BASE_VOWELS if self.assignment.get(v) == position)

    def groups(self) -> Dict[Position, Tuple[BaseVowel, ...]]:
        return {p: self.members(p) for p in POSITIONS}

    def swap(self, a: BaseVowel, b: BaseVowel) -> "VowelAllocation":
        updated = dict(self.assignment)
        updated[a], updated[b] = self.assignment[b], self.assignment[a]
        return VowelAllocation(MappingProxyType(updated))

    def key(self) -> Tuple[Tuple[BaseVowel, Position], ...]:
        return tuple(
            (v, self.assignment[v]) for v in BASE_VOWELS if v in self.assignment
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VowelAllocation):
            return NotImplemented
        return dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash(self.key())


@dataclass(frozen=True)
class ConsonantTable:
    assignment: Mapping[ConsonantUnit, Handshape]
    isolated_vowel_handshape: Handshape

    def lookup(self, unit: ConsonantUnit) -> Handshape:
        return self.assignment[unit]

    def members(self, handshape: Handshape) -> Tuple[ConsonantUnit, ...]:
        return tuple(
            u for u in CONSONANT_UNITS if self.assignment.get(u) == handshape
        )

    def handshapes(self) -> Tuple[Handshape, ...]:
        return tuple(sorted(set(self.assignment.values())))

    def moved(self, unit: ConsonantUnit, handshape: Handshape) -> "ConsonantTable":
        updated = dict(self.assignment)
        updated[unit] = handshape
        return ConsonantTable(
            MappingProxyType(updated), self.isolated_vowel_handshape
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConsonantTable):
            return NotImplemented
        return (
            dict(self.assignment) == dict(other.assignment)
            and self.isolated_vowel_handshape == other.isolated_vowel_handshape
        )

    def __hash__(self) -> int:
        return hash(
            (tuple(sorted(self.assignment.items())), self.isolated_vowel_handshape)
        )


VisemeTable = Mapping[ConsonantUnit, VisemeClass]


@dataclass(frozen=True)
class AllocationConstraints:
    confusable_pairs: FrozenSet[FrozenSet[BaseVowel]]
    complementary_pairs: FrozenSet[FrozenSet[BaseVowel]]
    er_positions: FrozenSet[Position]
    capacities: Mapping[Position, int]


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    subjects: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class CueChart:
    handshapes: Tuple[Tuple[Handshape, Tuple[ConsonantUnit, ...]], ...]
    positions: Tuple[Tuple[Position, str, Tuple[BaseVowel, ...]], ...]
    tones: Tuple[Tuple[Tone, HeadMove, str], ...]
    isolated_vowel_handshape: Handshape


# ------------------------------ Transcoder ------------------------------


@dataclass(frozen=True)
class FinalDecomposition:
    semi: Optional[Semiconsonant]
    vowel: BaseVowel


@dataclass(frozen=True)
class CueToken:
    handshape: Handshape
    position: Position
    head_move: Optional[HeadMove] = None

    def __str__(self) -> str:
        return f"{int(self.handshape)}:{self.position}:{self.head_move or '-'}"


@dataclass(frozen=True)
class CueRecord:
    syllable: Syllable
    decomposition: FinalDecomposition
    tokens: Tuple[CueToken, ...]
    offset: int = 0
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class CueTables:
    syllabary: Syllabary
    allocation: VowelAllocation
    consonants: ConsonantTable


# ------------------------------ Lip classifier ------------------------------


@dataclass(frozen=True)
class LipSample:
    speaker: Speaker
    word: str
    vowel: BaseVowel
    frame: int
    a: float
    b: float


@dataclass(frozen=True, eq=False)
class Gaussian2D:
    mu: FloatArray
    sigma: FloatArray
    regularized: bool = False


@dataclass(frozen=True)
class PositionScore:
    mean: Percent
    std: Percent


@dataclass(frozen=True)
class EvalReport:
    per_position: Mapping[Position, PositionScore]

    @property
    def average(self) -> Percent:
        means = [self.per_position[p].mean for p in POSITIONS if p in self.per_position]
        return Percent(sum(means) / len(means)) if means else Percent(0.0)


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """Test-frame counts pooled over every hold-out repetition of one position.

    Rows are the spoken vowel, columns the vowel the classifier chose.
    """

    vowels: Tuple[BaseVowel, ...]
    counts: npt.NDArray[np.int64]

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def accuracy(self) -> Percent:
        total = self.total
        return Percent(100.0 * float(np.trace(self.counts)) / total if total else 100.0)

    def rate(self, spoken: BaseVowel, chosen: BaseVowel) -> Percent:
        row = self.counts[self.vowels.index(spoken)]
        n = int(row.sum())
        return Percent(100.0 * float(row[self.vowels.index(chosen)]) / n if n else 0.0)

    def confusions(self) -> List[Tuple[BaseVowel, BaseVowel, Percent]]:
        """Off-diagonal cells with at least one frame, most frequent first."""
        cells = [
            (spoken, chosen, self.rate(spoken, chosen))
            for i, spoken in enumerate(self.vowels)
            for j, chosen in enumerate(self.vowels)
            if i != j and self.counts[i, j] > 0
        ]
        return sorted(cells, key=lambda c: -c[2])


@dataclass(frozen=True, eq=False)
class VowelSummary:
    vowel: BaseVowel
    frames: int
    mu: FloatArray
    sigma: FloatArray


@dataclass(frozen=True)
class GaussianSpec:
    mean: Tuple[float, float]
    cov: Tuple[Tuple[float, float], Tuple[float, float]]
    occurrences: int


@dataclass(frozen=True)
class SyntheticConfig:
    speaker: Speaker
    frames_per_occurrence: int
    vowels: Mapping[BaseVowel, GaussianSpec]


# ------------------------------ Optimizer ------------------------------


@dataclass(frozen=True)
class SwapMove:
    vowel_a: BaseVowel
    vowel_b: BaseVowel

    def __str__(self) -> str:
        return f"{self.vowel_a}<->{self.vowel_b}"

    def same_as(self, a: BaseVowel, b: BaseVowel) -> bool:
        return {self.vowel_a, self.vowel_b} == {a, b}


@dataclass(frozen=True)
class TraceStep:
    move: SwapMove
    delta: float
    score: float


@dataclass(frozen=True)
class SearchResult:
    start: VowelAllocation
    best: VowelAllocation
    score: EvalReport
    trace: Tuple[TraceStep, ...]
    evaluations: int = 0

    def moves(self) -> List[SwapMove]:
        return [s.move for s in self.trace]


# ------------------------------ Corpus ------------------------------


@dataclass(frozen=True)
class CorpusStats:
    vowels: Mapping[BaseVowel, int]
    semiconsonants: Mapping[Semiconsonant, int]
    apical: Mapping[ApicalVariant, int]
    words: int


# ------------------------------ CLI ------------------------------


@dataclass
class Invocation:
    command: Command
    text: Optional[str] = None
    input_path: Optional[str] = None
    syllabary_path: Optional[str] = None
    corpus_path: Optional[str] = None
    allocation_path: Optional[str] = None
    consonants_path: Optional[str] = None
    visemes_path: Optional[str] = None
    lip_csv: Optional[str] = None
    config_path: Optional[str] = None
    output_path: Optional[str] = None
    allocation: AllocationChoice = "final"
    speaker: Optional[str] = None
    seed: Optional[int] = None
    random_seed: bool = False
    repetitions: Optional[int] = None
    search_repetitions: Optional[int] = None
    max_iters: int = 50
    oracle: bool = False
    global_search: bool = False
    synthetic: SyntheticPreset = "separated"
    lenient: bool = False
    chart: bool = False
    reference: bool = False
    confusion: bool = False
    log_level: Optional[str] = None
