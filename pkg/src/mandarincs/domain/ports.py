# pyright: strict

from typing import Any, List, Optional, Protocol, Sequence

from .values import SyntheticPreset
from .aggs import (
    ConfusionMatrix,
    ConsonantTable,
    CueChart,
    EvalReport,
    Invocation,
    LipSample,
    SearchResult,
    Syllabary,
    SyntheticConfig,
    Violation,
    VisemeTable,
    VowelAllocation,
    VowelSummary,
)


class FileSystem(Protocol):
    def read_text(self, path: str) -> str: ...
    def write_text(self, path: str, text: str) -> None: ...

    def load_syllabary(self, path: Optional[str] = None) -> Syllabary: ...
    def load_corpus(self, path: Optional[str] = None) -> List[str]: ...
    def load_allocation(self, path: Optional[str] = None, *, preliminary: bool = False) -> VowelAllocation: ...
    def load_consonants(self, path: Optional[str] = None) -> ConsonantTable: ...
    def load_visemes(self, path: Optional[str] = None) -> VisemeTable: ...
    def load_lip_samples(self, path: str) -> List[LipSample]: ...
    def load_synthetic_config(
        self, path: Optional[str] = None, *, preset: SyntheticPreset = "separated"
    ) -> SyntheticConfig: ...
    def format_lip_samples(self, samples: Sequence[LipSample]) -> str: ...


class Interface(Protocol):
    def display(self, message: str, **kwargs: Any) -> None: ...
    def display_report(
        self, title: str, report: EvalReport, alloc: Optional[VowelAllocation] = None, **kwargs: Any
    ) -> None: ...
    def display_search(self, result: SearchResult, **kwargs: Any) -> None: ...
    def display_violations(self, title: str, violations: Sequence[Violation], **kwargs: Any) -> None: ...
    def display_confusion(
        self, title: str, matrix: ConfusionMatrix, summaries: Sequence[VowelSummary] = (), **kwargs: Any
    ) -> None: ...
    def display_chart(self, chart: CueChart, **kwargs: Any) -> None: ...

    @staticmethod
    def is_available() -> bool: ...


class CLIEnv(Protocol):
    def read_args(self, argv: Optional[Sequence[str]] = None) -> Invocation: ...
    def read_env(self, invocation: Invocation) -> Invocation: ...
