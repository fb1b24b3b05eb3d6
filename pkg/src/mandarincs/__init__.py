# pyright: strict

from functools import lru_cache
from typing import List

from .domain.aggs import (
    ConsonantTable,
    CueRecord,
    CueTables,
    CueToken,
    EvalReport,
    Gaussian2D,
    LipSample,
    SearchResult,
    Syllabary,
    Syllable,
    SwapMove,
    Violation,
    VowelAllocation,
)
from .domain.classifier import (
    PositionScorer,
    classify,
    evaluate_allocation,
    evaluate_position,
    fit_gaussian,
    gaussian_pdf,
)
from .domain.corpus import corpus_stats, generate_synthetic
from .domain.inventory import (
    consonant_chart,
    default_consonant_table,
    final_allocation,
    preliminary_allocation,
    verify_consonant_table,
    verify_vowel_allocation,
)
from .domain.optimizer import exhaustive_swap_search, global_search, hill_climb, score
from .domain.pinyin import parse_syllable, render_marked, render_syllable, segment
from .domain.transcoder import decompose_final, tone_to_head_move, transcode_syllable, transcode_text
from .lib.ports import FileSystem


@lru_cache(maxsize=1)
def default_syllabary() -> Syllabary:
    return FileSystem().load_syllabary()


def default_tables() -> CueTables:
    """Shipped syllabary and consonant table with the final vowel allocation."""
    return CueTables(
        syllabary=default_syllabary(),
        allocation=final_allocation(),
        consonants=default_consonant_table(),
    )


def transcode(text: str) -> List[CueRecord]:
    return transcode_text(text, default_tables())


__all__ = [
    "ConsonantTable",
    "CueRecord",
    "CueTables",
    "CueToken",
    "EvalReport",
    "Gaussian2D",
    "LipSample",
    "PositionScorer",
    "SearchResult",
    "SwapMove",
    "Syllable",
    "Violation",
    "VowelAllocation",
    "classify",
    "consonant_chart",
    "corpus_stats",
    "decompose_final",
    "default_consonant_table",
    "default_syllabary",
    "default_tables",
    "evaluate_allocation",
    "evaluate_position",
    "exhaustive_swap_search",
    "final_allocation",
    "fit_gaussian",
    "gaussian_pdf",
    "generate_synthetic",
    "global_search",
    "hill_climb",
    "parse_syllable",
    "preliminary_allocation",
    "render_marked",
    "render_syllable",
    "score",
    "segment",
    "tone_to_head_move",
    "transcode",
    "transcode_syllable",
    "transcode_text",
    "verify_consonant_table",
    "verify_vowel_allocation",
]
