# pyright: strict

from typing import List, Tuple

from .aggs import (
    ConsonantTable,
    CueRecord,
    CueTables,
    CueToken,
    FinalDecomposition,
    Syllable,
    VowelAllocation,
)
from .constants import (
    CONSONANT_ONLY_POSITION,
    FINAL_DECOMPOSITION,
    SEMI_COMBINABILITY,
    TONE_HEAD_MOVES,
)
from .pinyin import parse_text, render_syllable
from .values import Final, HeadMove, Tone


def decompose_final(final: Final) -> FinalDecomposition:
    semi, vowel = FINAL_DECOMPOSITION[final]
    return FinalDecomposition(semi=semi, vowel=vowel)


def tone_to_head_move(tone: Tone) -> HeadMove:
    return TONE_HEAD_MOVES[tone]


def combinability_warnings(s: Syllable) -> Tuple[str, ...]:
    d = decompose_final(s.final)
    if s.initial is None or d.semi is None:
        return ()
    if d.semi in SEMI_COMBINABILITY.get(s.initial, frozenset()):
        return ()
    return (f"{s.initial} does not normally precede {d.semi}",)


def transcode_syllable(
    s: Syllable, alloc: VowelAllocation, ct: ConsonantTable
) -> List[CueToken]:
    """Cue tokens for one syllable.

    The vowel-bearing token always comes last and is the only one carrying the
    head movement. A consonant cued before a glide sits at the side position.
    """
    d = decompose_final(s.final)
    position = alloc.lookup(d.vowel)
    move = tone_to_head_move(s.tone)

    if s.initial is not None and d.semi is not None:
        return [
            CueToken(ct.lookup(s.initial), CONSONANT_ONLY_POSITION),
            CueToken(ct.lookup(d.semi), position, move),
        ]
    if s.initial is not None:
        return [CueToken(ct.lookup(s.initial), position, move)]
    if d.semi is not None:
        return [CueToken(ct.lookup(d.semi), position, move)]
    return [CueToken(ct.isolated_vowel_handshape, position, move)]


def transcode_record(
    s: Syllable, tables: CueTables, *, offset: int = 0
) -> CueRecord:
    return CueRecord(
        syllable=s,
        decomposition=decompose_final(s.final),
        tokens=tuple(transcode_syllable(s, tables.allocation, tables.consonants)),
        offset=offset,
        warnings=combinability_warnings(s),
    )


def transcode_text(text: str, tables: CueTables) -> List[CueRecord]:
    return [
        transcode_record(syllable, tables, offset=span.start)
        for span, syllable in parse_text(text, tables.syllabary)
    ]


def format_record(record: CueRecord) -> str:
    """One tab-separated line per syllable.

    Columns: offset, source, initial, final, tone, apical variant, the tokens
    as `handshape:position:headmove` triples, then any warnings.
    """
    s = record.syllable
    fields = [
        str(record.offset),
        str(s.source) or render_syllable(s),
        s.initial or "-",
        s.final,
        str(s.tone),
        s.apical_variant,
        " ".join(str(t) for t in record.tokens),
    ]
    if record.warnings:
        fields.append("warn=" + "; ".join(record.warnings))
    return "\t".join(fields)
