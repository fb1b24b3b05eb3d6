# pyright: strict

import re
import unicodedata
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, cast

from .aggs import Syllabary, Syllable, SyllableSpan
from .constants import (
    DENTAL_SIBILANTS,
    FINALS,
    INITIALS,
    MAX_SYLLABLE_LENGTH,
    PALATALS,
    RETROFLEXES,
    TONE_MARK_FOR,
    TONE_MARKS,
)
from .errors import InvalidSyllableError, InvalidToneError, SegmentationError
from .values import ApicalVariant, Final, Initial, RawSyllable, Tone

_VOWELS = "aeiouü"
_TONE_DIGITS = "012345"
# yi, yin, ying keep their i
_Y_SPELLED_I = frozenset({"i", "in", "ing"})

# Runs between separators; apostrophes force a boundary
_CHUNK = re.compile(r"[^\s'’,.;:!?，。、；：！？]+")
# Letters up to and including an optional tone digit
_RUN = re.compile(r"\D+\d?|\d")


def _extract_tone(raw: str) -> Tuple[str, Tone]:
    """Split a raw syllable into toneless NFC letters and its tone.

    Tone digits 0-5 (5 is an alias for the neutral tone) and tone marks are
    both accepted; a syllable with neither is neutral.
    """
    text = unicodedata.normalize("NFD", raw.strip().lower())

    digit: Optional[Tone] = None
    if text and text[-1] in _TONE_DIGITS:
        d = int(text[-1])
        digit = cast(Tone, 0 if d == 5 else d)
        text = text[:-1]
    elif text and text[-1].isdigit():
        raise InvalidToneError(f"Tone digit {text[-1]!r} in {raw!r} is outside 0-5")

    marks: List[Tone] = [TONE_MARKS[ch] for ch in text if ch in TONE_MARKS]
    if len(marks) > 1:
        raise InvalidToneError(f"{raw!r} carries more than one tone mark")
    letters = "".join(ch for ch in text if ch not in TONE_MARKS)
    letters = unicodedata.normalize("NFC", letters.replace("u:", "ü").replace("v", "ü"))

    if marks and digit is not None and marks[0] != digit:
        raise InvalidToneError(
            f"Tone mark and tone digit disagree in {raw!r} ({marks[0]} vs {digit})"
        )
    tone: Tone = marks[0] if marks else (digit if digit is not None else 0)
    return letters, tone


def _split_initial(letters: str) -> Tuple[Optional[Initial], str]:
    if letters[:2] in ("zh", "ch", "sh"):
        return cast(Initial, letters[:2]), letters[2:]
    if letters[:1] in INITIALS:
        return cast(Initial, letters[:1]), letters[1:]
    return None, letters


def _restore_zero_initial(letters: str) -> Optional[str]:
    """Map a y/w spelling back to its i/u/ü final, None if the spelling is not standard."""
    if letters.startswith("y"):
        rest = letters[1:]
        if rest[:1] in ("u", "ü"):
            return "ü" + rest[1:]
        if rest.startswith("i"):
            return rest if rest in _Y_SPELLED_I else None
        return "i" + rest
    if letters.startswith("w"):
        rest = letters[1:]
        if rest.startswith("u"):
            return rest if rest == "u" else None
        return "u" + rest
    return letters


def _expand_after_initial(initial: Initial, rest: str) -> str:
    if initial in PALATALS and rest.startswith("u"):
        rest = "ü" + rest[1:]
    return {"iu": "iou", "ui": "uei", "un": "uen"}.get(rest, rest)


def apical_variant(initial: Optional[Initial], final: Final) -> ApicalVariant:
    if final != "i" or initial is None:
        return "none"
    if initial in DENTAL_SIBILANTS:
        return "dental"
    if initial in RETROFLEXES:
        return "retroflex"
    return "none"


def validate(initial: Optional[Initial], final: Final, syllabary: Syllabary) -> bool:
    return (initial, final) in syllabary


def parse_syllable(raw: str, syllabary: Syllabary) -> Syllable:
    letters, tone = _extract_tone(raw)
    if not letters or any(ch not in "abcdefghijklmnopqrstuvwxyzü" for ch in letters):
        raise InvalidSyllableError(f"{raw!r} is not a Pinyin syllable")

    initial, rest = _split_initial(letters)
    if initial is None:
        # i/u/ü finals are only written with a leading y or w
        if rest[:1] in ("i", "u", "ü"):
            raise InvalidSyllableError(f"{raw!r} needs a y or w spelling")
        restored = _restore_zero_initial(rest)
        if restored is None:
            raise InvalidSyllableError(f"{raw!r} is not a standard y/w spelling")
        rest = restored
    else:
        rest = _expand_after_initial(initial, rest)

    if rest not in FINALS:
        raise InvalidSyllableError(f"{raw!r} has no valid final ({rest!r})")
    final = cast(Final, rest)
    if not validate(initial, final, syllabary):
        raise InvalidSyllableError(
            f"{raw!r} ({initial or '-'} + {final}) is not in the syllabary"
        )

    return Syllable(
        initial=initial,
        final=final,
        tone=tone,
        apical_variant=apical_variant(initial, final),
        source=RawSyllable(raw),
    )


def render_letters(initial: Optional[Initial], final: Final) -> str:
    if initial is None:
        if final.startswith("ü"):
            return "yu" + final[1:]
        if final.startswith("i"):
            return "y" + final if final in ("i", "in", "ing") else "y" + final[1:]
        if final.startswith("u"):
            return "wu" if final == "u" else "w" + final[1:]
        return final

    body = {"iou": "iu", "uei": "ui", "uen": "un"}.get(final, final)
    if initial in PALATALS and body.startswith("ü"):
        body = "u" + body[1:]
    return initial + body


def render_syllable(s: Syllable) -> str:
    return f"{render_letters(s.initial, s.final)}{s.tone}"


def render_marked(s: Syllable) -> str:
    letters = render_letters(s.initial, s.final)
    if s.tone == 0:
        return letters

    if "a" in letters:
        idx = letters.index("a")
    elif "e" in letters:
        idx = letters.index("e")
    elif "ou" in letters:
        idx = letters.index("o")
    else:
        idx = max(i for i, ch in enumerate(letters) if ch in _VOWELS)

    # ü decomposes to u + diaeresis, so the tone mark stacks above the dots
    marked = unicodedata.normalize("NFD", letters[idx]) + TONE_MARK_FOR[s.tone]
    return unicodedata.normalize("NFC", letters[:idx] + marked + letters[idx + 1 :])


def _is_syllable(candidate: str, syllabary: Syllabary) -> bool:
    try:
        parse_syllable(candidate, syllabary)
    except (InvalidSyllableError, InvalidToneError):
        return False
    return True


def _longest_match(letters: str, syllabary: Syllabary) -> Optional[List[Tuple[int, int]]]:
    failed: Dict[int, bool] = {}

    def solve(i: int) -> Optional[List[Tuple[int, int]]]:
        if i == len(letters):
            return []
        if failed.get(i):
            return None
        # Window covers "u:" spellings one character longer than usual
        for j in range(min(len(letters), i + MAX_SYLLABLE_LENGTH + 1), i, -1):
            if _is_syllable(letters[i:j], syllabary):
                rest = solve(j)
                if rest is not None:
                    return [(i, j)] + rest
        failed[i] = True
        return None

    return solve(0)


def segment_spans(text: str, syllabary: Syllabary) -> List[SyllableSpan]:
    """Cut text into syllables, keeping each syllable's offsets.

    Offsets index the NFC-normalized text. Whitespace, apostrophes and common
    punctuation separate runs; a tone digit closes a run; inside a run the
    longest syllable wins, backtracking only when the remainder cannot be cut.
    """
    text = unicodedata.normalize("NFC", text)
    spans: List[SyllableSpan] = []

    for chunk in _CHUNK.finditer(text):
        for run in _RUN.finditer(chunk.group()):
            piece = run.group()
            start = chunk.start() + run.start()
            end = start + len(piece)
            if piece.isdigit():
                raise SegmentationError(
                    f"Tone digit without a syllable at {start}-{end}: {piece!r}",
                    start=start,
                    end=end,
                )

            digit = piece[-1] if piece[-1].isdigit() else ""
            letters = piece[: len(piece) - len(digit)]
            cuts = _longest_match(letters, syllabary)
            if cuts is None:
                raise SegmentationError(
                    f"Cannot segment {piece!r} at {start}-{end}", start=start, end=end
                )

            for k, (i, j) in enumerate(cuts):
                last = k == len(cuts) - 1
                tail = digit if last else ""
                spans.append(
                    SyllableSpan(
                        raw=RawSyllable(letters[i:j] + tail),
                        start=start + i,
                        end=start + j + len(tail),
                    )
                )

    return spans


def segment(text: str, syllabary: Syllabary) -> List[str]:
    return [str(s.raw) for s in segment_spans(text, syllabary)]


def parse_text(text: str, syllabary: Syllabary) -> List[Tuple[SyllableSpan, Syllable]]:
    out: List[Tuple[SyllableSpan, Syllable]] = []
    for span in segment_spans(text, syllabary):
        try:
            out.append((span, parse_syllable(span.raw, syllabary)))
        except InvalidSyllableError as e:
            raise InvalidSyllableError(f"at offset {span.start}: {e}", offset=span.start) from e
        except InvalidToneError as e:
            raise InvalidToneError(f"at offset {span.start}: {e}", offset=span.start) from e
    return out


def iter_syllables(
    syllabary: Syllabary, tones: Sequence[Tone] = (0, 1, 2, 3, 4)
) -> Iterator[Syllable]:
    def order(pair: Tuple[Optional[Initial], Final]) -> Tuple[int, int]:
        initial, final = pair
        return (
            -1 if initial is None else INITIALS.index(initial),
            FINALS.index(final),
        )

    for initial, final in sorted(syllabary, key=order):
        for tone in tones:
            yield Syllable(
                initial=initial,
                final=final,
                tone=tone,
                apical_variant=apical_variant(initial, final),
            )
