# pyright: strict

import csv
import io
import json
import unicodedata
from importlib import resources
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, cast

from ...domain.aggs import (
    ConsonantTable,
    GaussianSpec,
    LipSample,
    Syllabary,
    SyntheticConfig,
    VisemeTable,
    VowelAllocation,
)
from ...domain.constants import (
    BASE_VOWELS,
    FINALS,
    FRAMES_PER_OCCURRENCE,
    INITIALS,
    ISOLATED_VOWEL_HANDSHAPE,
    POSITIONS,
)
from ...domain.errors import LipDataFormatError, TableFormatError
from ...domain.ports import FileSystem as DomainFileSystem
from ...domain.values import (
    BaseVowel,
    ConsonantUnit,
    Final,
    Handshape,
    Initial,
    Position,
    Speaker,
    SyntheticPreset,
    VisemeClass,
)
from ..constants import (
    CONSONANTS_FILE,
    CORPUS_FILE,
    DATA_PACKAGE,
    FINAL_ALLOCATION_FILE,
    LIP_CSV_HEADER,
    PRELIMINARY_ALLOCATION_FILE,
    SYLLABARY_FILE,
    SYNTHETIC_CONFUSION_FILE,
    SYNTHETIC_SEPARATED_FILE,
    VISEMES_FILE,
)

# Wildcard key for the isolated-vowel handshape in consonant tables
ISOLATED_KEY = "*"


def _records(text: str) -> Iterator[Tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            yield lineno, unicodedata.normalize("NFC", stripped)


def _key_value(line: str, path: str, lineno: int) -> Tuple[str, str]:
    if "=" not in line:
        raise TableFormatError(f"expected key=value, got {line!r}", path=path, line=lineno)
    key, value = (part.strip() for part in line.split("=", 1))
    if not key or not value:
        raise TableFormatError(f"empty key or value in {line!r}", path=path, line=lineno)
    return key, value


def _normalize_vowel(raw: str) -> str:
    return unicodedata.normalize("NFC", raw.strip().lower().replace("u:", "ü").replace("v", "ü"))


class FileSystem(DomainFileSystem):
    """Reads and writes the package's line-oriented tables and lip CSVs.

    A `None` path selects the copy shipped in `mandarincs/data`.
    """

    def read_text(self, path: str) -> str:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()

    def write_text(self, path: str, text: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)

    def _read(self, path: Optional[str], default: str) -> Tuple[str, str]:
        if path is None:
            data = resources.files(DATA_PACKAGE).joinpath(default)
            return data.read_text(encoding="utf-8"), default
        return self.read_text(path), path

    def load_syllabary(self, path: Optional[str] = None) -> Syllabary:
        text, name = self._read(path, SYLLABARY_FILE)
        pairs: set[Tuple[Optional[Initial], Final]] = set()
        for lineno, line in _records(text):
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2:
                raise TableFormatError(f"expected initial,final, got {line!r}", path=name, line=lineno)
            initial, final = parts
            if initial != "-" and initial not in INITIALS:
                raise TableFormatError(f"unknown initial {initial!r}", path=name, line=lineno)
            if final not in FINALS:
                raise TableFormatError(f"unknown final {final!r}", path=name, line=lineno)
            pairs.add((None if initial == "-" else cast(Initial, initial), cast(Final, final)))
        return frozenset(pairs)

    def load_corpus(self, path: Optional[str] = None) -> List[str]:
        text, _ = self._read(path, CORPUS_FILE)
        return [line for _, line in _records(text)]

    def load_allocation(
        self, path: Optional[str] = None, *, preliminary: bool = False
    ) -> VowelAllocation:
        default = PRELIMINARY_ALLOCATION_FILE if preliminary else FINAL_ALLOCATION_FILE
        text, name = self._read(path, default)
        assignment: Dict[BaseVowel, Position] = {}
        for lineno, line in _records(text):
            key, value = _key_value(line, name, lineno)
            vowel = _normalize_vowel(key)
            if vowel not in BASE_VOWELS:
                raise TableFormatError(f"unknown vowel {key!r}", path=name, line=lineno)
            if value.upper() not in POSITIONS:
                raise TableFormatError(f"unknown position {value!r}", path=name, line=lineno)
            if vowel in assignment:
                raise TableFormatError(f"vowel {vowel!r} listed twice", path=name, line=lineno)
            assignment[cast(BaseVowel, vowel)] = cast(Position, value.upper())
        return VowelAllocation(MappingProxyType(assignment))

    def load_consonants(self, path: Optional[str] = None) -> ConsonantTable:
        text, name = self._read(path, CONSONANTS_FILE)
        assignment: Dict[ConsonantUnit, Handshape] = {}
        isolated = Handshape(ISOLATED_VOWEL_HANDSHAPE)
        for lineno, line in _records(text):
            key, value = _key_value(line, name, lineno)
            try:
                handshape = Handshape(int(value))
            except ValueError:
                raise TableFormatError(
                    f"handshape must be an integer, got {value!r}", path=name, line=lineno
                ) from None
            if key == ISOLATED_KEY:
                isolated = handshape
                continue
            if key in assignment:
                raise TableFormatError(f"unit {key!r} listed twice", path=name, line=lineno)
            # Unknown units are reported by the verifier, not rejected here
            assignment[cast(ConsonantUnit, key)] = handshape
        return ConsonantTable(MappingProxyType(assignment), isolated)

    def load_visemes(self, path: Optional[str] = None) -> VisemeTable:
        text, name = self._read(path, VISEMES_FILE)
        classes: Dict[ConsonantUnit, VisemeClass] = {}
        for lineno, line in _records(text):
            key, value = _key_value(line, name, lineno)
            classes[cast(ConsonantUnit, key)] = VisemeClass(value)
        return MappingProxyType(classes)

    def load_lip_samples(self, path: str) -> List[LipSample]:
        return parse_lip_csv(self.read_text(path), path)

    def load_synthetic_config(
        self, path: Optional[str] = None, *, preset: SyntheticPreset = "separated"
    ) -> SyntheticConfig:
        default = SYNTHETIC_CONFUSION_FILE if preset == "confusion" else SYNTHETIC_SEPARATED_FILE
        text, name = self._read(path, default)
        return parse_synthetic_config(text, name)

    def format_lip_samples(self, samples: Sequence[LipSample]) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(LIP_CSV_HEADER)
        for s in samples:
            writer.writerow([s.speaker, s.word, s.vowel, s.frame, f"{s.a:.6f}", f"{s.b:.6f}"])
        return out.getvalue()


def parse_lip_csv(text: str, path: str = "<lip data>") -> List[LipSample]:
    reader = csv.reader(io.StringIO(text.lstrip("\ufeff")))
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != LIP_CSV_HEADER:
        raise LipDataFormatError(
            f"header must be {','.join(LIP_CSV_HEADER)}, got {','.join(header or [])!r}",
            path=path,
            line=1,
        )

    samples: List[LipSample] = []
    for row in reader:
        lineno = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(LIP_CSV_HEADER):
            raise LipDataFormatError(
                f"expected {len(LIP_CSV_HEADER)} columns, got {len(row)}", path=path, line=lineno
            )
        speaker, word, raw_vowel, raw_frame, raw_a, raw_b = (cell.strip() for cell in row)
        vowel = _normalize_vowel(raw_vowel)
        if vowel not in BASE_VOWELS:
            raise LipDataFormatError(f"unknown vowel {raw_vowel!r}", path=path, line=lineno)
        try:
            frame = int(raw_frame)
            a, b = float(raw_a), float(raw_b)
        except ValueError as e:
            raise LipDataFormatError(f"bad number: {e}", path=path, line=lineno) from None
        if not a > 0 or not b >= 0:
            raise LipDataFormatError(
                f"lip width must be positive and height non-negative, got A={a}, B={b}",
                path=path,
                line=lineno,
            )
        samples.append(
            LipSample(
                speaker=Speaker(speaker),
                word=word,
                vowel=cast(BaseVowel, vowel),
                frame=frame,
                a=a,
                b=b,
            )
        )
    return samples


def _spec_from_json(vowel: str, raw: Any, path: str) -> GaussianSpec:
    try:
        mean = (float(raw["mean"][0]), float(raw["mean"][1]))
        cov_rows = raw["cov"]
        cov = (
            (float(cov_rows[0][0]), float(cov_rows[0][1])),
            (float(cov_rows[1][0]), float(cov_rows[1][1])),
        )
        occurrences = int(raw["occurrences"])
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise TableFormatError(f"bad parameters for vowel {vowel!r}: {e!r}", path=path, line=0) from None
    if occurrences < 0:
        raise TableFormatError(f"negative occurrences for vowel {vowel!r}", path=path, line=0)
    return GaussianSpec(mean=mean, cov=cov, occurrences=occurrences)


def parse_synthetic_config(text: str, path: str = "<config>") -> SyntheticConfig:
    """Generator parameters: speaker, frames per occurrence, per-vowel Gaussians.

    Structural errors are reported at line 0 since they concern the whole document.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableFormatError(e.msg, path=path, line=e.lineno) from None
    if not isinstance(raw, dict) or not isinstance(raw.get("vowels"), dict):
        raise TableFormatError("expected an object with a 'vowels' object", path=path, line=0)

    doc = cast(Dict[str, Any], raw)
    vowels: Dict[BaseVowel, GaussianSpec] = {}
    for key, params in cast(Dict[str, Any], doc["vowels"]).items():
        vowel = _normalize_vowel(key)
        if vowel not in BASE_VOWELS:
            raise TableFormatError(f"unknown vowel {key!r}", path=path, line=0)
        vowels[cast(BaseVowel, vowel)] = _spec_from_json(vowel, params, path)

    frames = doc.get("frames_per_occurrence", FRAMES_PER_OCCURRENCE)
    if not isinstance(frames, int) or isinstance(frames, bool) or frames < 1:
        raise TableFormatError("frames_per_occurrence must be a positive integer", path=path, line=0)

    return SyntheticConfig(
        speaker=Speaker(str(doc.get("speaker", "synthetic"))),
        frames_per_occurrence=frames,
        vowels=MappingProxyType(vowels),
    )
