import logging
import sys
import unicodedata
from typing import List, Optional, Sequence

from .domain.aggs import CueRecord, CueTables, Invocation, LipSample, Violation, VowelAllocation
from .domain.classifier import PositionScorer, report_from_means, samples_by_speaker, summarize_vowels
from .domain.constants import (
    FINAL_SCORE_TABLE,
    POSITION_NAMES,
    POSITIONS,
    PRELIMINARY_SCORE_TABLE,
    SEMI_COMBINABILITY,
)
from .domain.corpus import corpus_stats, format_stats, generate_synthetic
from .domain.errors import (
    InsufficientDataError,
    InvalidSyllableError,
    InvalidToneError,
    LipDataFormatError,
    NumericDomainError,
    SegmentationError,
    TableFormatError,
)
from .domain.inventory import (
    consonant_chart,
    default_constraints,
    verify_consonant_table,
    verify_vowel_allocation,
)
from .domain.optimizer import (
    exhaustive_swap_search,
    format_allocation,
    format_trace,
    global_search,
    hill_climb,
)
from .domain.ports import Interface
from .domain.transcoder import format_record, transcode_record, transcode_text
from .domain.pinyin import parse_text
from .lib.constants import EXIT_ERROR, EXIT_OK, EXIT_VIOLATIONS
from .lib.logs import configure_logging
from .lib.ports import CLIEnv, FileSystem, PlainTextInterface, RichTextInterface
from .lib.theme import (
    CHART_STYLE,
    CLEAN_STYLE,
    CONFUSION_STYLE,
    REFERENCE_STYLE,
    REPORT_STYLE,
    SEARCH_STYLE,
    VIOLATION_STYLE,
)

logger = logging.getLogger("mandarincs")

_DOMAIN_ERRORS = (
    InvalidSyllableError,
    InvalidToneError,
    SegmentationError,
    InsufficientDataError,
    NumericDomainError,
    TableFormatError,
    LipDataFormatError,
    ValueError,
    OSError,
)


def _load_tables(inv: Invocation, fs: FileSystem) -> CueTables:
    return CueTables(
        syllabary=fs.load_syllabary(inv.syllabary_path),
        allocation=_load_allocation(inv, fs),
        consonants=fs.load_consonants(inv.consonants_path),
    )


def _load_allocation(inv: Invocation, fs: FileSystem) -> VowelAllocation:
    return fs.load_allocation(inv.allocation_path, preliminary=inv.allocation == "preliminary")


def _read_input(inv: Invocation, fs: FileSystem) -> str:
    if inv.text is not None:
        return inv.text
    if inv.input_path is not None:
        return fs.read_text(inv.input_path)
    return sys.stdin.read()


def _transcode_lenient(text: str, tables: CueTables) -> List[CueRecord]:
    records: List[CueRecord] = []
    offset = 0
    for line in unicodedata.normalize("NFC", text).splitlines(keepends=True):
        try:
            parsed = parse_text(line, tables.syllabary)
        except (InvalidSyllableError, InvalidToneError, SegmentationError) as e:
            logger.warning("skipped line at offset %d: %s", offset, e)
        else:
            records.extend(
                transcode_record(s, tables, offset=offset + span.start) for span, s in parsed
            )
        offset += len(line)
    return records


def _totality_gaps(inv: Invocation, fs: FileSystem, tables: CueTables) -> List[Violation]:
    violations = verify_consonant_table(
        tables.consonants, SEMI_COMBINABILITY, fs.load_visemes(inv.visemes_path)
    ) + verify_vowel_allocation(tables.allocation, default_constraints())
    return [v for v in violations if v.kind == "totality"]


def cmd_transcode(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    tables = _load_tables(inv, fs)
    # Other violations still transcode; missing units cannot
    gaps = _totality_gaps(inv, fs, tables)
    if gaps:
        interface.display_violations("Incomplete tables", gaps, **VIOLATION_STYLE)
        return EXIT_VIOLATIONS
    text = _read_input(inv, fs)
    records = _transcode_lenient(text, tables) if inv.lenient else transcode_text(text, tables)
    for record in records:
        print(format_record(record))
    if inv.chart:
        interface.display_chart(consonant_chart(tables.consonants, tables.allocation), **CHART_STYLE)
    return EXIT_OK


def cmd_corpus_stats(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    stats = corpus_stats(fs.load_corpus(inv.corpus_path), fs.load_syllabary(inv.syllabary_path))
    for line in format_stats(stats):
        print(line)
    return EXIT_OK


def cmd_verify(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    consonant_violations = verify_consonant_table(
        fs.load_consonants(inv.consonants_path),
        SEMI_COMBINABILITY,
        fs.load_visemes(inv.visemes_path),
    )
    vowel_violations = verify_vowel_allocation(_load_allocation(inv, fs), default_constraints())
    violations = consonant_violations + vowel_violations

    if not violations:
        interface.display("consonant table and vowel allocation are clean", **CLEAN_STYLE)
        return EXIT_OK
    interface.display_violations("Consonant table", consonant_violations, **VIOLATION_STYLE)
    interface.display_violations("Vowel allocation", vowel_violations, **VIOLATION_STYLE)
    return EXIT_VIOLATIONS


def _speaker_groups(inv: Invocation, samples: Sequence[LipSample]) -> dict[str, List[LipSample]]:
    groups = {str(k): v for k, v in samples_by_speaker(samples).items()}
    if inv.speaker is not None:
        if inv.speaker not in groups:
            raise ValueError(
                f"Speaker {inv.speaker!r} not in lip data (found: {', '.join(sorted(groups)) or 'none'})"
            )
        return {inv.speaker: groups[inv.speaker]}
    if not groups:
        raise InsufficientDataError("Lip data holds no samples")
    return dict(sorted(groups.items()))


def _display_reference(interface: Interface) -> None:
    for label, table in (("preliminary", PRELIMINARY_SCORE_TABLE), ("final", FINAL_SCORE_TABLE)):
        for speaker, (means, printed) in table.items():
            report = report_from_means(means)
            interface.display_report(
                f"{speaker}, {label} (reported average {printed:.2f})",
                report,
                **REFERENCE_STYLE,
            )


def cmd_eval(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    assert inv.lip_csv is not None and inv.seed is not None and inv.repetitions is not None
    alloc = _load_allocation(inv, fs)
    for speaker, samples in _speaker_groups(inv, fs.load_lip_samples(inv.lip_csv)).items():
        scorer = PositionScorer(samples, repetitions=inv.repetitions, seed=inv.seed)
        report = scorer.evaluate(alloc)
        interface.display_report(f"{speaker}, {inv.allocation} allocation", report, alloc, **REPORT_STYLE)
        if inv.confusion:
            for p in POSITIONS:
                members = alloc.members(p)
                interface.display_confusion(
                    f"{speaker}, {p} {POSITION_NAMES[p]}",
                    scorer.confusion(members),
                    summarize_vowels(scorer.points, members),
                    **CONFUSION_STYLE,
                )
    if inv.reference:
        _display_reference(interface)
    return EXIT_OK


def cmd_optimize(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    assert inv.lip_csv is not None and inv.seed is not None and inv.repetitions is not None
    assert inv.search_repetitions is not None
    start = _load_allocation(inv, fs)
    constraints = default_constraints()

    start_violations = verify_vowel_allocation(start, constraints)
    if start_violations:
        interface.display_violations("Start allocation", start_violations, **VIOLATION_STYLE)
        return EXIT_VIOLATIONS

    for speaker, samples in _speaker_groups(inv, fs.load_lip_samples(inv.lip_csv)).items():
        result = hill_climb(
            samples,
            start,
            constraints,
            seed=inv.seed,
            max_iters=inv.max_iters,
            repetitions=inv.search_repetitions,
            final_repetitions=inv.repetitions,
        )
        for line in format_trace(result):
            print(line)
        for line in format_allocation(result.best):
            print(line)
        interface.display_search(result, **SEARCH_STYLE)
        interface.display_report(f"{speaker}, after search", result.score, result.best, **REPORT_STYLE)

        if inv.oracle:
            oracle = exhaustive_swap_search(
                samples,
                start,
                constraints,
                seed=inv.seed,
                repetitions=inv.search_repetitions,
                final_repetitions=inv.repetitions,
            )
            agrees = oracle.best == result.best
            print(f"oracle\t{'agrees' if agrees else 'disagrees'}\t{' '.join(str(m) for m in oracle.moves())}")
            if not agrees:
                interface.display_report(f"{speaker}, two-swap oracle", oracle.score, oracle.best, **REPORT_STYLE)

        if inv.global_search:
            best = global_search(
                samples,
                constraints,
                seed=inv.seed,
                repetitions=inv.search_repetitions,
                final_repetitions=inv.repetitions,
                start=start,
            )
            for line in format_allocation(best.best):
                print(f"global\t{line}")
            interface.display_report(f"{speaker}, global optimum", best.score, best.best, **REPORT_STYLE)
    return EXIT_OK


def cmd_gen_synthetic(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    assert inv.seed is not None
    config = fs.load_synthetic_config(inv.config_path, preset=inv.synthetic)
    text = fs.format_lip_samples(generate_synthetic(config, inv.seed))
    if inv.output_path is None:
        sys.stdout.write(text)
    else:
        fs.write_text(inv.output_path, text)
        logger.info("wrote %s", inv.output_path)
    return EXIT_OK


def cmd_chart(inv: Invocation, fs: FileSystem, interface: Interface) -> int:
    chart = consonant_chart(fs.load_consonants(inv.consonants_path), _load_allocation(inv, fs))
    interface.display_chart(chart, **CHART_STYLE)
    return EXIT_OK


COMMANDS = {
    "transcode": cmd_transcode,
    "corpus-stats": cmd_corpus_stats,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "optimize": cmd_optimize,
    "gen-synthetic": cmd_gen_synthetic,
    "chart": cmd_chart,
}


def main(argv: Optional[Sequence[str]] = None, interface: Optional[Interface] = None) -> int:
    cli = CLIEnv()
    invocation = cli.read_args(argv)
    try:
        invocation = cli.read_env(invocation)
        configure_logging(invocation.log_level)
    except ValueError as e:
        print(f"mandarincs: error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if invocation.random_seed:
        print(f"mandarincs: seed {invocation.seed}", file=sys.stderr)

    interface = interface or (
        RichTextInterface() if RichTextInterface.is_available() else PlainTextInterface()
    )
    try:
        return COMMANDS[invocation.command](invocation, FileSystem(), interface)
    except _DOMAIN_ERRORS as e:
        print(f"mandarincs: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
