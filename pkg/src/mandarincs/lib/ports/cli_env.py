# pyright: strict

import argparse
import os
import secrets
from typing import Any, Optional, Sequence, cast

from ...domain.aggs import Invocation
from ...domain.constants import DEFAULT_REPETITIONS, DEFAULT_SEARCH_REPETITIONS, DEFAULT_SEED
from ...domain.ports import CLIEnv as DomainCLIEnv
from ...domain.values import AllocationChoice, Command, SyntheticPreset
from ...lib.constants import (
    DEFAULT_LOG_LEVEL,
    LOG_LEVEL_ENV_VAR,
    REPETITIONS_ENV_VAR,
    SEED_ENV_VAR,
)
from ...lib.utils import first_set, pipe


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw}")
    return value


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        help=f"Logging level (default: ${LOG_LEVEL_ENV_VAR} or {DEFAULT_LOG_LEVEL}).",
    )

    tables = argparse.ArgumentParser(add_help=False)
    tables.add_argument(
        "--allocation",
        choices=["preliminary", "final"],
        default=None,
        help="Shipped vowel allocation to use.",
    )
    tables.add_argument("--allocation-file", type=str, default=None, help="Vowel allocation table (vowel=P1..P5).")
    tables.add_argument("--consonants", type=str, default=None, help="Consonant table (unit=handshape).")
    tables.add_argument("--syllabary", type=str, default=None, help="Syllabary file (initial,final).")

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None, help=f"Random seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED}).")
    seeded.add_argument("--random-seed", action="store_true", help="Draw a fresh seed and report it on stderr.")
    seeded.add_argument(
        "--repetitions",
        type=_positive_int,
        default=None,
        help=f"Train/test repetitions per position (default: ${REPETITIONS_ENV_VAR} or {DEFAULT_REPETITIONS}).",
    )

    lips = argparse.ArgumentParser(add_help=False)
    lips.add_argument("lip_csv", type=str, help="Lip samples: speaker,word,vowel,frame,A,B.")
    lips.add_argument("--speaker", type=str, default=None, help="Only evaluate this speaker.")

    parser = argparse.ArgumentParser(
        prog="mandarincs",
        description="Mandarin Chinese Cued Speech: transcode Pinyin and evaluate vowel allocations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transcode", parents=[common, tables], help="Transcode Pinyin into cue tokens.")
    p.add_argument("text", nargs="?", default=None, help="Pinyin text; omit to read --input.")
    p.add_argument("-i", "--input", type=str, default=None, help="UTF-8 file of Pinyin text.")
    p.add_argument("--lenient", action="store_true", help="Skip unparsable lines instead of failing.")
    p.add_argument("--chart", action="store_true", help="Also print the cue chart.")

    p = sub.add_parser("corpus-stats", parents=[common], help="Count base vowels in a corpus.")
    p.add_argument("--corpus", type=str, default=None, help="One word per line (default: shipped corpus).")
    p.add_argument("--syllabary", type=str, default=None, help="Syllabary file (initial,final).")

    p = sub.add_parser("verify", parents=[common, tables], help="Check consonant and vowel tables.")
    p.add_argument("--visemes", type=str, default=None, help="Viseme classes (unit=class).")

    p = sub.add_parser("eval", parents=[common, tables, seeded, lips], help="Score an allocation on lip data.")
    p.add_argument("--reference", action="store_true", help="Also print the reported score tables.")
    p.add_argument(
        "--confusion",
        action="store_true",
        help="Also print each position's confusion matrix and fitted vowel Gaussians.",
    )

    p = sub.add_parser("optimize", parents=[common, tables, seeded, lips], help="Search for a better allocation.")
    p.add_argument(
        "--search-repetitions",
        type=_positive_int,
        default=None,
        help=f"Repetitions per evaluation during the search (default: {DEFAULT_SEARCH_REPETITIONS}).",
    )
    p.add_argument("--max-iters", type=_positive_int, default=50, help="Maximum accepted swaps.")
    p.add_argument("--oracle", action="store_true", help="Compare with the exhaustive two-swap search.")
    p.add_argument("--global", dest="global_search", action="store_true", help="Search every allocation (slow).")

    p = sub.add_parser("gen-synthetic", parents=[common, seeded], help="Write synthetic lip samples as CSV.")
    p.add_argument("--config", type=str, default=None, help="JSON generator config.")
    p.add_argument(
        "--preset",
        choices=["separated", "confusion"],
        default="separated",
        help="Shipped config used when --config is absent.",
    )
    p.add_argument("-o", "--output", type=str, default=None, help="Output CSV (default: stdout).")

    sub.add_parser("chart", parents=[common, tables], help="Print the cue chart.")

    return parser


class CLIEnv(DomainCLIEnv):
    def read_args(self, argv: Optional[Sequence[str]] = None) -> Invocation:
        args = build_parser().parse_args(argv)
        command = cast(Command, args.command)

        def get(name: str, default: Any = None) -> Any:
            return getattr(args, name, default)

        # optimize starts from the preliminary allocation unless told otherwise
        allocation = get("allocation") or ("preliminary" if command == "optimize" else "final")

        return Invocation(
            command=command,
            text=get("text"),
            input_path=get("input"),
            syllabary_path=get("syllabary"),
            corpus_path=get("corpus"),
            allocation_path=get("allocation_file"),
            consonants_path=get("consonants"),
            visemes_path=get("visemes"),
            lip_csv=get("lip_csv"),
            config_path=get("config"),
            output_path=get("output"),
            allocation=cast(AllocationChoice, allocation),
            speaker=get("speaker"),
            seed=get("seed"),
            random_seed=bool(get("random_seed", False)),
            repetitions=get("repetitions"),
            search_repetitions=get("search_repetitions"),
            max_iters=int(get("max_iters", 50)),
            oracle=bool(get("oracle", False)),
            global_search=bool(get("global_search", False)),
            synthetic=cast(SyntheticPreset, get("preset", "separated")),
            lenient=bool(get("lenient", False)),
            chart=bool(get("chart", False)),
            reference=bool(get("reference", False)),
            confusion=bool(get("confusion", False)),
            log_level=get("log_level"),
        )

    def read_env(self, invocation: Invocation) -> Invocation:
        env_seed, env_repetitions = pipe(
            [SEED_ENV_VAR, REPETITIONS_ENV_VAR],
            lambda names: map(_env_int, names),
            tuple,
        )

        # CLI args take priority over environment variables
        if invocation.random_seed:
            invocation.seed = secrets.randbits(32)
        invocation.seed = first_set(invocation.seed, env_seed, DEFAULT_SEED)
        invocation.repetitions = first_set(invocation.repetitions, env_repetitions, DEFAULT_REPETITIONS)
        invocation.search_repetitions = first_set(invocation.search_repetitions, DEFAULT_SEARCH_REPETITIONS)
        invocation.log_level = first_set(invocation.log_level, os.getenv(LOG_LEVEL_ENV_VAR), DEFAULT_LOG_LEVEL)

        if invocation.repetitions is not None and invocation.repetitions < 1:
            raise ValueError(f"{REPETITIONS_ENV_VAR} must be positive, got {invocation.repetitions}")
        return invocation
