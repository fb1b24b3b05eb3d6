# pyright: strict

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .aggs import (
    AllocationConstraints,
    EvalReport,
    LipSample,
    SearchResult,
    SwapMove,
    TraceStep,
    VowelAllocation,
)
from .classifier import PositionScorer, VowelPoints
from .constants import (
    BASE_VOWELS,
    DEFAULT_REPETITIONS,
    DEFAULT_SEARCH_REPETITIONS,
    DEFAULT_SEED,
    DEFAULT_TRAIN_FRACTION,
    POSITION_NAMES,
    POSITIONS,
)
from .inventory import apply_swap, candidate_swaps, default_constraints, pair_forbidden
from .values import BaseVowel, Position

logger = logging.getLogger(__name__)

DEFAULT_MIN_GAIN: float = 1e-9
MAX_ORACLE_DEPTH: int = 2


def score(
    data: Sequence[LipSample] | VowelPoints,
    alloc: VowelAllocation,
    *,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int = DEFAULT_SEED,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    scorer: Optional[PositionScorer] = None,
) -> float:
    scorer = scorer or PositionScorer(
        data, train_fraction=train_fraction, repetitions=repetitions, seed=seed
    )
    return float(scorer.evaluate(alloc).average)


def _final_report(
    scorer: PositionScorer, best: VowelAllocation, repetitions: int
) -> EvalReport:
    if repetitions == scorer.repetitions:
        return scorer.evaluate(best)
    return PositionScorer(
        scorer.points,
        train_fraction=scorer.train_fraction,
        repetitions=repetitions,
        seed=scorer.seed,
    ).evaluate(best)


def hill_climb(
    data: Sequence[LipSample] | VowelPoints,
    start: VowelAllocation,
    constraints: Optional[AllocationConstraints] = None,
    *,
    seed: int = DEFAULT_SEED,
    max_iters: int = 50,
    repetitions: int = DEFAULT_SEARCH_REPETITIONS,
    final_repetitions: int = DEFAULT_REPETITIONS,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    min_gain: float = DEFAULT_MIN_GAIN,
) -> SearchResult:
    """Steepest-ascent search over admissible pairwise swaps.

    Every round scores all swaps that keep the allocation clean and takes the
    best one if it gains more than `min_gain`. The winner is re-scored with
    `final_repetitions`.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    constraints = constraints or default_constraints()
    scorer = PositionScorer(
        data, train_fraction=train_fraction, repetitions=repetitions, seed=seed
    )

    current = start
    current_score = float(scorer.evaluate(current).average)
    trace: List[TraceStep] = []

    for it in range(max_iters):
        best_move: Optional[SwapMove] = None
        best_score = current_score
        for move in candidate_swaps(current, constraints):
            s = float(scorer.evaluate(apply_swap(current, move)).average)
            logger.debug("round %d: %s -> %.4f", it + 1, move, s)
            if s > best_score:
                best_move, best_score = move, s

        if best_move is None or best_score - current_score <= min_gain:
            logger.info("local optimum after %d round(s) at %.4f", it, current_score)
            break

        trace.append(TraceStep(best_move, best_score - current_score, best_score))
        logger.info("accepted %s (%+.4f -> %.4f)", best_move, best_score - current_score, best_score)
        current, current_score = apply_swap(current, best_move), best_score

    return SearchResult(
        start=start,
        best=current,
        score=_final_report(scorer, current, final_repetitions),
        trace=tuple(trace),
        evaluations=scorer.evaluations,
    )


def exhaustive_swap_search(
    data: Sequence[LipSample] | VowelPoints,
    start: VowelAllocation,
    constraints: Optional[AllocationConstraints] = None,
    *,
    depth: int = MAX_ORACLE_DEPTH,
    seed: int = DEFAULT_SEED,
    repetitions: int = DEFAULT_SEARCH_REPETITIONS,
    final_repetitions: int = DEFAULT_REPETITIONS,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
) -> SearchResult:
    """Best allocation reachable from `start` with at most `depth` admissible swaps.

    Visits at most C(16, 2) ** depth allocations, so depth is capped at 2.
    Allocations reached by several paths keep the shortest one.
    """
    if not 0 <= depth <= MAX_ORACLE_DEPTH:
        raise ValueError(f"depth must lie in 0-{MAX_ORACLE_DEPTH}, got {depth}")
    constraints = constraints or default_constraints()
    scorer = PositionScorer(
        data, train_fraction=train_fraction, repetitions=repetitions, seed=seed
    )

    start_score = float(scorer.evaluate(start).average)
    seen: Dict[VowelAllocation, Tuple[SwapMove, ...]] = {start: ()}
    frontier: List[VowelAllocation] = [start]
    best, best_score = start, start_score

    for _ in range(depth):
        next_frontier: List[VowelAllocation] = []
        for alloc in frontier:
            for move in candidate_swaps(alloc, constraints):
                nxt = apply_swap(alloc, move)
                if nxt in seen:
                    continue
                seen[nxt] = seen[alloc] + (move,)
                next_frontier.append(nxt)
                s = float(scorer.evaluate(nxt).average)
                if s > best_score:
                    best, best_score = nxt, s
        frontier = next_frontier

    logger.info("oracle visited %d allocation(s); best %.4f", len(seen), best_score)

    trace: List[TraceStep] = []
    alloc, prev = start, start_score
    for move in seen[best]:
        alloc = apply_swap(alloc, move)
        s = float(scorer.evaluate(alloc).average)
        trace.append(TraceStep(move, s - prev, s))
        prev = s

    return SearchResult(
        start=start,
        best=best,
        score=_final_report(scorer, best, final_repetitions),
        trace=tuple(trace),
        evaluations=scorer.evaluations,
    )


def _group_admissible(
    group: Tuple[BaseVowel, ...], position: Position, constraints: AllocationConstraints
) -> bool:
    if "er" in group and position not in constraints.er_positions:
        return False
    return not any(
        pair_forbidden(frozenset((a, b)), constraints) for a, b in combinations(group, 2)
    )


def global_search(
    data: Sequence[LipSample] | VowelPoints,
    constraints: Optional[AllocationConstraints] = None,
    *,
    seed: int = DEFAULT_SEED,
    repetitions: int = DEFAULT_SEARCH_REPETITIONS,
    final_repetitions: int = DEFAULT_REPETITIONS,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    start: Optional[VowelAllocation] = None,
) -> SearchResult:
    """Best clean allocation over every partition with the position capacities.

    The average score splits into per-position terms, so positions are filled
    one at a time keeping only the best partial fill per set of used vowels.
    Every admissible vowel group gets scored once, which is the slow part.
    """
    constraints = constraints or default_constraints()
    scorer = PositionScorer(
        data, train_fraction=train_fraction, repetitions=repetitions, seed=seed
    )

    n = len(BASE_VOWELS)
    # used-vowel mask -> (sum of position scores, groups chosen so far)
    layer: Dict[int, Tuple[float, Tuple[Tuple[BaseVowel, ...], ...]]] = {0: (0.0, ())}

    for position in POSITIONS:
        capacity = constraints.capacities[position]
        nxt: Dict[int, Tuple[float, Tuple[Tuple[BaseVowel, ...], ...]]] = {}
        for used, (total, groups) in layer.items():
            free = [i for i in range(n) if not used >> i & 1]
            for idx in combinations(free, capacity):
                group = tuple(BASE_VOWELS[i] for i in idx)
                if not _group_admissible(group, position, constraints):
                    continue
                mask = used
                for i in idx:
                    mask |= 1 << i
                candidate = total + float(scorer.score_group(group).mean)
                if mask not in nxt or candidate > nxt[mask][0]:
                    nxt[mask] = (candidate, groups + (group,))
        layer = nxt
        logger.debug("%s filled: %d partial allocation(s)", position, len(layer))

    if not layer:
        raise ValueError("No allocation satisfies the constraints")

    total, groups = max(layer.values(), key=lambda t: t[0])
    best = VowelAllocation.from_groups(dict(zip(POSITIONS, groups)))
    logger.info("global optimum %.4f after %d group evaluation(s)", total / len(POSITIONS), scorer.evaluations)

    return SearchResult(
        start=start or best,
        best=best,
        score=_final_report(scorer, best, final_repetitions),
        trace=(),
        evaluations=scorer.evaluations,
    )


def format_trace(result: SearchResult) -> List[str]:
    return [f"swap {step.move} {step.delta:+.4f}" for step in result.trace]


def format_allocation(alloc: VowelAllocation) -> List[str]:
    return [
        f"{p}\t{POSITION_NAMES[p]}\t{' '.join(alloc.members(p))}" for p in POSITIONS
    ]
