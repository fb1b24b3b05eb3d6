import pytest

from mandarincs.domain.aggs import SearchResult, SwapMove, TraceStep
from mandarincs.domain.classifier import PositionScorer, samples_by_vowel
from mandarincs.domain.inventory import (
    apply_swap,
    candidate_swaps,
    default_constraints,
    final_allocation,
    preliminary_allocation,
    verify_vowel_allocation,
)
from mandarincs.domain.optimizer import (
    DEFAULT_MIN_GAIN,
    exhaustive_swap_search,
    format_allocation,
    format_trace,
    global_search,
    hill_climb,
    score,
)


@pytest.fixture(scope="module")
def confusion_points(confusion_samples):
    return samples_by_vowel(confusion_samples)


@pytest.fixture(scope="module")
def climbed(confusion_points):
    return hill_climb(confusion_points, preliminary_allocation(), repetitions=10, final_repetitions=20)


def improving_swaps(points, alloc):
    scorer = PositionScorer(points, repetitions=10)
    base = scorer.evaluate(alloc).average
    return {
        frozenset((move.vowel_a, move.vowel_b))
        for move in candidate_swaps(alloc, default_constraints())
        if scorer.evaluate(apply_swap(alloc, move)).average - base > DEFAULT_MIN_GAIN
    }


def test_only_ong_u_and_en_eng_improve_the_preliminary_allocation(confusion_points):
    assert improving_swaps(confusion_points, preliminary_allocation()) == {
        frozenset(("ong", "ü")),
        frozenset(("en", "eng")),
    }


def test_only_en_eng_improves_after_moving_ong(confusion_points):
    middle = apply_swap(preliminary_allocation(), SwapMove("ü", "ong"))
    assert improving_swaps(confusion_points, middle) == {frozenset(("en", "eng"))}


def test_hill_climb_finds_the_two_swaps(climbed):
    moves = climbed.moves()
    assert len(moves) == 2
    assert moves[0].same_as("ong", "ü")
    assert moves[1].same_as("en", "eng")
    assert climbed.best == final_allocation()
    assert climbed.score.average == pytest.approx(100.0)


def test_hill_climb_trace_improves(climbed):
    assert all(step.delta > 0 for step in climbed.trace)
    assert [step.score for step in climbed.trace] == sorted(step.score for step in climbed.trace)
    assert climbed.start == preliminary_allocation()
    assert climbed.evaluations > 5


def test_hill_climb_improves_on_preliminary(confusion_points, climbed):
    before = score(confusion_points, preliminary_allocation(), repetitions=20)
    assert before < climbed.score.average


def test_oracle_agrees_with_hill_climb(confusion_points, climbed):
    oracle = exhaustive_swap_search(confusion_points, preliminary_allocation(), repetitions=10, final_repetitions=20)
    assert oracle.best == climbed.best
    assert {frozenset((m.vowel_a, m.vowel_b)) for m in oracle.moves()} == {
        frozenset(("en", "eng")),
        frozenset(("ong", "ü")),
    }


def test_local_optimum_gives_empty_trace(confusion_points):
    result = hill_climb(confusion_points, final_allocation(), repetitions=5, final_repetitions=5)
    assert result.trace == ()
    assert result.best == final_allocation()


def test_flat_landscape_stops_at_once(separated_samples):
    result = hill_climb(separated_samples, preliminary_allocation(), repetitions=3, final_repetitions=3)
    assert result.trace == ()
    assert result.best == preliminary_allocation()


def test_max_iters_caps_the_trace(confusion_points):
    result = hill_climb(confusion_points, preliminary_allocation(), repetitions=10, max_iters=1)
    assert len(result.trace) == 1
    assert result.moves()[0].same_as("ong", "ü")


def test_best_allocation_stays_clean(climbed):
    assert verify_vowel_allocation(climbed.best) == []


def test_zero_depth_returns_start(confusion_points):
    result = exhaustive_swap_search(confusion_points, preliminary_allocation(), depth=0, repetitions=3)
    assert result.best == preliminary_allocation()
    assert result.trace == ()


@pytest.mark.parametrize("depth", [-1, 3])
def test_depth_is_bounded(confusion_points, depth):
    with pytest.raises(ValueError):
        exhaustive_swap_search(confusion_points, preliminary_allocation(), depth=depth)


def test_max_iters_must_be_positive(confusion_points):
    with pytest.raises(ValueError):
        hill_climb(confusion_points, preliminary_allocation(), max_iters=0)


def test_global_search_reaches_the_ceiling(confusion_points):
    result = global_search(confusion_points, repetitions=3, final_repetitions=3)
    assert verify_vowel_allocation(result.best) == []
    assert result.score.average == pytest.approx(100.0)
    assert result.trace == ()


def test_format_trace_and_allocation():
    result = SearchResult(
        start=preliminary_allocation(),
        best=final_allocation(),
        score=None,
        trace=(TraceStep(SwapMove("en", "eng"), 12.5, 90.0),),
    )
    assert format_trace(result) == ["swap en<->eng +12.5000"]
    lines = format_allocation(final_allocation())
    assert len(lines) == 5
    assert lines[1].split("\t")[0] == "P2"
    assert lines[1].split("\t")[2] == "a ou eng er"
