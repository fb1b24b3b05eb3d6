from types import MappingProxyType

import pytest

from mandarincs.domain.aggs import ConsonantTable, SwapMove, VowelAllocation
from mandarincs.domain.constants import SEMI_COMBINABILITY
from mandarincs.domain.inventory import (
    candidate_swaps,
    consonant_chart,
    default_constraints,
    default_consonant_table,
    final_allocation,
    preliminary_allocation,
    swap_is_admissible,
    verify_consonant_table,
    verify_vowel_allocation,
    vowel_allocation_diff,
)
from mandarincs.domain.values import Handshape


@pytest.fixture(scope="module")
def visemes(fs):
    return fs.load_visemes()


def kinds(violations):
    return sorted(v.kind for v in violations)


def test_preliminary_allocation():
    assert preliminary_allocation().groups() == {
        "P1": ("o", "e", "an"),
        "P2": ("a", "ou", "en", "er"),
        "P3": ("i", "ang", "ong"),
        "P4": ("u", "ai", "ao"),
        "P5": ("ü", "ei", "eng"),
    }


def test_final_allocation():
    assert final_allocation().groups() == {
        "P1": ("o", "e", "an"),
        "P2": ("a", "ou", "eng", "er"),
        "P3": ("i", "ü", "ang"),
        "P4": ("u", "ai", "ao"),
        "P5": ("ei", "en", "ong"),
    }


def test_allocations_differ_in_four_vowels():
    assert vowel_allocation_diff(preliminary_allocation(), final_allocation()) == (
        "ü",
        "en",
        "eng",
        "ong",
    )


def test_shipped_allocations_match_code(fs):
    assert fs.load_allocation(preliminary=True) == preliminary_allocation()
    assert fs.load_allocation() == final_allocation()


@pytest.mark.parametrize("alloc", [preliminary_allocation(), final_allocation()])
def test_default_allocations_are_clean(alloc):
    assert verify_vowel_allocation(alloc) == []


def test_er_outside_allowed_positions():
    alloc = final_allocation().swap("er", "an")
    assert "placement" in kinds(verify_vowel_allocation(alloc))


def test_overfull_position():
    assignment = dict(final_allocation().assignment)
    assignment["an"] = "P2"
    violations = verify_vowel_allocation(VowelAllocation(MappingProxyType(assignment)))
    assert kinds(violations) == ["capacity", "capacity"]
    assert {v.subjects[0] for v in violations} == {"P1", "P2"}


def test_missing_vowel():
    assignment = dict(final_allocation().assignment)
    del assignment["ü"]
    violations = verify_vowel_allocation(VowelAllocation(MappingProxyType(assignment)))
    assert kinds(violations) == ["capacity", "totality"]
    assert violations[0].subjects == ("ü",)


def test_confusable_vowels_sharing_a_position():
    violations = verify_vowel_allocation(final_allocation().swap("eng", "ong"))
    assert kinds(violations) == ["confusable", "confusable"]
    assert {frozenset(v.subjects) for v in violations} == {
        frozenset(("en", "eng")),
        frozenset(("ou", "ong")),
    }


def test_complementary_pair_may_share_a_position():
    # e and o sit together in P1 of both shipped allocations
    assert final_allocation().lookup("e") == final_allocation().lookup("o")
    assert verify_vowel_allocation(final_allocation()) == []


def test_swap_admissibility():
    constraints = default_constraints()
    alloc = final_allocation()
    assert not swap_is_admissible(alloc, SwapMove("e", "an"), constraints)
    assert not swap_is_admissible(alloc, SwapMove("er", "an"), constraints)
    assert not swap_is_admissible(alloc, SwapMove("eng", "ong"), constraints)
    assert swap_is_admissible(alloc, SwapMove("en", "eng"), constraints)


def test_candidate_swaps_keep_allocation_clean():
    constraints = default_constraints()
    alloc = preliminary_allocation()
    swaps = candidate_swaps(alloc, constraints)
    assert swaps
    for move in swaps:
        assert verify_vowel_allocation(alloc.swap(move.vowel_a, move.vowel_b), constraints) == []


def test_combinability_table_has_32_marks():
    assert sum(len(semis) for semis in SEMI_COMBINABILITY.values()) == 32


def test_default_consonant_table_is_clean(visemes):
    assert verify_consonant_table(default_consonant_table(), SEMI_COMBINABILITY, visemes) == []


def test_shipped_consonant_table_matches_code(fs):
    assert fs.load_consonants() == default_consonant_table()


def test_consonant_groups():
    table = default_consonant_table()
    assert table.members(Handshape(6)) == ("l", "x", "[w]")
    assert table.isolated_vowel_handshape == 5
    assert all(len(table.members(h)) <= 3 for h in table.handshapes())


def test_glide_next_to_combinable_consonant(visemes):
    table = default_consonant_table().moved("sh", Handshape(6))
    violations = verify_consonant_table(table, SEMI_COMBINABILITY, visemes)
    assert kinds(violations) == ["capacity", "co_occurrence"]
    assert violations[1].subjects == ("sh", "[w]")


def test_overfull_handshape_only(visemes):
    table = default_consonant_table().moved("h", Handshape(1))
    violations = verify_consonant_table(table, SEMI_COMBINABILITY, visemes)
    assert kinds(violations) == ["capacity"]


def test_l_must_share_with_w(visemes):
    table = default_consonant_table().moved("l", Handshape(7))
    assert "required_pairing" in kinds(verify_consonant_table(table, SEMI_COMBINABILITY, visemes))


def test_lookalike_consonants(visemes):
    table = default_consonant_table().moved("d", Handshape(5)).moved("m", Handshape(1))
    violations = verify_consonant_table(table, SEMI_COMBINABILITY, visemes)
    assert kinds(violations) == ["viseme", "viseme"]


def test_two_glides_on_one_handshape(visemes):
    table = default_consonant_table().moved("[j]", Handshape(6))
    assert "semiconsonant" in kinds(verify_consonant_table(table, SEMI_COMBINABILITY, visemes))


def test_handshape_out_of_range(visemes):
    table = default_consonant_table().moved("p", Handshape(9))
    assert kinds(verify_consonant_table(table, SEMI_COMBINABILITY, visemes)) == ["range"]


def test_missing_and_unknown_units(visemes):
    assignment = dict(default_consonant_table().assignment)
    del assignment["c"]
    assignment["y"] = Handshape(8)
    table = ConsonantTable(MappingProxyType(assignment), Handshape(5))
    violations = verify_consonant_table(table, SEMI_COMBINABILITY, visemes)
    assert [(v.kind, v.subjects) for v in violations] == [
        ("totality", ("c",)),
        ("totality", ("y",)),
    ]


def test_chart():
    chart = consonant_chart(default_consonant_table(), final_allocation())
    assert len(chart.handshapes) == 8
    assert chart.handshapes[0] == (1, ("p", "d", "j"))
    assert [p for p, _, _ in chart.positions] == ["P1", "P2", "P3", "P4", "P5"]
    assert chart.positions[1][2] == ("a", "ou", "eng", "er")
    assert [(tone, move) for tone, move, _ in chart.tones] == [
        (0, "none"),
        (1, "right"),
        (2, "up"),
        (3, "down_up"),
        (4, "down"),
    ]
    assert chart.isolated_vowel_handshape == 5
