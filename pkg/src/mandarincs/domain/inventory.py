# pyright: strict

from collections import defaultdict
from itertools import combinations
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

from .aggs import (
    AllocationConstraints,
    ConsonantTable,
    CueChart,
    SwapMove,
    Violation,
    VisemeTable,
    VowelAllocation,
)
from .constants import (
    BASE_VOWELS,
    COMPLEMENTARY_VOWEL_PAIRS,
    CONFUSABLE_VOWEL_PAIRS,
    CONSONANT_UNITS,
    POSITION_NAMES,
    TONE_DESCRIPTIONS,
    TONE_HEAD_MOVES,
    CO_OCCURRENCE_WHITELIST,
    ER_POSITIONS,
    HANDSHAPE_CAPACITY,
    HANDSHAPE_COUNT,
    INITIALS,
    OPTIMIZATION_SWAPS,
    POSITION_CAPACITIES,
    POSITIONS,
    PRELIMINARY_ALLOCATION,
    REQUIRED_PAIRINGS,
    SEMICONSONANTS,
)
from .values import BaseVowel, ConsonantUnit, Handshape, Initial, Semiconsonant

SemiCombinability = Mapping[Initial, frozenset[Semiconsonant]]


def preliminary_allocation() -> VowelAllocation:
    return VowelAllocation.from_groups(PRELIMINARY_ALLOCATION)


def apply_swap(alloc: VowelAllocation, move: SwapMove) -> VowelAllocation:
    return alloc.swap(move.vowel_a, move.vowel_b)


def final_allocation() -> VowelAllocation:
    alloc = preliminary_allocation()
    for a, b in OPTIMIZATION_SWAPS:
        alloc = apply_swap(alloc, SwapMove(a, b))
    return alloc


def default_constraints() -> AllocationConstraints:
    return AllocationConstraints(
        confusable_pairs=CONFUSABLE_VOWEL_PAIRS,
        complementary_pairs=COMPLEMENTARY_VOWEL_PAIRS,
        er_positions=ER_POSITIONS,
        capacities=MappingProxyType(dict(POSITION_CAPACITIES)),
    )


def default_consonant_table() -> ConsonantTable:
    """Consonant table shipped with the package.

    Mirrors `data/consonants.txt`; kept in code so the library works without
    touching the filesystem. `tests/test_inventory.py` checks the two agree.
    """
    groups: Dict[int, Tuple[ConsonantUnit, ...]] = {
        1: ("p", "d", "j"),
        2: ("k", "z", "n"),
        3: ("s", "r", "h"),
        4: ("b", "[ɥ]", "sh"),
        5: ("t", "m", "f"),
        6: ("l", "[w]", "x"),
        7: ("g", "q", "ch"),
        8: ("[j]", "zh", "c"),
    }
    return ConsonantTable(
        assignment=MappingProxyType(
            {u: Handshape(h) for h, units in groups.items() for u in units}
        ),
        isolated_vowel_handshape=Handshape(5),
    )


def verify_consonant_table(
    table: ConsonantTable,
    combinability: SemiCombinability,
    visemes: VisemeTable,
) -> List[Violation]:
    violations: List[Violation] = []

    missing = [u for u in CONSONANT_UNITS if u not in table.assignment]
    unknown = [u for u in table.assignment if u not in CONSONANT_UNITS]
    if missing:
        violations.append(
            Violation("totality", f"units without a handshape: {', '.join(missing)}", tuple(missing))
        )
    if unknown:
        violations.append(
            Violation("totality", f"unknown units: {', '.join(unknown)}", tuple(unknown))
        )

    for unit, h in table.assignment.items():
        if not 1 <= int(h) <= HANDSHAPE_COUNT:
            violations.append(
                Violation("range", f"{unit} uses handshape {h}, outside 1-{HANDSHAPE_COUNT}", (unit,))
            )
    if not 1 <= int(table.isolated_vowel_handshape) <= HANDSHAPE_COUNT:
        violations.append(
            Violation(
                "range",
                f"isolated-vowel handshape {table.isolated_vowel_handshape} outside 1-{HANDSHAPE_COUNT}",
                ("*",),
            )
        )

    by_handshape: Dict[Handshape, List[ConsonantUnit]] = defaultdict(list)
    for unit in CONSONANT_UNITS:
        if unit in table.assignment:
            by_handshape[table.assignment[unit]].append(unit)

    for h in sorted(by_handshape):
        units = by_handshape[h]
        if len(units) > HANDSHAPE_CAPACITY:
            violations.append(
                Violation(
                    "capacity",
                    f"handshape {h} codes {len(units)} units ({', '.join(units)}), at most {HANDSHAPE_CAPACITY}",
                    tuple(units),
                )
            )

        semis = [u for u in units if u in SEMICONSONANTS]
        if len(semis) > 1:
            violations.append(
                Violation(
                    "semiconsonant",
                    f"glides {', '.join(semis)} share handshape {h}",
                    tuple(semis),
                )
            )

        for unit in units:
            if unit not in INITIALS:
                continue
            for semi in semis:
                if semi in combinability.get(unit, frozenset()) and (
                    (unit, semi) not in CO_OCCURRENCE_WHITELIST
                ):
                    violations.append(
                        Violation(
                            "co_occurrence",
                            f"{unit} can precede {semi} but shares handshape {h} with it",
                            (unit, semi),
                        )
                    )

        for a, b in combinations(units, 2):
            va, vb = visemes.get(a), visemes.get(b)
            if va is not None and va == vb:
                violations.append(
                    Violation(
                        "viseme",
                        f"{a} and {b} look alike ({va}) and share handshape {h}",
                        (a, b),
                    )
                )

    for a, b in sorted(REQUIRED_PAIRINGS):
        ha, hb = table.assignment.get(a), table.assignment.get(b)
        if ha is not None and hb is not None and ha != hb:
            violations.append(
                Violation(
                    "required_pairing",
                    f"{a} must share a handshape with {b} ({ha} vs {hb})",
                    (a, b),
                )
            )

    return violations


def pair_forbidden(
    pair: frozenset[BaseVowel], constraints: AllocationConstraints
) -> bool:
    return pair in constraints.confusable_pairs and pair not in constraints.complementary_pairs


def verify_vowel_allocation(
    alloc: VowelAllocation,
    constraints: Optional[AllocationConstraints] = None,
) -> List[Violation]:
    constraints = constraints or default_constraints()
    violations: List[Violation] = []

    missing = [v for v in BASE_VOWELS if v not in alloc.assignment]
    unknown = [str(v) for v in alloc.assignment if v not in BASE_VOWELS]
    if missing:
        violations.append(
            Violation("totality", f"vowels without a position: {', '.join(missing)}", tuple(missing))
        )
    if unknown:
        violations.append(
            Violation("totality", f"unknown vowels: {', '.join(unknown)}", tuple(unknown))
        )

    for pos in POSITIONS:
        members = alloc.members(pos)
        expected = constraints.capacities.get(pos, 0)
        if len(members) != expected:
            violations.append(
                Violation(
                    "capacity",
                    f"{pos} holds {len(members)} vowels ({', '.join(members)}), expected {expected}",
                    (pos, *members),
                )
            )
        for a, b in combinations(members, 2):
            if pair_forbidden(frozenset((a, b)), constraints):
                violations.append(
                    Violation(
                        "confusable",
                        f"{a} and {b} have similar lip shapes and share {pos}",
                        (a, b),
                    )
                )

    er_pos = alloc.assignment.get("er")
    if er_pos is not None and er_pos not in constraints.er_positions:
        violations.append(
            Violation(
                "placement",
                f"er sits in {er_pos}; allowed: {', '.join(sorted(constraints.er_positions))}",
                ("er", er_pos),
            )
        )

    return violations


def swap_is_admissible(
    alloc: VowelAllocation,
    move: SwapMove,
    constraints: AllocationConstraints,
) -> bool:
    """Cheap check that a swap keeps the allocation clean.

    Only the two touched positions can change, so only they are re-checked.
    """
    pa, pb = alloc.lookup(move.vowel_a), alloc.lookup(move.vowel_b)
    if pa == pb:
        return False
    for vowel, dest in ((move.vowel_a, pb), (move.vowel_b, pa)):
        if vowel == "er" and dest not in constraints.er_positions:
            return False
    swapped = alloc.swap(move.vowel_a, move.vowel_b)
    for pos in (pa, pb):
        for a, b in combinations(swapped.members(pos), 2):
            if pair_forbidden(frozenset((a, b)), constraints):
                return False
    return True


def candidate_swaps(
    alloc: VowelAllocation, constraints: AllocationConstraints
) -> List[SwapMove]:
    return [
        SwapMove(a, b)
        for a, b in combinations(BASE_VOWELS, 2)
        if swap_is_admissible(alloc, SwapMove(a, b), constraints)
    ]


def vowel_allocation_diff(
    a: VowelAllocation, b: VowelAllocation
) -> Tuple[BaseVowel, ...]:
    return tuple(v for v in BASE_VOWELS if a.assignment.get(v) != b.assignment.get(v))


def consonant_chart(table: ConsonantTable, alloc: VowelAllocation) -> CueChart:
    """Summary of the whole cue system: handshapes, positions and tones."""
    return CueChart(
        handshapes=tuple((h, table.members(h)) for h in table.handshapes()),
        positions=tuple(
            (p, POSITION_NAMES[p], alloc.members(p)) for p in POSITIONS
        ),
        tones=tuple(
            (tone, move, TONE_DESCRIPTIONS[move])
            for tone, move in sorted(TONE_HEAD_MOVES.items())
        ),
        isolated_vowel_handshape=table.isolated_vowel_handshape,
    )
