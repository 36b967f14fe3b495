"""Genus-tree enumeration of numerical semigroups."""
from __future__ import annotations

from typing import Iterator

from .errors import GuardExceeded
from .semigroup import NumericalSemigroup

HARD_MAX_GENUS = 40


def children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Remove each minimal generator larger than the Frobenius number."""
    return [
        NumericalSemigroup.from_gaps(H.gaps + (g,))
        for g in H.generators
        if g > H.frobenius
    ]


def enumerate_semigroups(max_genus: int, *, hard_cap: int = HARD_MAX_GENUS) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= max_genus, exactly once.

    Order: by genus, then by the lexicographic gap tuple.
    """
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    if max_genus > hard_cap:
        raise GuardExceeded(f"max_genus {max_genus} exceeds hard cap {hard_cap}")
    level = [NumericalSemigroup.from_gaps(())]
    for genus in range(max_genus + 1):
        level.sort(key=lambda H: H.gaps)
        yield from level
        if genus == max_genus:
            break
        level = [child for H in level for child in children(H)]


def count_by_genus(max_genus: int) -> list[int]:
    counts = [0] * (max_genus + 1)
    for H in enumerate_semigroups(max_genus):
        counts[H.genus] += 1
    return counts
