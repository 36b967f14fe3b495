"""Numerical semigroups H in Z>=0, the value semigroups of k[[t^H]].

Membership below the conductor is kept as an int bitmask (bit z set iff
z in H), so every query is a shift and a test.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyInput, GcdNotOne, NotAMember, NsringError, SemigroupTooLarge

MAX_GENERATOR = 10**6
MAX_GENUS = 64


def _apery_weights(gens: tuple[int, ...], n: int) -> list[int]:
    # Dijkstra over residues mod n; edge weights are the generators.
    dist = [-1] * n
    dist[0] = 0
    best = {0: 0}
    heap = [(0, 0)]
    while heap:
        d, res = heapq.heappop(heap)
        if d != best.get(res):
            continue
        dist[res] = d
        for g in gens:
            nd = d + g
            nr = nd % n
            if dist[nr] < 0 and (nr not in best or nd < best[nr]):
                best[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def _minimal_generators(mask: int, conductor: int, multiplicity: int) -> tuple[int, ...]:
    def member(z: int) -> bool:
        return z >= conductor or (z >= 0 and (mask >> z) & 1 == 1)

    found: list[int] = []
    for x in range(1, conductor + multiplicity + 1):
        if member(x) and all(not member(x - g) for g in found):
            found.append(x)
    return tuple(found)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Build instances with :meth:`from_generators` or :meth:`from_gaps`;
    the constructor trusts its arguments.
    """

    generators: tuple[int, ...]
    frobenius: int
    gaps: tuple[int, ...]
    members_mask: int = field(repr=False)

    @classmethod
    def from_generators(
        cls,
        gens: Iterable[int],
        *,
        max_generator: int = MAX_GENERATOR,
        max_genus: int = MAX_GENUS,
    ) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyInput("at least one generator is required")
        if gens[0] <= 0:
            raise NsringError(f"generators must be positive, got {gens[0]}")
        if gens[-1] > max_generator:
            raise SemigroupTooLarge(f"generator {gens[-1]} exceeds cap {max_generator}")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise GcdNotOne(f"gcd of {gens} is {d}")

        m = gens[0]
        weights = _apery_weights(tuple(gens), m)
        frob = max(weights) - m
        genus = sum(w // m for w in weights)
        if genus > max_genus:
            raise SemigroupTooLarge(f"genus {genus} exceeds cap {max_genus}")
        conductor = frob + 1
        mask = 0
        for z in range(conductor):
            if z >= weights[z % m]:
                mask |= 1 << z
        gaps = tuple(z for z in range(1, conductor) if not (mask >> z) & 1)
        minimal = _minimal_generators(mask, conductor, m)
        return cls(minimal, frob, gaps, mask)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        """Build H = Z>=0 minus ``gaps``; the complement must be additively closed."""
        gaps = tuple(sorted(set(gaps)))
        if gaps and gaps[0] <= 0:
            raise NsringError("gaps must be positive")
        conductor = gaps[-1] + 1 if gaps else 0
        mask = (1 << conductor) - 1
        for z in gaps:
            mask &= ~(1 << z)
        members = [z for z in range(conductor) if (mask >> z) & 1]
        for a in members:
            for b in members:
                s = a + b
                if s < conductor and not (mask >> s) & 1:
                    raise NsringError(f"gap set {gaps} is not the complement of a semigroup")
        m = next((z for z in range(1, conductor + 1) if z >= conductor or (mask >> z) & 1), 1)
        minimal = _minimal_generators(mask, conductor, m)
        return cls(minimal, conductor - 1, gaps, mask)

    # -- basic data -------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def is_dvr(self) -> bool:
        return self.frobenius < 0

    def __contains__(self, z: int) -> bool:
        return self.contains(z)

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return (self.members_mask >> z) & 1 == 1

    def small_elements(self) -> tuple[int, ...]:
        """Members below the conductor."""
        return tuple(z for z in range(self.conductor) if (self.members_mask >> z) & 1)

    def elements(self, upto: int) -> Iterator[int]:
        return (z for z in range(upto) if self.contains(z))

    # -- Apery / pseudo-Frobenius ------------------------------------------

    def apery_set(self, n: int) -> tuple[int, ...]:
        """Least member of H in each residue class mod ``n``, sorted."""
        if n <= 0 or n not in self:
            raise NotAMember(f"{n} is not a positive member of {self}")
        best: dict[int, int] = {}
        z = 0
        while len(best) < n:
            if self.contains(z) and z % n not in best:
                best[z % n] = z
            z += 1
        return tuple(sorted(best.values()))

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        if self.is_dvr:
            return (-1,)
        return tuple(
            f for f in self.gaps if all(self.contains(f + g) for g in self.generators)
        )

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    @property
    def is_symmetric(self) -> bool:
        # 2 * genus == conductor; the DVR (genus 0, conductor 0) counts as symmetric.
        return 2 * self.genus == self.conductor

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def semigroup(*gens: int) -> NumericalSemigroup:
    """Shorthand: ``semigroup(5, 7, 9)``."""
    if len(gens) == 1 and not isinstance(gens[0], int):
        return NumericalSemigroup.from_generators(gens[0])
    return NumericalSemigroup.from_generators(gens)
