"""Relative ideals of a numerical semigroup (value sets of monomial fractional ideals).

A relative ideal E is stored as ``(lo, hi, mask)``: ``lo`` is min(E), every
integer >= ``hi`` lies in E, and bit ``i`` of ``mask`` says whether
``lo + i`` lies in E for ``lo + i < hi``.  After construction ``hi`` is the
least such bound (the ideal's conductor) and bit 0 is set unless E is a
half-line, in which case ``lo == hi`` and ``mask == 0``.

Products, colons, duals and traces reduce to shifts, ORs and ANDs on those
masks.  Sums only need the minimal generators of one factor, because for
H-ideals ``E + F = E + mingens(F)``.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import AmbientMismatch, EmptyGenerators, NotNested
from .semigroup import NumericalSemigroup


def _trim(lo: int, hi: int, mask: int) -> tuple[int, int, int]:
    width = hi - lo
    mask &= (1 << width) - 1 if width > 0 else 0
    # Drop set bits at the top of the window into the tail.
    while width > 0 and (mask >> (width - 1)) & 1:
        width -= 1
    mask &= (1 << width) - 1
    hi = lo + width
    if mask == 0:
        return hi, hi, 0
    shift = (mask & -mask).bit_length() - 1
    return lo + shift, hi, mask >> shift


class RelativeIdeal:
    """An H-relative ideal E of Z: E + H ⊆ E, bounded below, cofinite above."""

    __slots__ = ("semigroup", "lo", "hi", "mask", "_mingens")

    def __init__(self, semigroup: NumericalSemigroup, lo: int, hi: int, mask: int):
        lo, hi, mask = _trim(lo, hi, mask)
        object.__setattr__(self, "semigroup", semigroup)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "_mingens", None)

    def __setattr__(self, name, value):
        raise AttributeError("RelativeIdeal is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_generators(cls, H: NumericalSemigroup, gens: Iterable[int]) -> "RelativeIdeal":
        gens = sorted(set(gens))
        if not gens:
            raise EmptyGenerators("an ideal needs at least one generator")
        lo = gens[0]
        hi = lo + H.conductor
        mask = 0
        for g in gens:
            if g - lo < H.conductor:
                mask |= H.members_mask << (g - lo)
            # g + [c, inf) lies beyond hi already.
        return cls(H, lo, hi, mask)

    @classmethod
    def from_values(cls, H: NumericalSemigroup, small: Iterable[int], conductor: int) -> "RelativeIdeal":
        """E = small ∪ [conductor, ∞); raises if that set is not H-closed."""
        small = [v for v in small if v < conductor]
        lo = min(small, default=conductor)
        mask = 0
        for v in small:
            mask |= 1 << (v - lo)
        E = cls(H, lo, conductor, mask)
        if E != cls.from_generators(H, E.minimal_generators):
            raise ValueError("value set is not closed under adding the semigroup")
        return E

    @classmethod
    def principal(cls, H: NumericalSemigroup, z: int = 0) -> "RelativeIdeal":
        return cls(H, z, z + H.conductor, H.members_mask)

    # -- basic queries ------------------------------------------------------

    @property
    def min_value(self) -> int:
        return self.lo

    @property
    def conductor(self) -> int:
        return self.hi

    def __contains__(self, z: int) -> bool:
        if z >= self.hi:
            return True
        if z < self.lo:
            return False
        return (self.mask >> (z - self.lo)) & 1 == 1

    def small_values(self) -> tuple[int, ...]:
        return tuple(self.lo + i for i in range(self.hi - self.lo) if (self.mask >> i) & 1)

    def window(self, lo: int, hi: int) -> int:
        """Membership bits of E on [lo, hi) as an int (bit i <-> lo + i)."""
        width = hi - lo
        if width <= 0:
            return 0
        full = (1 << width) - 1
        if self.lo >= lo:
            bits = self.mask << (self.lo - lo)
        else:
            bits = self.mask >> (lo - self.lo)
        tail_start = max(self.hi - lo, 0)
        if tail_start < width:
            bits |= full & ~((1 << tail_start) - 1)
        return bits & full

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.semigroup == other.semigroup
            and self.lo == other.lo
            and self.hi == other.hi
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.semigroup.generators, self.lo, self.hi, self.mask))

    def __repr__(self) -> str:
        return f"RelativeIdeal({self.semigroup}, {self})"

    def __str__(self) -> str:
        vals = ", ".join(map(str, self.small_values()))
        return "{" + vals + "} ∪ [" + str(self.hi) + ",∞)"

    def _check(self, other: "RelativeIdeal") -> None:
        if self.semigroup != other.semigroup:
            raise AmbientMismatch(f"{self.semigroup} vs {other.semigroup}")

    def issubset(self, other: "RelativeIdeal") -> bool:
        self._check(other)
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return self.window(lo, hi) & ~other.window(lo, hi) == 0

    __le__ = issubset

    # -- generators ----------------------------------------------------------

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """E minus (M + E), with M the maximal ideal of H."""
        if self._mingens is None:
            gens = self.semigroup.generators
            out = tuple(
                z
                for z in range(self.lo, self.hi + gens[0] + 1)
                if z in self and all((z - a) not in self for a in gens)
            )
            object.__setattr__(self, "_mingens", out)
        return self._mingens

    @property
    def nu(self) -> int:
        return len(self.minimal_generators)

    # -- arithmetic ----------------------------------------------------------

    def shift(self, z: int) -> "RelativeIdeal":
        return RelativeIdeal(self.semigroup, self.lo + z, self.hi + z, self.mask)

    def normalize(self) -> "RelativeIdeal":
        return self.shift(-self.lo)

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        return self.multiply(other)

    def multiply(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Value set of the product ideal: {e + f}."""
        self._check(other)
        lo = self.lo + other.lo
        hi = self.hi + other.lo
        acc = 0
        for g in other.minimal_generators:
            acc |= self.mask << (g - other.lo)
        # E + min(F) already contributes the whole tail from hi.
        return RelativeIdeal(self.semigroup, lo, hi, acc)

    def power(self, n: int) -> "RelativeIdeal":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = unit_ideal(self.semigroup)
        for _ in range(n):
            result = result.multiply(self)
        return result

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """The quotient E - F = {z : z + F ⊆ E}, i.e. Hom(F, E)."""
        self._check(other)
        gens = other.minimal_generators
        width = self.hi - self.lo
        span = gens[-1] - other.lo
        ext = self.mask | (((1 << span) - 1) << width)
        acc = (1 << width) - 1
        for g in gens:
            acc &= ext >> (g - other.lo)
        return RelativeIdeal(self.semigroup, self.lo - other.lo, self.hi - other.lo, acc)

    __sub__ = colon

    def dual(self) -> "RelativeIdeal":
        return unit_ideal(self.semigroup).colon(self)

    def bidual(self) -> "RelativeIdeal":
        return self.dual().dual()

    def trace(self) -> "RelativeIdeal":
        return self.multiply(self.dual())

    # -- predicates ----------------------------------------------------------

    def is_closed(self) -> bool:
        return self.colon(self) == unit_ideal(self.semigroup)

    def is_reflexive(self) -> bool:
        return self.bidual() == self

    def is_principal(self) -> bool:
        return self.nu == 1

    def is_isomorphic(self, other: "RelativeIdeal") -> bool:
        self._check(other)
        return self.normalize() == other.normalize()

    def reduction_number(self) -> int:
        """Least n >= 0 with E^(n+1) = min(E) + E^n."""
        P = unit_ideal(self.semigroup)
        E = self.normalize()
        n = 0
        while True:
            Q = P.multiply(E)
            if Q == P:
                return n
            P = Q
            n += 1


def unit_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal.principal(H, 0)


def maximal_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal.from_generators(H, H.generators)


def length_between(E: RelativeIdeal, F: RelativeIdeal) -> int:
    """λ(E/F) = |E \\ F| for F ⊆ E."""
    E._check(F)
    lo = min(E.lo, F.lo)
    hi = max(E.hi, F.hi)
    e, f = E.window(lo, hi), F.window(lo, hi)
    if f & ~e:
        raise NotNested(f"{F} is not contained in {E}")
    return (e & ~f).bit_count()


def iter_values(E: RelativeIdeal, upto: int) -> Iterator[int]:
    return (z for z in range(E.lo, upto) if z in E)
