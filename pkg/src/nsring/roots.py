"""Roots of the canonical ideal: monomial ideals L with L^n ≅ K.

The search runs over normalized monomial ideals H ⊆ L ⊆ Z>=0, which are
exactly L = H ∪ (S + H) with S a set of gaps.  All of them, and all their
powers, have conductor <= c(H), so the whole search lives on the bit window
[0, c).  Non-monomial roots are out of reach of this search.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels, degrees
from .errors import GenusGuardExceeded, GorensteinInput
from .ideal import RelativeIdeal
from .semigroup import NumericalSemigroup

DEFAULT_GUARD = 16


@dataclass(frozen=True)
class RootWitness:
    exponent: int
    ideal: RelativeIdeal
    red_L: int

    @property
    def values(self) -> tuple[int, ...]:
        return self.ideal.small_values()

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "witness": str(self.ideal),
            "witness_values": list(self.values),
            "witness_conductor": self.ideal.conductor,
            "red_L": self.red_L,
        }


def is_root(H: NumericalSemigroup, L: RelativeIdeal, n: int) -> bool:
    return L.power(n).normalize() == degrees.canonical_ideal(H).normalize()


def rootset(H: NumericalSemigroup, max_genus_guard: int = DEFAULT_GUARD, *,
            backend: str | None = None) -> list[RootWitness]:
    """One witness per exponent, sorted by exponent.

    For each exponent the witness is the lexicographically least value set.
    """
    if H.is_symmetric:
        raise GorensteinInput(f"{H} is symmetric: every n is a root exponent (L = H)")
    if H.genus > max_genus_guard:
        raise GenusGuardExceeded(f"genus {H.genus} exceeds the roots guard {max_genus_guard}")

    width = H.conductor
    K = degrees.canonical_ideal(H)
    kmask = K.window(0, width)
    gapmask = ((1 << width) - 1) & ~H.members_mask
    r = H.type
    hits = _kernels.root_search(H.members_mask, kmask, gapmask, width, r - 1, backend=backend)

    best: dict[int, RelativeIdeal] = {}
    for n, mask in hits:
        L = RelativeIdeal(H, 0, width, mask)
        if n not in best or L.small_values() < best[n].small_values():
            best[n] = L

    out = []
    for n in sorted(best):
        L = best[n]
        red = L.reduction_number()
        assert L.is_closed(), (str(H), str(L))
        assert n <= min(r - 1, red), (str(H), n, red)
        assert is_root(H, L, n)
        out.append(RootWitness(n, L, red))
    assert len(out) < r, (str(H), [w.exponent for w in out])
    return out


def root_exponents(H: NumericalSemigroup, max_genus_guard: int = DEFAULT_GUARD) -> set[int]:
    return {w.exponent for w in rootset(H, max_genus_guard)}


@dataclass(frozen=True)
class RhoBound:
    p: int
    red_I: int
    bound: int
    rho: int

    @property
    def ok(self) -> bool:
        return self.rho <= self.bound


def rho_bound_from_root(H: NumericalSemigroup, witness: RootWitness) -> list[RhoBound]:
    """For each divisor p of the exponent n, with I = L^(n/p) so that I^p ≅ K:
    rho <= ceil(red(I) / p).  Each bound is asserted.

    ``f`` in the general statement is any bound on reduction numbers of
    m-primary ideals; red(I) is the sharpest choice, and the multiplicity
    minus one (:func:`global_rho_bound`) the coarsest.
    """
    n = witness.exponent
    rho = degrees.canonical_index(H)
    out = []
    for p in range(1, n + 1):
        if n % p:
            continue
        I = witness.ideal.power(n // p)
        red_I = I.reduction_number()
        b = RhoBound(p, red_I, (red_I + p - 1) // p, rho)
        assert b.ok, (str(H), b)
        out.append(b)
    return out


def global_rho_bound(H: NumericalSemigroup, p: int) -> int:
    # reduction numbers of m-primary ideals are at most e - 1
    f = H.multiplicity - 1
    return (f + p - 1) // p
