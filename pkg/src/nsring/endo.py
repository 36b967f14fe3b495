"""The ring A = m:m as a semigroup ring, plus degree predictions for
R ⋉ m and for tensor products.

The residue-field degree [A/M : R/m] is 1 for semigroup rings, so the
closed forms below carry no division.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import degrees
from .errors import DvrInput
from .ideal import RelativeIdeal, maximal_ideal
from .semigroup import NumericalSemigroup


def endo_semigroup(H: NumericalSemigroup) -> NumericalSemigroup:
    """H' = {z >= 0 : z + M ⊆ M}, which is H ∪ PF(H)."""
    if H.is_dvr:
        return H
    M = maximal_ideal(H)
    A = M.colon(M)
    gaps = [z for z in range(1, A.hi) if z not in A]
    H2 = NumericalSemigroup.from_gaps(gaps)
    extra = {z for z in range(H.conductor) if H2.contains(z) and not H.contains(z)}
    assert extra == set(H.pseudo_frobenius), (str(H), extra)
    return H2


@dataclass(frozen=True)
class TcdegCheck:
    lhs: int
    rhs: int | None
    ok: bool
    applicable: bool = True


def tcdeg_identity(H: NumericalSemigroup) -> TcdegCheck:
    """cdeg(A) against cdeg(R) + e0(m) - 2r.  Not applicable to the DVR."""
    lhs = degrees.cdeg(endo_semigroup(H))
    if H.is_dvr:
        return TcdegCheck(lhs, None, True, applicable=False)
    rhs = degrees.cdeg(H) + H.multiplicity - 2 * H.type
    return TcdegCheck(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class EndoChecks:
    nu_A: int
    nu_ok: bool
    canonical_of_endo_ok: bool
    red_D: int
    applicable: bool = True


def endo_checks(H: NumericalSemigroup) -> EndoChecks:
    H2 = endo_semigroup(H)
    # A viewed as an H-module: its value set is H' itself.
    A = RelativeIdeal(H, 0, H2.conductor, H2.members_mask)
    nu_A = A.nu
    K = degrees.canonical_ideal(H)
    mK = maximal_ideal(H).multiply(K)
    # m*K is an ideal over H'; compare value sets up to translation.
    D = RelativeIdeal(H2, mK.lo, mK.hi, mK.mask)
    ok = D.is_isomorphic(degrees.canonical_ideal(H2))
    return EndoChecks(
        nu_A=nu_A,
        # m:m of a DVR is the DVR itself; the generator count is about non-DVRs.
        nu_ok=H.is_dvr or nu_A == H.type + 1,
        canonical_of_endo_ok=ok,
        red_D=degrees.canonical_index(H2),
        applicable=not H.is_dvr,
    )


PREDICTED = "predicted (no independent check in scope)"


@dataclass(frozen=True)
class Prediction:
    cdeg_pred: int
    bideg_pred: int
    applicable: bool = True
    note: str = PREDICTED


def idealization_degrees(H: NumericalSemigroup) -> Prediction:
    """Degrees of R ⋉ m from those of R (formula evaluation only)."""
    if H.is_dvr:
        raise DvrInput("the idealization formulas assume R is not a DVR")
    return Prediction(
        cdeg_pred=2 * degrees.cdeg(H) + 2,
        bideg_pred=2 * degrees.bideg(H) - 1,
        applicable=not H.is_symmetric,
    )


def product_degrees(H1: NumericalSemigroup, H2: NumericalSemigroup) -> Prediction:
    e1, e2 = H1.multiplicity, H2.multiplicity
    return Prediction(
        cdeg_pred=degrees.cdeg(H1) * e2 + e1 * degrees.cdeg(H2),
        bideg_pred=degrees.bideg(H1) * e2 + e1 * degrees.bideg(H2),
    )
