"""Canonical ideal of k[[H]] and the degrees attached to it.

Everything is computed on value sets: K = {z : F - z not in H}, normalized
so that min K = 0.  In that normalization the principal ideal generated by
the minimal value is a minimal reduction of K, so reduction-number
questions become "when do the powers of K stop growing".
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

from .ideal import RelativeIdeal, length_between, maximal_ideal, unit_ideal
from .semigroup import NumericalSemigroup

REPORT_KEYS = (
    "generators",
    "genus",
    "frobenius",
    "multiplicity",
    "type",
    "cdeg",
    "bideg",
    "tdeg",
    "rho",
    "e1",
    "s0",
    "e0_of_C",
    "gorenstein",
    "almost_gorenstein",
    "nearly_gorenstein",
    "goto",
    "conjecture_ok",
)


@lru_cache(maxsize=4096)
def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    F = H.frobenius
    if F < 0:
        return unit_ideal(H)
    mask = 0
    for z in range(F + 1):
        if not H.contains(F - z):
            mask |= 1 << z
    return RelativeIdeal(H, 0, F + 1, mask)


@dataclass(frozen=True)
class Embedding:
    """A canonical ideal C = K + shift sitting inside H."""

    ideal: RelativeIdeal
    shift: int

    @property
    def e0(self) -> int:
        # e0(C) = λ(R / t^s R) = |Ap(H, s)| = s
        return self.shift


def embed_canonical(H: NumericalSemigroup) -> Embedding:
    K = canonical_ideal(H)
    R = unit_ideal(H)
    s = 0
    while not K.shift(s).issubset(R):
        s += 1
    return Embedding(K.shift(s), s)


@lru_cache(maxsize=4096)
def canonical_powers(H: NumericalSemigroup) -> tuple[RelativeIdeal, ...]:
    """(K^0, K^1, ..., K^rho): the chain of powers up to stabilization."""
    K = canonical_ideal(H)
    chain = [unit_ideal(H)]
    while True:
        nxt = chain[-1].multiply(K)
        if nxt == chain[-1]:
            return tuple(chain)
        chain.append(nxt)


def cdeg(H: NumericalSemigroup) -> int:
    K = canonical_ideal(H)
    value = length_between(K, unit_ideal(H))
    emb = embed_canonical(H)
    via_reduction = emb.e0 - length_between(unit_ideal(H), emb.ideal)
    assert value == via_reduction, (str(H), value, via_reduction)
    return value


def bideg(H: NumericalSemigroup) -> int:
    K = canonical_ideal(H)
    return length_between(K.bidual(), K)


def tdeg(H: NumericalSemigroup) -> int:
    return length_between(unit_ideal(H), canonical_ideal(H).trace())


def canonical_index(H: NumericalSemigroup) -> int:
    return len(canonical_powers(H)) - 1


def e1_and_s0(H: NumericalSemigroup) -> tuple[int, int]:
    chain = canonical_powers(H)
    e1 = sum(length_between(chain[j + 1], chain[j]) for j in range(len(chain) - 1))
    return e1, e1 - cdeg(H)


@dataclass(frozen=True)
class Flags:
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    goto: bool
    dvr: bool


def classify(H: NumericalSemigroup) -> Flags:
    c = cdeg(H)
    return Flags(
        gorenstein=H.is_symmetric,
        almost_gorenstein=c == H.type - 1,
        nearly_gorenstein=tdeg(H) == 1,
        goto=bideg(H) == 1,
        dvr=H.is_dvr,
    )


def is_canonical(H: NumericalSemigroup, E: RelativeIdeal) -> bool:
    """Is E (a shift of) the canonical ideal?

    The direct test compares value sets up to translation; the socle test
    (closed, and E:m / E one-dimensional) must agree with it.
    """
    direct = E.is_isomorphic(canonical_ideal(H))
    if H.is_dvr:
        socle = E.is_principal()
    else:
        socle = E.is_closed() and length_between(E.colon(maximal_ideal(H)), E) == 1
    assert direct == socle, (str(H), str(E))
    return direct


@dataclass(frozen=True)
class DegreeReport:
    generators: tuple[int, ...]
    genus: int
    frobenius: int
    multiplicity: int
    type: int
    cdeg: int
    bideg: int
    tdeg: int
    rho: int
    e1: int
    s0: int
    e0_of_C: int
    lambda_R_mod_C: int
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    goto: bool
    dvr: bool
    conjecture_ok: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["generators"] = list(self.generators)
        return {k: d[k] for k in REPORT_KEYS}


def degree_report(H: NumericalSemigroup) -> DegreeReport:
    emb = embed_canonical(H)
    c, b = cdeg(H), bideg(H)
    e1, s0 = e1_and_s0(H)
    flags = classify(H)
    return DegreeReport(
        generators=H.generators,
        genus=H.genus,
        frobenius=H.frobenius,
        multiplicity=H.multiplicity,
        type=H.type,
        cdeg=c,
        bideg=b,
        tdeg=tdeg(H),
        rho=canonical_index(H),
        e1=e1,
        s0=s0,
        e0_of_C=emb.e0,
        lambda_R_mod_C=length_between(unit_ideal(H), emb.ideal),
        gorenstein=flags.gorenstein,
        almost_gorenstein=flags.almost_gorenstein,
        nearly_gorenstein=flags.nearly_gorenstein,
        goto=flags.goto,
        dvr=flags.dvr,
        conjecture_ok=c >= b,
    )
