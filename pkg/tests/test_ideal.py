import pytest
from hypothesis import given, strategies as st

import oracle
from conftest import UP_TO_GENUS_6, small_semigroups
from nsring._kernels import window_closure
from nsring.degrees import canonical_ideal
from nsring.enumerate import enumerate_semigroups
from nsring.errors import AmbientMismatch, EmptyGenerators, NotNested
from nsring.ideal import RelativeIdeal, length_between, maximal_ideal, unit_ideal
from nsring.semigroup import semigroup


def gen(H, *gs):
    return RelativeIdeal.from_generators(H, gs)


def vals(E):
    return E.small_values(), E.conductor


# -- frozen examples --------------------------------------------------------

def test_from_generators():
    assert vals(gen(semigroup(4, 5, 6, 7), 0, 1)) == ((0, 1), 4)
    H = semigroup(5, 7, 9)
    assert gen(H, 0) == unit_ideal(H)
    assert vals(gen(semigroup(3, 4, 5), 0, 1, 2)) == ((), 0)
    with pytest.raises(EmptyGenerators):
        RelativeIdeal.from_generators(H, [])


def test_products():
    H = semigroup(4, 5, 6, 7)
    L = gen(H, 0, 1)
    assert vals(L.multiply(L)) == ((0, 1, 2), 4)
    assert L.multiply(unit_ideal(H)) == L
    assert L.power(0) == unit_ideal(H)
    H = semigroup(3, 4, 5)
    assert vals(canonical_ideal(H).power(2)) == ((), 0)


def test_colons():
    H = semigroup(3, 4, 5)
    K = canonical_ideal(H)
    assert unit_ideal(H).colon(K) == maximal_ideal(H)
    H = semigroup(5, 7, 9)
    E = gen(H, 0, 2)
    assert E.colon(RelativeIdeal.principal(H, 4)) == E.shift(-4)


def test_bidual_and_trace():
    H = semigroup(3, 4, 5)
    K = canonical_ideal(H)
    assert vals(K.bidual()) == ((), 0)
    assert K.trace() == maximal_ideal(H)
    H = semigroup(5, 7, 9)
    K = canonical_ideal(H)
    window = range(-2, 20)
    assert {z for z in window if z in K.bidual()} == {z for z in window if z in K} | {13}
    assert vals(K.bidual()) == ((0, 2, 5, 7), 9)
    assert K.trace() == maximal_ideal(H)
    G = semigroup(5, 6, 9)
    assert canonical_ideal(G).trace() == unit_ideal(G)
    assert unit_ideal(H).bidual() == unit_ideal(H)


def test_lengths():
    H = semigroup(5, 7, 9)
    K = canonical_ideal(H)
    assert length_between(K, unit_ideal(H)) == 2
    assert length_between(K, K) == 0
    assert length_between(gen(H, 0, 1, 2, 3, 4), unit_ideal(H)) == 8
    with pytest.raises(NotNested):
        length_between(unit_ideal(H), K)


def test_minimal_generators():
    H = semigroup(5, 7, 9)
    A = RelativeIdeal.from_values(H, [0, 5, 7, 9, 10, 11, 12, 13], 14)
    assert A.minimal_generators == (0, 11, 13) and A.nu == 3
    assert unit_ideal(H).minimal_generators == (0,)
    K = canonical_ideal(semigroup(4, 5, 6, 7))
    assert K.minimal_generators == (0, 1, 2)


def test_isomorphism_and_shift():
    H = semigroup(5, 7, 9)
    K = canonical_ideal(H)
    assert K.is_isomorphic(K.shift(7))
    assert not K.is_isomorphic(unit_ideal(H))
    assert gen(H, 5, 7).normalize() == gen(H, 0, 2)


def test_predicates():
    H = semigroup(3, 4, 5)
    assert canonical_ideal(H).is_closed()
    M = maximal_ideal(H)
    assert M.is_reflexive() and not M.is_principal()
    P = RelativeIdeal.principal(H, 3)
    assert P.is_closed() and P.is_reflexive() and P.is_principal()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        unit_ideal(semigroup(2, 3)).multiply(unit_ideal(semigroup(3, 4, 5)))


def test_from_values_rejects_non_ideal():
    with pytest.raises(ValueError):
        RelativeIdeal.from_values(semigroup(5, 7, 9), [0, 1], 14)


def test_str():
    assert str(gen(semigroup(4, 5, 6, 7), 0, 1)) == "{0, 1} ∪ [4,∞)"


# -- oracle equivalence, genus <= 6 -----------------------------------------

gen_sets = st.lists(st.integers(-6, 14), min_size=1, max_size=4)


def as_oracle(E, O):
    return oracle.OIdeal(O, E.small_values(), E.conductor)


@given(small_semigroups, gen_sets, gen_sets)
def test_ops_match_oracle(H, g1, g2):
    O = oracle.OSemigroup(H.generators)
    E, F = gen(H, *g1), gen(H, *g2)
    oE, oF = oracle.ideal(O, g1), oracle.ideal(O, g2)
    assert as_oracle(E, O) == oE
    assert as_oracle(E.multiply(F), O) == oracle.product(oE, oF)
    assert as_oracle(E.colon(F), O) == oracle.colon(oE, oF)
    assert as_oracle(E.dual(), O) == oracle.dual(oE)
    assert as_oracle(E.bidual(), O) == oracle.bidual(oE)
    assert as_oracle(E.trace(), O) == oracle.trace(oE)
    assert as_oracle(E.power(3), O) == oracle.power(oE, 3)
    assert E.minimal_generators == oracle.mingens(oE)
    assert length_between(E.bidual(), E) == oracle.length(oracle.bidual(oE), oE)
    assert length_between(unit_ideal(H), E.trace()) == oracle.length(oracle.unit(O), oracle.trace(oE))


def test_ops_match_oracle_exhaustive_two_generator():
    """Every two-generator ideal {0, g} with g a gap, for all genus <= 6."""
    for H in UP_TO_GENUS_6:
        O = oracle.OSemigroup(H.generators)
        K, oK = canonical_ideal(H), oracle.canonical(O)
        assert as_oracle(K, O) == oK
        for g in H.gaps:
            E, oE = gen(H, 0, g), oracle.ideal(O, (0, g))
            assert as_oracle(E.multiply(K), O) == oracle.product(oE, oK)
            assert as_oracle(K.colon(E), O) == oracle.colon(oK, oE)
            assert as_oracle(E.colon(K), O) == oracle.colon(oE, oK)
            assert as_oracle(E.bidual(), O) == oracle.bidual(oE)
            assert as_oracle(E.trace(), O) == oracle.trace(oE)


# -- properties ---------------------------------------------------------------

@given(small_semigroups, gen_sets, gen_sets, gen_sets)
def test_colon_antimonotone(H, g1, g2, g3):
    E, F = gen(H, *g1), gen(H, *g2)
    F2 = gen(H, *(g2 + g3))  # F ⊆ F2
    assert F <= F2
    assert E.colon(F2) <= E.colon(F)


@given(small_semigroups, gen_sets)
def test_bidual_properties(H, g):
    E = gen(H, *g)
    B = E.bidual()
    assert E <= B
    assert B.bidual() == B
    assert E.trace() <= unit_ideal(H)
    assert E.trace() == E.multiply(unit_ideal(H).colon(E))


@given(small_semigroups, gen_sets, st.integers(0, 6))
def test_length_additive(H, g, k):
    F = gen(H, *g)
    G = F.multiply(gen(H, 0, *range(1, k + 1)))  # contains F
    E = G.bidual()
    assert length_between(E, F) == length_between(E, G) + length_between(G, F)


@given(small_semigroups, gen_sets, gen_sets, st.integers(-20, 20))
def test_shift_invariance(H, g1, g2, z):
    E, F = gen(H, *g1), gen(H, *g2)
    Ez, Fz = E.shift(z), F.shift(z)
    assert Ez.nu == E.nu
    assert Ez.is_closed() == E.is_closed()
    assert Ez.is_reflexive() == E.is_reflexive()
    assert Ez.colon(Fz) == E.colon(F)
    assert Ez.multiply(F) == E.multiply(F).shift(z)
    G = E.multiply(F)
    assert length_between(G.shift(z), E.shift(z + min(g2))) == length_between(G, E.shift(min(g2)))


@given(small_semigroups)
def test_canonical_closed(H):
    K = canonical_ideal(H)
    assert K.colon(K) == unit_ideal(H)


def test_closed_reflexive_is_principal():
    """Over all normalized monomial ideals H ⊆ L ⊆ Z>=0, genus <= 9."""
    checked = 0
    for H in enumerate_semigroups(9):
        c = H.conductor
        gapmask = ((1 << c) - 1) & ~H.members_mask
        s = gapmask
        while True:
            Lmask = window_closure(H.members_mask, s, c)
            if Lmask & gapmask == s:
                L = RelativeIdeal(H, 0, c, Lmask)
                if L.is_closed() and L.is_reflexive():
                    assert L.is_principal(), (str(H), str(L))
                checked += 1
            if s == 0:
                break
            s = (s - 1) & gapmask
    assert checked == 22366
