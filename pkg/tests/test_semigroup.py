import pytest
from hypothesis import given, strategies as st

import oracle
from conftest import semigroups
from nsring.errors import EmptyInput, GcdNotOne, NotAMember, NsringError, SemigroupTooLarge
from nsring.semigroup import NumericalSemigroup, semigroup


def test_579_basics():
    H = semigroup(5, 7, 9)
    assert H.frobenius == 13
    assert H.conductor == 14
    assert H.gaps == (1, 2, 3, 4, 6, 8, 11, 13)
    assert H.genus == 8
    assert H.pseudo_frobenius == (11, 13)
    assert H.type == 2
    assert H.multiplicity == 5
    assert not H.is_symmetric
    assert str(H) == "<5,7,9>"


@pytest.mark.parametrize(
    "gens, n, expected",
    [((2, 3), 2, (0, 3)), ((5, 7, 9), 5, (0, 7, 9, 16, 18)), ((3, 4, 5), 3, (0, 4, 5))],
)
def test_apery(gens, n, expected):
    assert semigroup(*gens).apery_set(n) == expected


@pytest.mark.parametrize(
    "gens, pf",
    [((5, 7, 9), (11, 13)), ((4, 5, 6, 7), (1, 2, 3)), ((2, 3), (1,))],
)
def test_pseudo_frobenius(gens, pf):
    assert semigroup(*gens).pseudo_frobenius == pf


def test_symmetric_examples():
    assert semigroup(2, 3).is_symmetric
    H = semigroup(5, 6, 9)
    assert H.is_symmetric and H.genus == 7 and H.frobenius == 13


def test_redundant_generators_dropped():
    assert semigroup(4, 7, 13, 14).generators == (4, 7, 13)
    assert semigroup(3, 6, 9, 10, 11).generators == (3, 10, 11)


def test_dvr():
    H = semigroup(1)
    assert H.is_dvr and H.frobenius == -1 and H.genus == 0
    assert H.pseudo_frobenius == (-1,)
    assert H.type == 1 and H.is_symmetric
    assert NumericalSemigroup.from_gaps(()) == H


def test_errors():
    with pytest.raises(EmptyInput):
        NumericalSemigroup.from_generators([])
    with pytest.raises(GcdNotOne):
        semigroup(4, 6)
    with pytest.raises(NotAMember):
        semigroup(5, 7, 9).apery_set(6)
    with pytest.raises(SemigroupTooLarge):
        semigroup(20, 21)
    with pytest.raises(SemigroupTooLarge):
        NumericalSemigroup.from_generators([2, 3, 10**7])
    with pytest.raises(NsringError):
        NumericalSemigroup.from_gaps([2])
    with pytest.raises(NsringError):
        semigroup(0, 1)


@given(semigroups)
def test_matches_oracle(H):
    O = oracle.OSemigroup(H.generators)
    assert H.gaps == O.gaps
    assert H.frobenius == O.frobenius
    assert list(H.generators) == O.minimal_generators()
    assert list(H.pseudo_frobenius) == (O.pseudo_frobenius() or [-1])


@given(semigroups, st.integers(1, 40))
def test_apery_size(H, n):
    if n in H:
        ap = H.apery_set(n)
        assert len(ap) == n
        assert sorted(a % n for a in ap) == list(range(n))


@given(semigroups)
def test_type_one_iff_symmetric(H):
    assert (H.type == 1) == H.is_symmetric


@given(semigroups)
def test_idempotent_and_gap_roundtrip(H):
    assert NumericalSemigroup.from_generators(H.generators) == H
    assert NumericalSemigroup.from_gaps(H.gaps) == H
    if H.genus:
        assert H.frobenius == max(H.gaps)
