import pytest
from hypothesis import given

import oracle
from conftest import UP_TO_GENUS_8, nonsymmetric_small
from nsring import degrees
from nsring.errors import GenusGuardExceeded, GorensteinInput
from nsring.ideal import RelativeIdeal
from nsring.roots import global_rho_bound, is_root, rho_bound_from_root, root_exponents, rootset
from nsring.semigroup import semigroup


def test_4567():
    H = semigroup(4, 5, 6, 7)
    ws = rootset(H)
    assert [w.exponent for w in ws] == [1, 2]
    assert ws[1].ideal == RelativeIdeal.from_generators(H, [0, 1])
    assert ws[0].ideal == degrees.canonical_ideal(H)


@pytest.mark.parametrize("a", [4, 5, 6, 7])
def test_interval_family_sharp(a):
    H = semigroup(*range(a, 2 * a))
    ws = {w.exponent: w for w in rootset(H)}
    assert H.type - 1 == a - 2
    assert a - 2 in ws
    assert ws[a - 2].ideal == RelativeIdeal.from_generators(H, [0, 1])


def test_e7_family_only_trivial():
    assert root_exponents(semigroup(7, 8, 9, 12)) == {1}


def test_is_root():
    H = semigroup(4, 5, 6, 7)
    L = RelativeIdeal.from_generators(H, [0, 1])
    assert is_root(H, L, 2)
    assert not is_root(H, L, 3)
    for gens in [(5, 7, 9), (3, 4, 5), (2, 3)]:
        G = semigroup(*gens)
        assert is_root(G, degrees.canonical_ideal(G), 1)


def test_errors():
    with pytest.raises(GorensteinInput):
        rootset(semigroup(2, 3))
    with pytest.raises(GorensteinInput):
        rootset(semigroup(1))
    with pytest.raises(GenusGuardExceeded):
        rootset(semigroup(5, 7, 9), max_genus_guard=7)


def test_rho_bounds():
    H = semigroup(4, 5, 6, 7)
    w = rootset(H)[1]
    bounds = {b.p: b for b in rho_bound_from_root(H, w)}
    assert bounds[2].bound >= degrees.canonical_index(H) == 2
    assert bounds[1].bound == bounds[1].red_I
    H = semigroup(5, 6, 7, 8, 9)
    w = [w for w in rootset(H) if w.exponent == 3][0]
    bounds = {b.p: b for b in rho_bound_from_root(H, w)}
    assert set(bounds) == {1, 3}
    assert all(b.ok for b in bounds.values())
    assert global_rho_bound(H, 1) == H.multiplicity - 1


def test_rootset_matches_oracle_genus_7():
    for H in UP_TO_GENUS_8:
        if H.is_symmetric or H.genus > 7:
            continue
        want = oracle.root_exponents(oracle.OSemigroup(H.generators))
        got = {w.exponent: w.values for w in rootset(H)}
        assert got == want, str(H)


@given(nonsymmetric_small)
def test_root_invariants(H):
    ws = rootset(H)
    r = H.type
    assert len(ws) < r
    assert ws[0].exponent == 1  # K itself
    for w in ws:
        assert w.ideal.is_closed()
        assert w.exponent <= min(r - 1, w.red_L)
        assert is_root(H, w.ideal, w.exponent)
        # the exponent is unique for L
        assert not any(is_root(H, w.ideal, n) for n in range(1, 2 * r + 2) if n != w.exponent)
        for b in rho_bound_from_root(H, w):
            assert b.ok


def test_backends_agree():
    from nsring import _kernels
    if _kernels.BACKEND != "cython":
        pytest.skip("compiled kernels not built")
    for H in UP_TO_GENUS_8:
        if H.is_symmetric:
            continue
        a = [(w.exponent, w.values) for w in rootset(H, backend="python")]
        b = [(w.exponent, w.values) for w in rootset(H, backend="cython")]
        assert a == b
