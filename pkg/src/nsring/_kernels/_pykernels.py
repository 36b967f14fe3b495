"""Pure-Python bit-window kernels.

All windows are [0, width): bit z of a mask says whether z is in the set,
and every integer >= width is implicitly a member.
"""
from __future__ import annotations


def window_closure(hmask: int, smask: int, width: int) -> int:
    """Members of H ∪ (S + H) below ``width``."""
    full = (1 << width) - 1
    acc = hmask
    s = smask
    while s:
        low = s & -s
        acc |= hmask << (low.bit_length() - 1)
        s ^= low
    return acc & full


def window_product(amask: int, bmask: int, width: int) -> int:
    """A + B on [0, width) for sets that both contain 0."""
    full = (1 << width) - 1
    acc = 0
    b = bmask
    while b:
        low = b & -b
        acc |= amask << (low.bit_length() - 1)
        b ^= low
    return acc & full


def root_search(hmask: int, kmask: int, gapmask: int, width: int, max_exp: int) -> list[tuple[int, int]]:
    """(exponent, Lmask) for every closed L = H ∪ (S + H) with L^n = K, 1 <= n <= max_exp.

    S runs over subsets of the gaps, and only S = L ∩ gaps is kept so each
    L is visited once.  S = 0 (the principal ideal H) is skipped.  Powers
    grow with n, so the search over n stops once L^n leaves K.
    """
    full = (1 << width) - 1
    hits = []
    s = gapmask
    while s:
        L = window_closure(hmask, s, width)
        if L & gapmask == s:
            P = L
            for n in range(1, max_exp + 1):
                if P == kmask:
                    hits.append((n, L))
                    break
                if P & ~kmask & full:
                    break
                P = window_product(P, L, width)
        s = (s - 1) & gapmask
    return hits
