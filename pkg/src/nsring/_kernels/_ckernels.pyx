# cython: language_level=3, boundscheck=False, wraparound=False
"""uint64 versions of the window kernels; width must be <= 64."""
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)


cdef inline int _ctz(uint64_t x):
    return __builtin_ctzll(x)


cdef inline uint64_t _full(int width):
    if width >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << width) - 1


cdef inline uint64_t _closure(uint64_t h, uint64_t s, uint64_t full):
    cdef uint64_t acc = h
    cdef uint64_t low
    while s:
        low = s & (~s + 1)
        acc |= h << _ctz(low)
        s ^= low
    return acc & full


cdef inline uint64_t _product(uint64_t a, uint64_t b, uint64_t full):
    cdef uint64_t acc = 0
    cdef uint64_t low
    while b:
        low = b & (~b + 1)
        acc |= a << _ctz(low)
        b ^= low
    return acc & full


def window_closure(hmask, smask, int width):
    return _closure(<uint64_t>hmask, <uint64_t>smask, _full(width))


def window_product(amask, bmask, int width):
    return _product(<uint64_t>amask, <uint64_t>bmask, _full(width))


def root_search(hmask, kmask, gapmask, int width, int max_exp):
    cdef uint64_t h = hmask, k = kmask, g = gapmask
    cdef uint64_t full = _full(width)
    cdef uint64_t s = g, L, P
    cdef int n
    hits = []
    while s:
        L = _closure(h, s, full)
        if (L & g) == s:
            P = L
            for n in range(1, max_exp + 1):
                if P == k:
                    hits.append((n, L))
                    break
                if P & ~k & full:
                    break
                P = _product(P, L, full)
        s = (s - 1) & g
    return hits
