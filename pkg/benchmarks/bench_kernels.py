"""Compare the compiled and pure-Python kernels on the roots search.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

from nsring import _kernels
from nsring.degrees import canonical_ideal
from nsring.semigroup import semigroup

CASES = [
    (4, 5, 6, 7),
    (5, 7, 9),
    (7, 8, 9, 12),
    (10, 11, 12, 13, 14, 15, 18),
    (9, 11, 13, 14, 15, 17),
    (17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33),
    (11, 13, 14, 15, 17, 19),
]


def search_args(H):
    width = H.conductor
    kmask = canonical_ideal(H).window(0, width)
    gapmask = ((1 << width) - 1) & ~H.members_mask
    return H.members_mask, kmask, gapmask, width, H.type - 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])
    print(f"compiled kernels available: {_kernels.BACKEND == 'cython'}")
    print(f"{'semigroup':<34}{'genus':>6}" + "".join(f"{b + ' ms':>12}" for b in backends) + f"{'speedup':>10}")
    for gens in CASES:
        H = semigroup(*gens)
        sa = search_args(H)
        times = {}
        results = {}
        for b in backends:
            results[b] = _kernels.root_search(*sa, backend=b)
            t = timeit.repeat(lambda: _kernels.root_search(*sa, backend=b), number=1, repeat=args.repeat)
            times[b] = min(t) * 1e3
        if len(backends) == 2:
            assert results["python"] == results["cython"], gens
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        label = str(H) if len(str(H)) < 33 else str(H)[:30] + "..>"
        print(f"{label:<34}{H.genus:>6}" + "".join(f"{times[b]:>12.3f}" for b in backends) + f"{speed:>10}")


if __name__ == "__main__":
    main()
