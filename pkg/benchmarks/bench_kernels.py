#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Times the exchange-identity sweep, the braid-relation sweep, and a full
automorphism search on holomorph biquandles (the package's hot paths).
Both implementations are called directly, so the BIQUANDLES_NO_NUMBA flag
does not need to be set.

Usage: python benchmarks/bench_kernels.py [--sizes 3,5,7] [--repeat 3]
"""

import argparse
import time

import numpy as np

from biquandles import _kernels as K
from biquandles.automorphisms import biquandle_aut
from biquandles.combinators import holomorph_biquandle
from biquandles.group_constructions import dihedral_quandle


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_axiom_kernels(bq, repeat):
    u, o, oinv = bq.under, bq.over, bq.over_inv
    rows = []
    if K.HAVE_NUMBA:
        K._exchange_violation_loop(u, o)  # warm the JIT
        K._ybe_violation_loop(u, o, oinv)
        rows.append(("exchange numba", timeit(lambda: K._exchange_violation_loop(u, o), repeat)))
        rows.append(("ybe      numba", timeit(lambda: K._ybe_violation_loop(u, o, oinv), repeat)))
    rows.append(("exchange numpy", timeit(lambda: K._exchange_violation_np(u, o), repeat)))
    rows.append(("ybe      numpy", timeit(lambda: K._ybe_violation_np(u, o, oinv), repeat)))
    return rows


def bench_aut_search(bq, repeat):
    """biquandle_aut through whichever closure path is active plus the
    numpy closure forced by monkeypatching the dispatcher."""
    rows = []
    if K.HAVE_NUMBA:
        rows.append(("aut-search numba", timeit(lambda: biquandle_aut(bq), repeat)))
    original = K.closure_extend
    try:
        K.closure_extend = lambda tA, tB, img, pre: K._closure_np(tA, tB, img, pre)
        rows.append(("aut-search numpy", timeit(lambda: biquandle_aut(bq), repeat)))
    finally:
        K.closure_extend = original
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="3,5,7", help="dihedral quandle orders for the holomorphs")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not K.HAVE_NUMBA:
        print("numba unavailable or disabled; only the numpy path is timed\n")
    for n in (int(x) for x in args.sizes.split(",")):
        bq = holomorph_biquandle(dihedral_quandle(n))
        print(f"holomorph of the dihedral quandle R_{n}: {bq.n} elements")
        for name, secs in bench_axiom_kernels(bq, args.repeat) + bench_aut_search(bq, args.repeat):
            print(f"  {name:18s} {secs * 1000:10.2f} ms")
        print()


if __name__ == "__main__":
    main()
