"""Time the numba and numpy backends of the two array kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from affine_annex import _kernels
from affine_annex.coxeter_core import enumerate_by_length, get_context, reduced_word


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--type", default="A2~")
    args = ap.parse_args()
    if not _kernels.HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    ctx = get_context(args.type)
    print("type %s, best of %d" % (ctx.tag, args.repeat))
    print("%-28s %12s %12s %8s" % ("kernel", "numpy [ms]", "numba [ms]", "ratio"))

    for n in (10, 14, 18):
        w = enumerate_by_length(ctx, n)[-1]
        word = np.array(reduced_word(ctx, w))
        call = (ctx.gens_packed, word, ctx.rank)
        _kernels.subword_products_numba(*call)  # compile outside the timing
        a = best_of(lambda: _kernels.subword_products_numpy(*call), args.repeat)
        b = best_of(lambda: _kernels.subword_products_numba(*call), args.repeat)
        print("%-28s %12.3f %12.3f %8.2f" % ("subword_products len=%d" % n, a * 1e3, b * 1e3, a / b))

    for L in (20, 40):
        els = np.array([ctx.pack(w) for w in enumerate_by_length(ctx, L)], dtype=np.int64)
        call = (els, np.array(ctx.bary_scaled), ctx.scale, np.array(ctx.functionals), ctx.rank)
        _kernels.batch_lengths_numba(*call)
        a = best_of(lambda: _kernels.batch_lengths_numpy(*call), args.repeat)
        b = best_of(lambda: _kernels.batch_lengths_numba(*call), args.repeat)
        print("%-28s %12.3f %12.3f %8.2f" % ("batch_lengths n=%d" % len(els), a * 1e3, b * 1e3, a / b))


if __name__ == "__main__":
    main()
