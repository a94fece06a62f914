"""Compare the compiled and pure-Python reduction kernels.

Reduces every stacked basis pair of the chosen order with both kernels,
checks the raw outputs agree, and reports wall time per kernel.

    python3 benchmarks/bench_reduce.py            # n = 3, 225 products
    python3 benchmarks/bench_reduce.py -n 4       # 8281 products
    python3 benchmarks/bench_reduce.py --repeat 5
"""

import argparse
import sys
import time

from chromalg import enumerate_basis, beta, stack
from chromalg.rewrite import _kernel_encoding

try:
    from chromalg import _reduce_cy
except ImportError:
    _reduce_cy = None
from chromalg import _reduce_py


def encode_pairs(n):
    basis = enumerate_basis(n)
    jobs = []
    for p in basis:
        for q in basis:
            d = stack(beta(p), beta(q))
            jobs.append((d.n,) + _kernel_encoding(d))
    return jobs


def run(kernel, jobs):
    t0 = time.perf_counter()
    out = [kernel.reduce_terms(n, nv, edges, rng=None, trace=None) for n, nv, edges in jobs]
    return time.perf_counter() - t0, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=3, help="algebra order (default 3)")
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = ap.parse_args(argv)

    jobs = encode_pairs(args.n)
    print(f"order {args.n}: {len(jobs)} stacked products")

    t_py, out_py = min(
        (run(_reduce_py, jobs) for _ in range(args.repeat)), key=lambda r: r[0]
    )
    print(f"pure python : {t_py:8.3f} s  ({len(jobs) / t_py:8.0f} reductions/s)")

    if _reduce_cy is None:
        print("compiled    : not built (CHROMALG_NO_EXT or build failure)")
        return 0

    t_cy, out_cy = min(
        (run(_reduce_cy, jobs) for _ in range(args.repeat)), key=lambda r: r[0]
    )
    print(f"compiled    : {t_cy:8.3f} s  ({len(jobs) / t_cy:8.0f} reductions/s)")
    print(f"speedup     : {t_py / t_cy:8.2f} x")

    if out_py != out_cy:
        print("MISMATCH between kernels", file=sys.stderr)
        return 1
    print("outputs identical across kernels")
    return 0


if __name__ == "__main__":
    sys.exit(main())
