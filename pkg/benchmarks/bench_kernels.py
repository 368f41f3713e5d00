"""Time the subset-union kernel under each backend.

    python3 benchmarks/bench_kernels.py [--q 12 16 20] [--repeat 3]

Generators are random 40-bit masks; all backends must return the same map.
"""
from __future__ import annotations

import argparse
import random
import time

from schubrest._kernels import NUMBA_AVAILABLE, signed_union_totals


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[10, 14, 18, 20, 26])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-max-q", type=int, default=26, help="skip the dict backend above this q")
    args = ap.parse_args()

    backends = ["numba", "numpy", "python"] if NUMBA_AVAILABLE else ["numpy", "python"]
    if NUMBA_AVAILABLE:
        signed_union_totals([1, 2, 3], "numba")  # compile outside the timings

    rng = random.Random(0)
    print(f"{'q':>3} " + " ".join(f"{b:>10}" for b in backends) + "   distinct unions")
    for q in args.q:
        masks = [rng.getrandbits(40) for _ in range(q)]
        ref = signed_union_totals(masks, "numpy")
        cols = []
        for b in backends:
            if b == "python" and q > args.python_max_q:
                cols.append(f"{'-':>10}")
                continue
            assert signed_union_totals(masks, b) == ref, b
            cols.append(f"{best_of(lambda: signed_union_totals(masks, b), args.repeat):10.4f}")
        print(f"{q:>3} " + " ".join(cols) + f"   {len(ref)}")


if __name__ == "__main__":
    main()
