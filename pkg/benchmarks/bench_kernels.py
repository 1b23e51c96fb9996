"""Compare the compiled and pure-Python Bareiss kernels.

Two workloads: random dense integer matrices of growing order, and the
determinant minors of every recursive subresultant matrix for the family
(x-1)^3 (x+2)^2 (x-3)...(x-(m-3)) paired with its derivative.

    python benchmarks/bench_kernels.py [--orders 10,20,40,60] [--degrees 6..10]
"""

import argparse
import random
import time

from recprs import _kernel
from recprs.cli.main import bench_family, bench_rows


def time_kernel(fn, rows, repeat):
    best = float("inf")
    for _ in range(repeat):
        copy = [r[:] for r in rows]
        t0 = time.perf_counter()
        fn(copy)
        best = min(best, time.perf_counter() - t0)
    return best


def dense(orders, repeat, seed):
    rng = random.Random(seed)
    print(f"{'order':>6} " + " ".join(f"{name:>12}" for name in _kernel.KERNELS) + "  speedup")
    for n in orders:
        rows = [[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]
        times = {name: time_kernel(fn, rows, repeat) for name, fn in _kernel.KERNELS.items()}
        line = f"{n:>6} " + " ".join(f"{t:>12.6f}" for t in times.values())
        if "compiled" in times:
            line += f"  {times['python'] / times['compiled']:.2f}x"
        print(line)


def family(lo, hi):
    print(f"\n{'m':>3} {'k':>2} {'j':>2} {'recursive':>10} {'reduced':>8} "
          + " ".join(f"{name:>12}" for name in _kernel.KERNELS))
    for m in range(lo, hi + 1):
        for row in bench_rows(*bench_family(m)):
            rec = f"{row['recursive_rows']}x{row['recursive_cols']}"
            red = f"{row['reduced_rows']}x{row['reduced_cols']}"
            times = " ".join(f"{row[f'det_{name}_s']:>12.6f}" for name in _kernel.KERNELS)
            print(f"{m:>3} {row['k']:>2} {row['j']:>2} {rec:>10} {red:>8} {times}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", default="10,20,40,60")
    ap.add_argument("--degrees", default="6..10")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"kernels: {', '.join(_kernel.KERNELS)} (default {_kernel.BACKEND})\n")
    dense([int(x) for x in args.orders.split(",")], args.repeat, args.seed)
    lo, hi = (int(x) for x in args.degrees.split(".."))
    family(lo, hi)


if __name__ == "__main__":
    main()
