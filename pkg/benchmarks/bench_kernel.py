"""Compare the compiled and pure-Python search kernels on identical work.

Runs one capped restart from the empty seed per case through both kernels,
checks that they return byte-identical results, and reports wall times.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--cap 200000] [--heap]
"""

from __future__ import annotations

import argparse
import sys
import time

from listcolor.bb import _core_py, engine
from listcolor.bb.problem import pack
from listcolor.instance import GenConfig, gen_instance
from listcolor.seeding import mix_seed

CASES = (
    (30, 0.30, 0.40, 3),
    (40, 0.25, 0.40, 3),
    (50, 0.20, 0.30, 3),
    (50, 0.30, 0.50, 4),
)

_STATUS = {0: "completed", 1: "capped", 2: "timed-out", 3: "certified"}


def run_case(kernel, pp, cap, repeat, select="scan"):
    best_time = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernel(pp, [], [], pp.p + 1, 0, cap, float("inf"), True, select)
        dt = time.perf_counter() - t0
        best_time = dt if best_time is None else min(best_time, dt)
        result = out
    return result, best_time


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--cap", type=int, default=200_000,
                        help="iteration cap per restart (0 = unlimited)")
    parser.add_argument("--heap", action="store_true",
                        help="also time the pure kernel's heap variant")
    args = parser.parse_args(argv)

    compiled = engine.active_kernel() == "compiled"
    left_name = "compiled" if compiled else "python"
    print(f"active kernel: {engine.active_kernel()}  (cap={args.cap}, "
          f"best of {args.repeat})")
    header = f"{'case':<28}{left_name:>12}{'python':>12}{'speedup':>10}  result"
    print(header)
    print("-" * len(header))

    for n, d, c, k in CASES:
        seed = mix_seed(0, "bench-kernel", n, d, c, k)
        inst = gen_instance(GenConfig(n=n, d=d, c=c, k=k, seed=seed))
        pp = pack(inst)

        fast, t_fast = run_case(engine.run_restart, pp, args.cap, args.repeat)
        pure, t_pure = run_case(_core_py.run_restart, pp, args.cap, args.repeat)

        status, nodes, best, assign = fast
        if (status, nodes, best, assign) != tuple(pure):
            print(f"kernel mismatch on n={n} d={d} c={c} k={k}: "
                  f"{fast[:3]} vs {tuple(pure)[:3]}", file=sys.stderr)
            return 1

        case = f"n={n} d={d} c={c} k={k}"
        speedup = t_pure / t_fast if t_fast > 0 else float("inf")
        summary = f"{_STATUS[status]}, {nodes} nodes, best={best if best >= 0 else '-'}"
        print(f"{case:<28}{t_fast * 1000:>10.1f}ms{t_pure * 1000:>10.1f}ms"
              f"{speedup:>9.1f}x  {summary}")

        if args.heap:
            heap, t_heap = run_case(
                _core_py.run_restart, pp, args.cap, args.repeat, select="heap"
            )
            if tuple(heap) != tuple(pure):
                print(f"heap/scan mismatch on n={n}", file=sys.stderr)
                return 1
            print(f"{'  python heap variant':<28}{'':>12}{t_heap * 1000:>10.1f}ms")

    if not compiled:
        print("note: compiled kernel unavailable; both columns ran the "
              "pure kernel")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
