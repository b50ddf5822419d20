"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 1]

Both backends get identical random inputs, and their results are compared
before any timing is reported.
"""

import argparse
import random
import sys
import timeit

from mdioid._kernels import _pure

try:
    from mdioid._kernels import _cext
except ImportError:
    _cext = None


def workloads(rng):
    def masks(count, width):
        return [rng.getrandbits(width) for _ in range(count)]

    return {
        "bool_bidet n=8": ("bool_bidet", [(masks(8, 8), 8) for _ in range(20)]),
        "first_unit_diagonal n=8": ("first_unit_diagonal", [(masks(8, 8), 8, 1) for _ in range(50)]),
        "sign_pattern_attach k=9": ("sign_pattern_attach", [(masks(9, 12),) for _ in range(20)]),
        "closure_attach k=12": ("closure_attach", [(masks(12, 16),) for _ in range(20)]),
        "union_collision k=14": ("union_collision", [([1 << i for i in range(14)],) for _ in range(5)]),
        "even_cycle n=10": (
            "even_cycle",
            [([rng.getrandbits(10) & ~(1 << i) & rng.getrandbits(10) for i in range(10)], 10) for _ in range(50)],
        ),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _cext is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, (name, calls) in workloads(rng).items():
        py_fn, cy_fn = getattr(_pure, name), getattr(_cext, name)
        for call in calls:
            if py_fn(*call) != cy_fn(*call):
                raise SystemExit(f"{label}: backends disagree on {call!r}")
        py = min(timeit.repeat(lambda: [py_fn(*c) for c in calls], number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: [cy_fn(*c) for c in calls], number=1, repeat=args.repeat))
        print(f"{label:<26}{py * 1e3:>12.2f}{cy * 1e3:>12.2f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
