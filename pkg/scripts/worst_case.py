"""Closure growth on random families, where focal points can approach 2^n.

Each row pairs the closure size and work counters with the full-lattice cost,
so the crossover where the transform is cheaper shows up directly in the CSV.
"""

import argparse
import sys

from focaldecomp.bench import run_benchmark, to_csv
from focaldecomp.generate import GeneratorSpec


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--focal", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128, 256])
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--cap", type=int, default=1 << 16)
    args = p.parse_args()

    specs = [GeneratorSpec("random", args.n, k, s) for k in args.focal for s in range(args.seeds)]
    rows = run_benchmark(specs, args.repetitions, args.cap)
    sys.stdout.write(to_csv(rows))
    for r in rows:
        if r.status == "ok" and r.fmt_ratio < 1:
            print(f"# k={r.focal_count} seed={r.seed}: closure work exceeds n*2^n", file=sys.stderr)


if __name__ == "__main__":
    main()
