"""Decomposition cost on consonant chains of fixed length over growing frames.

Writes a CSV whose fmt_cost column is the n * 2^n work a full-lattice transform
would need at the same frame size.
"""

import argparse
import sys

from focaldecomp.bench import run_benchmark, to_csv
from focaldecomp.generate import GeneratorSpec


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[64, 128, 256, 512, 1024])
    p.add_argument("--focal", type=int, default=100)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("-o", "--output", default="-")
    args = p.parse_args()

    specs = [
        # a chain in 2^n has at most n+1 sets
        GeneratorSpec("consonant", n, min(args.focal, n + 1), seed)
        for n in args.n
        for seed in range(args.seeds)
    ]
    text = to_csv(run_benchmark(specs, args.repetitions))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
