"""Seeded random mass functions with a prescribed focal structure."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import Frame, MassFunction, complement_mass, validate_mass
from .errors import InfeasibleSpec

RNG_ALGORITHM = "PCG64"
STRUCTURES = ("random", "consonant", "quasi-bayesian", "dual-quasi-bayesian")


@dataclass(frozen=True)
class GeneratorSpec:
    structure: str
    n: int
    focal_count: int
    seed: int = 0
    subnormal: bool = False

    def check(self):
        if self.structure not in STRUCTURES:
            raise InfeasibleSpec(f"unknown structure {self.structure!r}")
        if self.n < 1 or self.focal_count < 1:
            raise InfeasibleSpec("n and focal_count must be positive")
        if self.focal_count > 2**self.n:
            raise InfeasibleSpec(f"{self.focal_count} focal sets do not fit in 2^{self.n}")
        if self.structure == "consonant" and self.focal_count > self.n + 1:
            raise InfeasibleSpec(f"a chain in 2^{self.n} has at most {self.n + 1} sets")
        if self.structure in ("quasi-bayesian", "dual-quasi-bayesian"):
            k = self.focal_count - 1
            if k > self.n or (k == 1 and self.n == 1):
                raise InfeasibleSpec(f"cannot place {k} disjoint proper subsets in a frame of {self.n}")
        return self


def default_frame(n: int) -> Frame:
    return Frame(tuple(f"w{i}" for i in range(n)))


def _random_subset(rng: np.random.Generator, n: int) -> int:
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _masses(rng, k: int) -> np.ndarray:
    x = rng.standard_exponential(k)
    return x / x.sum()


def _chain(rng, n: int, k: int) -> list[int]:
    order = rng.permutation(n)
    pool = np.arange(1, n) if k - 1 <= n - 1 else np.arange(0, n)
    sizes = sorted(int(s) for s in rng.choice(pool, size=k - 1, replace=False))
    sets, acc, used = [], 0, 0
    for s in sizes:
        while used < s:
            acc |= 1 << int(order[used])
            used += 1
        sets.append(acc)
    sets.append((1 << n) - 1)
    return sets


def _disjoint(rng, n: int, k: int) -> list[int]:
    omega = (1 << n) - 1
    if k == 0:
        return [omega]
    order = [int(i) for i in rng.permutation(n)]
    # block k means "unused"
    labels = list(range(k)) + [int(x) for x in rng.integers(0, k + 1, size=n - k)]
    blocks = [0] * k
    for elem, lab in zip(order, labels):
        if lab < k:
            blocks[lab] |= 1 << elem
    if k == 1 and blocks[0] == omega:
        blocks[0] ^= 1 << order[-1]
    return blocks + [omega]


def _distinct(rng, n: int, k: int, forced: int) -> list[int]:
    if n <= 20:
        # draw from the 2^n - 1 other subsets, skipping over the forced one
        picks = rng.choice((1 << n) - 1, size=k - 1, replace=False)
        return [forced] + sorted(int(a) + (a >= forced) for a in picks)
    seen = {forced}
    while len(seen) < k:
        seen.add(_random_subset(rng, n))
    return sorted(seen)


def generate_mass(spec: GeneratorSpec, frame: Frame | None = None) -> MassFunction:
    spec.check()
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n, k = spec.n, spec.focal_count
    frame = frame or default_frame(n)
    if frame.n != n:
        raise InfeasibleSpec("frame size does not match the spec")
    if spec.structure == "consonant":
        sets = _chain(rng, n, k)
    elif spec.structure in ("quasi-bayesian", "dual-quasi-bayesian"):
        sets = _disjoint(rng, n, k - 1)
    else:
        sets = _distinct(rng, n, k, 0 if spec.subnormal else (1 << n) - 1)
    m = validate_mass(frame, zip(sets, (float(x) for x in _masses(rng, len(sets)))))
    if spec.structure == "dual-quasi-bayesian":
        m = complement_mass(m)
    return m


def generator_metadata(spec: GeneratorSpec) -> dict:
    return {"generator": RNG_ALGORITHM, **asdict(spec)}
