"""Combination rules on sparse mass functions.

The conjunctive and disjunctive rules keep the TBM convention: mass on ∅ is
retained, and Dempster's rule is the separately normalised variant. Cautious
and bold rules take pointwise minima of weights on the focal points, then go
back to masses through the dense FMT, so they only run on small frames.
"""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

from . import oracle
from .core import MassFunction, ZERO_MASS, check_same_frame, validate_mass
from .decomposition import WeightFunction, conjunctive_weights, disjunctive_weights
from .errors import CapExceeded, TotalConflict


def _pairwise(m1: MassFunction, m2: MassFunction, meet: bool) -> MassFunction:
    frame = check_same_frame(m1, m2)
    acc: dict[int, list[float]] = defaultdict(list)
    for a, x in m1.items():
        for b, y in m2.items():
            acc[a & b if meet else a | b].append(x * y)
    return validate_mass(frame, ((c, math.fsum(v)) for c, v in acc.items()))


def conjunctive_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Unnormalised conjunctive rule; commonalities multiply pointwise."""
    return _pairwise(m1, m2, meet=True)


def disjunctive_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Disjunctive rule; implicabilities multiply pointwise."""
    return _pairwise(m1, m2, meet=False)


def dempster_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    joint = conjunctive_combine(m1, m2)
    conflict = joint[0]
    if conflict >= 1.0 - 1e-9:
        raise TotalConflict("the sources are in total conflict")
    scale = 1.0 / (1.0 - conflict)
    return validate_mass(joint.frame, ((a, v * scale) for a, v in joint.items() if a != 0))


def _min_weights(w1: WeightFunction, w2: WeightFunction, skip: int) -> dict[int, float]:
    # unlisted keys carry weight 1 on both sides, so the min stays 1 there
    keys = (set(w1.keys()) | set(w2.keys())) - {skip}
    out = {k: min(w1[k], w2[k]) for k in keys}
    return {k: v for k, v in out.items() if v != 1.0}


def _check_cap(m: MassFunction, cap: int):
    if m.frame.n > cap:
        raise CapExceeded(f"frame of size {m.frame.n} exceeds the FMT cap {cap}")


def _to_mass(frame, values: np.ndarray) -> MassFunction:
    entries = [(int(a), float(v)) for a, v in enumerate(values) if abs(v) >= ZERO_MASS]
    return validate_mass(frame, entries)


def cautious_combine(m1: MassFunction, m2: MassFunction, cap: int = oracle.FMT_CAP) -> MassFunction:
    """Cautious rule: keep the smaller conjunctive weight of every set below Ω.

    The combined commonality is the product of the kept weights over the sets
    that do not contain the argument; masses come back through the dense
    Möbius transform.
    """
    frame = check_same_frame(m1, m2)
    _check_cap(m1, cap)
    omega = frame.omega
    kept = _min_weights(conjunctive_weights(m1), conjunctive_weights(m2), omega)
    size = 1 << frame.n
    idx = np.arange(size, dtype=np.int64)
    q = np.ones(size)
    for k, w in kept.items():
        q[(idx & k) != idx] *= w
    m = oracle.fmt_superset_mobius(oracle.FullLatticeVector(frame.n, q, cap))
    return _to_mass(frame, m.values)


def bold_combine(m1: MassFunction, m2: MassFunction, cap: int = oracle.FMT_CAP) -> MassFunction:
    """Bold rule: keep the smaller disjunctive weight of every set above ∅."""
    frame = check_same_frame(m1, m2)
    _check_cap(m1, cap)
    kept = _min_weights(disjunctive_weights(m1), disjunctive_weights(m2), 0)
    size = 1 << frame.n
    idx = np.arange(size, dtype=np.int64)
    b = np.ones(size)
    for k, v in kept.items():
        b[(idx & k) != k] *= v
    m = oracle.fmt_subset_mobius(oracle.FullLatticeVector(frame.n, b, cap))
    return _to_mass(frame, m.values)
