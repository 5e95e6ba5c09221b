"""Full-lattice reference implementations, for testing and small frames only.

Dense vectors have length ``2**n`` and are indexed by subset bit pattern.
Nothing in the sparse code paths imports this module; the cautious and bold
rules reach for it to invert a commonality (implicability) table.

Brute-force weights use the log-domain route: ``log w`` is minus the Möbius
inverse (over supersets) of ``log q``, which expands to the alternating
product over all supersets in O(n 2^n) instead of O(3^n).
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core import MassFunction, Subset
from .errors import CapExceeded, DogmaticInput, NotSubnormal
from .focal_points import CONJUNCTIVE

FMT_CAP = 25
WEIGHT_CAP = 14
SELECTION_CAP = 20


class FullLatticeVector:
    """Dense set function on all ``2**n`` subsets of a frame of size ``n``."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values, cap: int = FMT_CAP):
        if n > cap:
            raise CapExceeded(f"frame of size {n} exceeds the oracle cap {cap}")
        values = np.array(values, dtype=float)
        if values.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} values, got shape {values.shape}")
        self.n = n
        self.values = values

    def __getitem__(self, a: Subset) -> float:
        return float(self.values[a])

    def __len__(self):
        return len(self.values)

    def deviating(self, ref: float = 1.0, tol: float = 1e-9) -> dict[Subset, float]:
        """Entries further than ``tol`` (relative) from ``ref``."""
        idx = np.flatnonzero(~np.isclose(self.values, ref, rtol=tol, atol=0.0))
        return {int(i): float(self.values[i]) for i in idx}


def dense(m: MassFunction, cap: int = FMT_CAP) -> FullLatticeVector:
    n = m.frame.n
    if n > cap:
        raise CapExceeded(f"frame of size {n} exceeds the oracle cap {cap}")
    vec = np.zeros(1 << n)
    for a, v in m.items():
        vec[a] = v
    return FullLatticeVector(n, vec, cap)


def _passes(vec: FullLatticeVector, superset: bool, sign: float) -> FullLatticeVector:
    n = vec.n
    out = vec.values.copy()
    for i in range(n):
        # axis 1 selects bit i: index = hi * 2^(i+1) + bit * 2^i + lo
        view = out.reshape(-1, 2, 1 << i)
        if superset:
            view[:, 0, :] += sign * view[:, 1, :]
        else:
            view[:, 1, :] += sign * view[:, 0, :]
    return FullLatticeVector(n, out)


def fmt_superset_zeta(vec: FullLatticeVector) -> FullLatticeVector:
    """Sum over supersets: dense mass to dense commonality."""
    return _passes(vec, True, 1.0)


def fmt_superset_mobius(vec: FullLatticeVector) -> FullLatticeVector:
    return _passes(vec, True, -1.0)


def fmt_subset_zeta(vec: FullLatticeVector) -> FullLatticeVector:
    """Sum over subsets: dense mass to dense implicability."""
    return _passes(vec, False, 1.0)


def fmt_subset_mobius(vec: FullLatticeVector) -> FullLatticeVector:
    return _passes(vec, False, -1.0)


def dense_commonality(m: MassFunction) -> FullLatticeVector:
    return fmt_superset_zeta(dense(m))


def dense_implicability(m: MassFunction) -> FullLatticeVector:
    return fmt_subset_zeta(dense(m))


def brute_force_conjunctive_weights(m: MassFunction, cap: int = WEIGHT_CAP) -> FullLatticeVector:
    """w at every subset from the alternating product of commonalities."""
    if m.frame.n > cap:
        raise CapExceeded(f"frame of size {m.frame.n} exceeds the weight oracle cap {cap}")
    if not m.non_dogmatic:
        raise DogmaticInput("conjunctive weights need Ω among the focal sets")
    q = dense_commonality(m)
    logw = fmt_superset_mobius(FullLatticeVector(q.n, np.log(q.values)))
    return FullLatticeVector(q.n, np.exp(-logw.values))


def brute_force_disjunctive_weights(m: MassFunction, cap: int = WEIGHT_CAP) -> FullLatticeVector:
    """v at every subset from the alternating product of implicabilities."""
    if m.frame.n > cap:
        raise CapExceeded(f"frame of size {m.frame.n} exceeds the weight oracle cap {cap}")
    if not m.subnormal:
        raise NotSubnormal("disjunctive weights need ∅ among the focal sets")
    b = dense_implicability(m)
    logv = fmt_subset_mobius(FullLatticeVector(b.n, np.log(b.values)))
    return FullLatticeVector(b.n, np.exp(-logv.values))


def interval_conjunctive_weight(m: MassFunction, a: Subset) -> float:
    """w(a) straight from the alternating product over every superset of ``a``.

    Exponential in the size of the complement of ``a``; used to cross-check
    the log-domain oracle on tiny frames.
    """
    q = dense_commonality(m)
    free = [i for i in range(m.frame.n) if not a >> i & 1]
    val = 1.0
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            b = a
            for i in extra:
                b |= 1 << i
            val *= q[b] ** (-1 if k % 2 == 0 else 1)
    return val


def brute_force_focal_points(focal, mode: str = CONJUNCTIVE, cap: int = SELECTION_CAP) -> set[Subset]:
    """Meet (or join) of every non-empty selection of focal sets."""
    family = sorted(set(focal))
    if len(family) > cap:
        raise CapExceeded(f"{len(family)} focal sets exceed the selection cap {cap}")
    out = set()
    # iterate selections by bitmask, reusing the value of the selection minus its lowest member
    vals = [0] * (1 << len(family))
    for sel in range(1, 1 << len(family)):
        low = sel & -sel
        i = low.bit_length() - 1
        rest = sel ^ low
        if rest == 0:
            vals[sel] = family[i]
        elif mode == CONJUNCTIVE:
            vals[sel] = vals[rest] & family[i]
        else:
            vals[sel] = vals[rest] | family[i]
        out.add(vals[sel])
    return out
