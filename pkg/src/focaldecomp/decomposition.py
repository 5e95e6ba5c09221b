"""Conjunctive (w) and disjunctive (v) weight functions computed on focal points.

Only focal points can carry a weight different from 1, so a
``WeightFunction`` stores the weights of the closure and reports 1 for every
other subset. The recursive route processes the closure from the top (w) or
the bottom (v) of the lattice, dividing out the weights already computed:

    w(A) = 1 / (q(A) * prod{ w(F) : F focal point, F strictly contains A })
    v(A) = 1 / (b(A) * prod{ v(F) : F dual focal point, F strictly inside A })

The direct route rebuilds every weight from commonalities (resp.
implicabilities) raised to integer exponents, and two closed forms cover the
consonant and the (dual) quasi-Bayesian structures in linear time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

from .core import (
    Frame,
    MassFunction,
    Subset,
    canonical_order,
    check_same_frame,
    classify_structure,
    complement_mass,
    discount,
)
from .errors import (
    DogmaticInput,
    ModeMismatch,
    NoUniqueMinimum,
    NotSubnormal,
    StructureMismatch,
)
from .focal_points import (
    CONJUNCTIVE,
    DEFAULT_CAP,
    DISJUNCTIVE,
    FocalPointSet,
    conjunctive_closure,
    disjunctive_closure,
)
from .transforms import (
    CommonalityTable,
    ImplicabilityTable,
    commonality,
    commonality_on,
    implicability,
    implicability_on,
)


@dataclass(frozen=True)
class DecompositionStats:
    focal_count: int
    focal_point_count: int
    closure_ops: int
    products: int


class WeightFunction:
    """Sparse weight map with an implicit weight of 1 on unlisted subsets."""

    __slots__ = ("frame", "mode", "_weights", "stats")

    def __init__(
        self,
        frame: Frame,
        mode: str,
        weights: Mapping[Subset, float],
        stats: DecompositionStats | None = None,
    ):
        if mode not in (CONJUNCTIVE, DISJUNCTIVE):
            raise ValueError(f"unknown weight mode {mode!r}")
        self.frame = frame
        self.mode = mode
        self._weights = {a: weights[a] for a in canonical_order(weights)}
        self.stats = stats

    def __getitem__(self, a: Subset) -> float:
        return self._weights.get(a, 1.0)

    def __contains__(self, a: Subset) -> bool:
        return a in self._weights

    def __len__(self):
        return len(self._weights)

    def items(self):
        return self._weights.items()

    def keys(self):
        return self._weights.keys()

    def isclose(self, other: WeightFunction, rel: float = 1e-9) -> bool:
        """Compare on the union of stored keys, with the implicit 1 elsewhere."""
        if self.mode != other.mode or self.frame != other.frame:
            return False
        keys = set(self._weights) | set(other._weights)
        return all(math.isclose(self[a], other[a], rel_tol=rel, abs_tol=0.0) for a in keys)

    def __repr__(self):
        body = ", ".join(f"{self.frame.format(a)}: {v:.6g}" for a, v in self._weights.items())
        return f"WeightFunction({self.mode}; {body})"


@dataclass(frozen=True)
class ExponentTable:
    anchor: Subset
    entries: dict[Subset, int]

    def __getitem__(self, f: Subset) -> int:
        return self.entries[f]


def _prepare(m: MassFunction, mode: str, eps: float | None, cap: int):
    if eps:
        m = discount(m, eps)
    if mode == CONJUNCTIVE and not m.non_dogmatic:
        raise DogmaticInput("conjunctive decomposition needs Ω among the focal sets")
    if mode == DISJUNCTIVE and not m.subnormal:
        raise NotSubnormal("disjunctive decomposition needs ∅ among the focal sets")
    if mode == CONJUNCTIVE:
        return m, conjunctive_closure(m.focal_sets, cap)
    return m, disjunctive_closure(m.focal_sets, cap)


def _recursive(points: FocalPointSet, values, upward: bool) -> tuple[dict[Subset, float], int]:
    # upward: conjunctive case, strict supersets are the dependencies.
    weights: dict[Subset, float] = {}
    products = 0
    for a in points.ordered(reverse=upward):
        prod = 1.0
        for f, wf in weights.items():
            if (f & a == a) if upward else (f & a == f):
                prod *= wf
                products += 1
        weights[a] = 1.0 / (values[a] * prod)
        products += 1
    return weights, products


def conjunctive_weights(
    m: MassFunction, eps: float | None = None, cap: int = DEFAULT_CAP
) -> WeightFunction:
    """Conjunctive weight function of a non-dogmatic mass, via focal points.

    ``eps`` optionally discounts ``m`` first, which moves mass onto Ω and so
    admits dogmatic inputs.
    """
    m, cl = _prepare(m, CONJUNCTIVE, eps, cap)
    q = commonality_on(m, cl.points)
    weights, products = _recursive(cl, q, upward=True)
    stats = DecompositionStats(len(m), len(cl), cl.operations, products)
    return WeightFunction(m.frame, CONJUNCTIVE, weights, stats)


def disjunctive_weights(
    m: MassFunction, eps: float | None = None, cap: int = DEFAULT_CAP
) -> WeightFunction:
    """Disjunctive weight function of a subnormal mass, via dual focal points.

    ``eps`` discounts toward ∅ here (the mirror image of the conjunctive
    case), which admits normal inputs.
    """
    if eps:
        m = complement_mass(discount(complement_mass(m), eps))
    m, cl = _prepare(m, DISJUNCTIVE, None, cap)
    b = implicability_on(m, cl.points)
    weights, products = _recursive(cl, b, upward=False)
    stats = DecompositionStats(len(m), len(cl), cl.operations, products)
    return WeightFunction(m.frame, DISJUNCTIVE, weights, stats)


def exponent_table(a: Subset, points: FocalPointSet) -> ExponentTable:
    """Integer exponents attached to the focal points strictly beyond ``a``.

    In conjunctive mode these are the focal points strictly containing ``a``,
    visited smallest first, each getting 1 minus the exponents of the points
    strictly between ``a`` and itself. Disjunctive mode mirrors this below ``a``.
    """
    conj = points.mode == CONJUNCTIVE
    if conj:
        beyond = [f for f in points.ordered() if f != a and f & a == a]
    else:
        beyond = [f for f in points.ordered(reverse=True) if f != a and f & a == f]
    exps: dict[Subset, int] = {}
    for f in beyond:
        if conj:
            inner = sum(e for b, e in exps.items() if b & f == b)
        else:
            inner = sum(e for b, e in exps.items() if b & f == f)
        exps[f] = 1 - inner
    return ExponentTable(a, exps)


def _direct(m: MassFunction, cl: FocalPointSet, table) -> tuple[dict[Subset, float], int]:
    weights = {}
    products = 0
    for a in cl.ordered():
        exps = exponent_table(a, cl)
        val = 1.0 / table[a]
        for f, e in exps.entries.items():
            if e:
                val *= table[f] ** e
                products += 1
        weights[a] = val
    return weights, products


def conjunctive_weights_direct(
    m: MassFunction, eps: float | None = None, cap: int = DEFAULT_CAP
) -> WeightFunction:
    """Same result as :func:`conjunctive_weights`, built from commonalities only.

    Costs one exponent table per focal point, so it is meant as a cross-check
    rather than the production route.
    """
    m, cl = _prepare(m, CONJUNCTIVE, eps, cap)
    q = commonality_on(m, cl.points)
    weights, products = _direct(m, cl, q)
    return WeightFunction(
        m.frame, CONJUNCTIVE, weights, DecompositionStats(len(m), len(cl), cl.operations, products)
    )


def disjunctive_weights_direct(m: MassFunction, cap: int = DEFAULT_CAP) -> WeightFunction:
    m, cl = _prepare(m, DISJUNCTIVE, None, cap)
    b = implicability_on(m, cl.points)
    weights, products = _direct(m, cl, b)
    return WeightFunction(
        m.frame, DISJUNCTIVE, weights, DecompositionStats(len(m), len(cl), cl.operations, products)
    )


def proxy_point(a: Subset, points: FocalPointSet) -> Subset:
    """Smallest closure point strictly beyond ``a`` (above for w, below for v).

    The closure is stable under intersection (resp. union), so the candidate
    is the meet of everything beyond ``a``; it is a genuine minimum exactly
    when it differs from ``a``.
    """
    if points.mode == CONJUNCTIVE:
        beyond = [f for f in points.points if f != a and f & a == a]
        op = lambda x, y: x & y  # noqa: E731
    else:
        beyond = [f for f in points.points if f != a and f & a == f]
        op = lambda x, y: x | y  # noqa: E731
    if not beyond:
        raise NoUniqueMinimum("no closure point lies strictly beyond the set")
    p = reduce(op, beyond)
    if p == a:
        raise NoUniqueMinimum("the closure points beyond the set have no unique extremum")
    return p


def proxy_weight(m: MassFunction, a: Subset, points: FocalPointSet | None = None) -> float:
    """``q(a)^-1 * q(P)`` for the proxy focal point ``P`` of ``a``."""
    m.frame.check(a)
    if points is None:
        points = conjunctive_closure(m.focal_sets)
    p = proxy_point(a, points)
    return commonality(m, p) / commonality(m, a)


def dual_proxy_weight(m: MassFunction, a: Subset, points: FocalPointSet | None = None) -> float:
    m.frame.check(a)
    if points is None:
        points = disjunctive_closure(m.focal_sets)
    p = proxy_point(a, points)
    return implicability(m, p) / implicability(m, a)


def consonant_weights(m: MassFunction) -> WeightFunction:
    """Closed form for nested focal sets: each weight is a ratio of neighbours."""
    s = classify_structure(m)
    if not (s.consonant and s.non_dogmatic):
        raise StructureMismatch("consonant")
    chain = list(m.focal_sets)
    # suffix sums give q on the chain in one pass
    q = [0.0] * len(chain)
    acc = 0.0
    for i in range(len(chain) - 1, -1, -1):
        acc += m[chain[i]]
        q[i] = acc
    weights = {chain[-1]: 1.0 / q[-1]}
    for i in range(len(chain) - 1):
        weights[chain[i]] = q[i + 1] / q[i]
    return WeightFunction(m.frame, CONJUNCTIVE, weights)


def _quasi_bayesian(m: MassFunction, top: Subset, bottom: Subset, mode: str) -> WeightFunction:
    # top is the pivot set carrying the base weight (Ω for w, ∅ for v);
    # bottom is where the product of the disjoint family lands (∅ for w, Ω for v).
    pivot = m[top]
    total = math.fsum(v for _, v in m.items())
    family = [a for a in m.focal_sets if a not in (top, bottom)]
    weights = {top: 1.0 / pivot}
    prod = 1.0
    for a in family:
        val = m[a] + pivot
        weights[a] = pivot / val
        prod *= val
    if len(family) >= 2 or bottom in m:
        weights[bottom] = pivot ** (1 - len(family)) * prod / total
    return WeightFunction(m.frame, mode, weights)


def quasi_bayesian_weights(m: MassFunction) -> WeightFunction:
    """Closed form when Ω is focal and the other focal sets are pairwise disjoint."""
    if not classify_structure(m).quasi_bayesian:
        raise StructureMismatch("quasi-bayesian")
    return _quasi_bayesian(m, m.frame.omega, 0, CONJUNCTIVE)


def dual_quasi_bayesian_weights(m: MassFunction) -> WeightFunction:
    """Closed form when ∅ is focal and any two other focal sets cover Ω."""
    if not classify_structure(m).dual_quasi_bayesian:
        raise StructureMismatch("dual-quasi-bayesian")
    return _quasi_bayesian(m, 0, m.frame.omega, DISJUNCTIVE)


def commonality_from_weights(w: WeightFunction, a: Subset) -> float:
    """q(a) as the product of the stored weights whose set does not contain ``a``."""
    if w.mode != CONJUNCTIVE:
        raise ModeMismatch("commonality needs conjunctive weights")
    w.frame.check(a)
    prod = 1.0
    for k, v in w.items():
        if k & a != a:
            prod *= v
    return prod


def implicability_from_weights(v: WeightFunction, a: Subset) -> float:
    """b(a) as the product of the stored weights whose set is not inside ``a``."""
    if v.mode != DISJUNCTIVE:
        raise ModeMismatch("implicability needs disjunctive weights")
    v.frame.check(a)
    prod = 1.0
    for k, val in v.items():
        if k & a != k:
            prod *= val
    return prod


def commonality_table(w: WeightFunction, support: Iterable[Subset]) -> CommonalityTable:
    return CommonalityTable(w.frame, {a: commonality_from_weights(w, a) for a in support})


def implicability_table(v: WeightFunction, support: Iterable[Subset]) -> ImplicabilityTable:
    return ImplicabilityTable(v.frame, {a: implicability_from_weights(v, a) for a in support})


def weights_agree(*ws: WeightFunction, rel: float = 1e-9) -> bool:
    check_same_frame(*ws)
    return all(ws[0].isclose(x, rel) for x in ws[1:])
