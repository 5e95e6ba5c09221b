"""Intersection and union closures of a focal-set family.

The conjunctive closure holds every intersection of a non-empty selection of
focal sets (the focal points); the disjunctive closure holds every union (the
dual focal points). Both are built by a FIFO worklist: each new point is met
against every focal set, so the number of set operations is exactly
``len(points) * len(focal)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .core import Subset, canonical_order, is_subset
from .errors import ClosureSizeExceeded

CONJUNCTIVE = "conjunctive"
DISJUNCTIVE = "disjunctive"
DEFAULT_CAP = 1 << 22


@dataclass(frozen=True)
class FocalPointSet:
    points: frozenset[Subset]
    mode: str
    focal: tuple[Subset, ...]
    operations: int

    def __contains__(self, a: Subset) -> bool:
        return a in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(canonical_order(self.points))

    def ordered(self, reverse: bool = False) -> list[Subset]:
        return canonical_order(self.points, reverse=reverse)


def _check_mode(mode: str) -> str:
    if mode not in (CONJUNCTIVE, DISJUNCTIVE):
        raise ValueError(f"unknown closure mode {mode!r}")
    return mode


def closure(focal: Iterable[Subset], mode: str = CONJUNCTIVE, cap: int = DEFAULT_CAP) -> FocalPointSet:
    _check_mode(mode)
    family = tuple(canonical_order(set(focal)))
    if not family:
        raise ValueError("closure of an empty family")
    conj = mode == CONJUNCTIVE
    points = set(family)
    if len(points) > cap:
        raise ClosureSizeExceeded(f"closure exceeds {cap} points")
    queue = deque(family)
    ops = 0
    while queue:
        p = queue.popleft()
        for f in family:
            x = p & f if conj else p | f
            if x not in points:
                points.add(x)
                if len(points) > cap:
                    raise ClosureSizeExceeded(f"closure exceeds {cap} points")
                queue.append(x)
        ops += len(family)
    return FocalPointSet(frozenset(points), mode, family, ops)


def conjunctive_closure(focal: Iterable[Subset], cap: int = DEFAULT_CAP) -> FocalPointSet:
    return closure(focal, CONJUNCTIVE, cap)


def disjunctive_closure(focal: Iterable[Subset], cap: int = DEFAULT_CAP) -> FocalPointSet:
    return closure(focal, DISJUNCTIVE, cap)


def is_focal_point(a: Subset, focal: Iterable[Subset], mode: str = CONJUNCTIVE) -> bool:
    """Membership test without building the closure.

    ``a`` is a focal point iff it equals the intersection of its focal
    supersets (a dual focal point iff it equals the union of its focal subsets).
    """
    _check_mode(mode)
    if mode == CONJUNCTIVE:
        above = [f for f in focal if is_subset(a, f)]
        return bool(above) and reduce(lambda x, y: x & y, above) == a
    below = [f for f in focal if is_subset(f, a)]
    return bool(below) and reduce(lambda x, y: x | y, below) == a
