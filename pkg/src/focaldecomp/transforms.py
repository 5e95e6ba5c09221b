"""Commonality and implicability on focal sets only, and their inverses."""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .core import (
    SUM_TOL,
    Frame,
    MassFunction,
    Subset,
    canonical_order,
    validate_mass,
)
from .errors import NegativeMass, OffSupportQuery, SumOutOfTolerance

NEG_TOL = 1e-9


def commonality(m: MassFunction, a: Subset) -> float:
    """Total mass on the focal supersets of ``a``."""
    m.frame.check(a)
    return math.fsum(v for b, v in m.items() if a & b == a)


def implicability(m: MassFunction, a: Subset) -> float:
    """Total mass on the focal subsets of ``a``."""
    m.frame.check(a)
    return math.fsum(v for b, v in m.items() if a & b == b)


class _Table:
    """Sparse set-function values on a support, optionally backed by a mass.

    Queries off the support are answered from the originating mass when one
    was given and rejected otherwise.
    """

    kind = ""
    _evaluate = None

    def __init__(self, frame: Frame, values: Mapping[Subset, float], mass: MassFunction | None = None):
        self.frame = frame
        self._values = {a: values[a] for a in canonical_order(values)}
        self.mass = mass

    def __getitem__(self, a: Subset) -> float:
        try:
            return self._values[a]
        except KeyError:
            if self.mass is None:
                raise OffSupportQuery(
                    f"{self.kind}({self.frame.format(a)}) is not stored and no mass is attached"
                ) from None
            return type(self)._evaluate(self.mass, a)

    def __contains__(self, a: Subset) -> bool:
        return a in self._values

    def __len__(self):
        return len(self._values)

    def items(self):
        return self._values.items()

    @property
    def support(self) -> tuple[Subset, ...]:
        return tuple(self._values)

    def __repr__(self):
        body = ", ".join(f"{self.frame.format(a)}: {v:.6g}" for a, v in self._values.items())
        return f"{type(self).__name__}({body})"


class CommonalityTable(_Table):
    kind = "q"
    _evaluate = staticmethod(commonality)


class ImplicabilityTable(_Table):
    kind = "b"
    _evaluate = staticmethod(implicability)


def _support(m: MassFunction, support: Iterable[Subset]) -> list[Subset]:
    return [m.frame.check(a) for a in support]


def commonality_on(m: MassFunction, support: Iterable[Subset]) -> CommonalityTable:
    return CommonalityTable(m.frame, {a: commonality(m, a) for a in _support(m, support)}, m)


def implicability_on(m: MassFunction, support: Iterable[Subset]) -> ImplicabilityTable:
    return ImplicabilityTable(m.frame, {a: implicability(m, a) for a in _support(m, support)}, m)


def _invert(table: _Table, focal: Iterable[Subset], upward: bool) -> MassFunction:
    # upward=True: inverting q, so every strict superset must be final first.
    frame = table.frame
    focal = [frame.check(a) for a in set(focal)]
    order = canonical_order(focal, reverse=upward)
    masses: dict[Subset, float] = {}
    for a in order:
        if upward:
            above = [v for b, v in masses.items() if a & b == a]
        else:
            above = [v for b, v in masses.items() if a & b == b]
        v = table[a] - math.fsum(above)
        if v < -NEG_TOL:
            raise NegativeMass(
                f"recovered mass {v:.3g} on {frame.format(a)}: table inconsistent with the focal family"
            )
        masses[a] = max(v, 0.0)
    total = math.fsum(masses.values())
    if abs(total - 1.0) > SUM_TOL:
        raise SumOutOfTolerance(f"recovered masses sum to {total!r}")
    return validate_mass(frame, masses.items())


def mass_from_commonality(q: CommonalityTable, focal: Iterable[Subset]) -> MassFunction:
    """Recover ``m`` from ``q`` given the focal sets, largest sets first."""
    return _invert(q, focal, upward=True)


def mass_from_implicability(b: ImplicabilityTable, focal: Iterable[Subset]) -> MassFunction:
    """Recover ``m`` from ``b`` given the focal sets, smallest sets first."""
    return _invert(b, focal, upward=False)

