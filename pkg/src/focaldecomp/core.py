"""Frames, bitmask subsets and sparse mass functions.

A subset of a frame is a plain ``int`` whose bit ``i`` is set when the frame
element at position ``i`` belongs to it. Python integers have arbitrary
length, so frames of any size share one representation; for frames of up to
63 elements the integers stay machine-word sized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLabel,
    DuplicateSubset,
    EmptyFrame,
    FrameMismatch,
    NegativeMass,
    SumOutOfTolerance,
)

Subset = int

ZERO_MASS = 1e-12
SUM_TOL = 1e-9


def cardinality(a: Subset) -> int:
    return a.bit_count()


def is_subset(a: Subset, b: Subset) -> bool:
    """True iff ``a`` is contained in ``b``."""
    return a & b == a


def canonical_key(a: Subset) -> tuple[int, int]:
    """Sort key: cardinality ascending, then bit-pattern value."""
    return (a.bit_count(), a)


def canonical_order(sets: Iterable[Subset], reverse: bool = False) -> list[Subset]:
    return sorted(sets, key=canonical_key, reverse=reverse)


@dataclass(frozen=True)
class Frame:
    """Ordered frame of discernment. Element ``i`` maps to bit ``i``."""

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise EmptyFrame("a frame needs at least one label")
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise DuplicateLabel(f"duplicate label {lab!r}")
            index[lab] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def omega(self) -> Subset:
        return (1 << self.n) - 1

    @property
    def empty(self) -> Subset:
        return 0

    def index(self, label: str) -> int:
        return self._index[label]

    def subset(self, labels: Iterable[str]) -> Subset:
        """Encode an iterable of labels as a bitmask."""
        bits = 0
        for lab in labels:
            try:
                bits |= 1 << self._index[lab]
            except KeyError:
                raise FrameMismatch(f"label {lab!r} not in frame") from None
        return bits

    def labels_of(self, a: Subset) -> list[str]:
        self.check(a)
        return [lab for i, lab in enumerate(self.labels) if a >> i & 1]

    def complement(self, a: Subset) -> Subset:
        return self.omega ^ a

    def check(self, a: Subset) -> Subset:
        if a < 0 or a >> self.n:
            raise FrameMismatch(f"subset {a:#x} has bits outside a frame of size {self.n}")
        return a

    def format(self, a: Subset) -> str:
        if a == self.omega:
            return "Ω"
        return "{" + ",".join(self.labels_of(a)) + "}"


def make_frame(labels: Sequence[str]) -> Frame:
    return Frame(tuple(labels))


class MassFunction:
    """Sparse mass assignment over a frame.

    Keys are exactly the focal sets; stored masses are strictly positive and
    sum to one. Build instances with :func:`validate_mass` (or
    :meth:`from_labels`) rather than calling the constructor directly.
    """

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, masses: Mapping[Subset, float]):
        self.frame = frame
        self._masses = {a: masses[a] for a in canonical_order(masses)}

    @classmethod
    def from_labels(cls, frame: Frame, entries: Mapping[Iterable[str], float] | Iterable):
        if isinstance(entries, Mapping):
            entries = entries.items()
        return validate_mass(frame, [(frame.subset(s), v) for s, v in entries])

    def __getitem__(self, a: Subset) -> float:
        return self._masses.get(a, 0.0)

    def __contains__(self, a: Subset) -> bool:
        return a in self._masses

    def __len__(self) -> int:
        return len(self._masses)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self._masses)

    def items(self):
        return self._masses.items()

    @property
    def focal_sets(self) -> tuple[Subset, ...]:
        return tuple(self._masses)

    @property
    def non_dogmatic(self) -> bool:
        return self.frame.omega in self._masses

    @property
    def subnormal(self) -> bool:
        return 0 in self._masses

    def __eq__(self, other):
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._masses == other._masses

    def __hash__(self):
        return hash((self.frame, tuple(self._masses.items())))

    def isclose(self, other: MassFunction, tol: float = 1e-9) -> bool:
        """Entry-wise absolute comparison, treating missing keys as zero."""
        if self.frame != other.frame:
            return False
        keys = set(self._masses) | set(other._masses)
        return all(abs(self[a] - other[a]) <= tol for a in keys)

    def __repr__(self):
        body = ", ".join(f"{self.frame.format(a)}: {v:.6g}" for a, v in self._masses.items())
        return f"MassFunction({body})"


def validate_mass(frame: Frame, entries: Iterable[tuple[Subset, float]]) -> MassFunction:
    masses: dict[Subset, float] = {}
    seen = set()
    for a, v in entries:
        frame.check(a)
        if a in seen:
            raise DuplicateSubset(f"subset {frame.format(a)} listed twice")
        seen.add(a)
        v = float(v)
        if math.isnan(v) or v < -ZERO_MASS:
            raise NegativeMass(f"mass {v} on {frame.format(a)}")
        if v >= ZERO_MASS:
            masses[a] = v
    total = math.fsum(masses.values())
    if abs(total - 1.0) > SUM_TOL:
        raise SumOutOfTolerance(f"masses sum to {total!r}")
    return MassFunction(frame, masses)


def vacuous(frame: Frame) -> MassFunction:
    return MassFunction(frame, {frame.omega: 1.0})


def discount(m: MassFunction, eps: float) -> MassFunction:
    """Move a fraction ``eps`` of every mass onto Ω, making ``m`` non-dogmatic."""
    if not 0.0 < eps <= 1.0:
        raise ValueError("discount rate must lie in (0, 1]")
    omega = m.frame.omega
    out = {a: (1.0 - eps) * v for a, v in m.items()}
    out[omega] = out.get(omega, 0.0) + eps
    return validate_mass(m.frame, out.items())


@dataclass(frozen=True)
class StructureClass:
    kind: str
    non_dogmatic: bool
    subnormal: bool
    consonant: bool
    quasi_bayesian: bool
    dual_quasi_bayesian: bool

    def __str__(self):
        return self.kind


def _is_chain(sets: Sequence[Subset]) -> bool:
    ordered = canonical_order(sets)
    return all(is_subset(a, b) for a, b in zip(ordered, ordered[1:]))


def _pairwise_disjoint(sets: Iterable[Subset]) -> bool:
    acc = 0
    for a in sets:
        if a & acc:
            return False
        acc |= a
    return True


def classify_structure(m: MassFunction) -> StructureClass:
    """Classify the focal-set family of ``m``.

    The boolean fields report each structural predicate independently, since
    a family can be several things at once (a two-element chain containing
    both ∅ and Ω is consonant, quasi-Bayesian and dual quasi-Bayesian). The
    ``kind`` field picks the first match in the order vacuous, consonant,
    quasi-bayesian, dual-quasi-bayesian, general.
    """
    omega = m.frame.omega
    focal = m.focal_sets
    nd, sub = m.non_dogmatic, m.subnormal
    consonant = _is_chain(focal)
    qb = nd and _pairwise_disjoint(a for a in focal if a != omega)
    dqb = sub and _pairwise_disjoint(omega ^ a for a in focal if a != 0)
    if focal == (omega,):
        kind = "vacuous"
    elif consonant:
        kind = "consonant"
    elif qb:
        kind = "quasi-bayesian"
    elif dqb:
        kind = "dual-quasi-bayesian"
    else:
        kind = "general"
    return StructureClass(kind, nd, sub, consonant, qb, dqb)


def complement_mass(m: MassFunction) -> MassFunction:
    """Mass function whose focal sets are the complements of those of ``m``."""
    omega = m.frame.omega
    return MassFunction(m.frame, {omega ^ a: v for a, v in m.items()})


def check_same_frame(*items) -> Frame:
    frames = {x.frame for x in items}
    if len(frames) != 1:
        raise FrameMismatch("operands live on different frames")
    return frames.pop()
