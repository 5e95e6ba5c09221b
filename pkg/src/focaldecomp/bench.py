"""Benchmark harness: decomposition cost against the size of the evidence."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, fields
from typing import Iterable

from .core import classify_structure
from .decomposition import conjunctive_weights, disjunctive_weights
from .errors import ClosureSizeExceeded
from .focal_points import DEFAULT_CAP
from .generate import GeneratorSpec, generate_mass

HEADER = (
    "structure",
    "n",
    "focal_count",
    "focal_point_count",
    "closure_ops",
    "decompose_products",
    "wall_time_us",
    "seed",
    "fmt_cost",
    "status",
)


@dataclass(frozen=True)
class BenchRecord:
    structure: str
    n: int
    focal_count: int
    focal_point_count: int
    closure_ops: int
    decompose_products: int
    wall_time_us: float
    seed: int
    fmt_cost: int
    status: str = "ok"

    @property
    def fmt_ratio(self) -> float:
        """Analytic FMT cost divided by the closure work actually done."""
        return self.fmt_cost / max(self.closure_ops + self.decompose_products, 1)


def fmt_cost(n: int) -> int:
    return n * 2**n


def bench_one(spec: GeneratorSpec, repetitions: int = 5, cap: int = DEFAULT_CAP) -> BenchRecord:
    m = generate_mass(spec)
    decompose = conjunctive_weights if m.non_dogmatic else disjunctive_weights
    times = []
    w = None
    try:
        for _ in range(max(repetitions, 1)):
            t0 = time.perf_counter_ns()
            w = decompose(m, cap=cap)
            times.append((time.perf_counter_ns() - t0) / 1000.0)
    except ClosureSizeExceeded:
        return BenchRecord(
            spec.structure, spec.n, len(m), 0, 0, 0, 0.0, spec.seed, fmt_cost(spec.n), "size-exceeded"
        )
    st = w.stats
    return BenchRecord(
        structure=classify_structure(m).kind if spec.structure == "random" else spec.structure,
        n=spec.n,
        focal_count=st.focal_count,
        focal_point_count=st.focal_point_count,
        closure_ops=st.closure_ops,
        decompose_products=st.products,
        wall_time_us=statistics.median(times),
        seed=spec.seed,
        fmt_cost=fmt_cost(spec.n),
    )


def run_benchmark(
    specs: Iterable[GeneratorSpec], repetitions: int = 5, cap: int = DEFAULT_CAP
) -> list[BenchRecord]:
    return [bench_one(s, repetitions, cap) for s in specs]


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for r in records:
        writer.writerow([getattr(r, f) for f in HEADER])
    return buf.getvalue()


def from_csv(text: str) -> list[BenchRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    types = {f.name: f.type for f in fields(BenchRecord)}
    conv = {"int": int, "float": float, "str": str}
    return [BenchRecord(**{k: conv[types[k]](v) for k, v in row.items()}) for row in reader]
