"""Command-line entry point: ``focaldecomp <command> ...``.

Every command reads and writes the JSON documents of :mod:`focaldecomp.documents`.
Failures exit with status 2 and print ``{"error": <category>, "message": ...}``
on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bench, oracle
from .core import classify_structure, complement_mass, discount
from .decomposition import (
    WeightFunction,
    commonality_from_weights,
    conjunctive_weights,
    conjunctive_weights_direct,
    consonant_weights,
    disjunctive_weights,
    disjunctive_weights_direct,
    dual_quasi_bayesian_weights,
    implicability_from_weights,
    quasi_bayesian_weights,
)
from .documents import (
    dumps,
    load_json,
    mass_from_document,
    mass_to_document,
    table_from_document,
    table_to_document,
    weights_to_document,
)
from .errors import DSTError, StructureMismatch
from .focal_points import CONJUNCTIVE, DEFAULT_CAP, DISJUNCTIVE, closure
from .fusion import (
    bold_combine,
    cautious_combine,
    conjunctive_combine,
    dempster_combine,
    disjunctive_combine,
)
from .generate import GeneratorSpec, generate_mass, generator_metadata
from .transforms import (
    commonality_on,
    implicability_on,
    mass_from_commonality,
    mass_from_implicability,
)

RULES = {
    "conjunctive": conjunctive_combine,
    "disjunctive": disjunctive_combine,
    "dempster": dempster_combine,
    "cautious": cautious_combine,
    "bold": bold_combine,
}


class UsageError(DSTError):
    category = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _mass(path):
    return mass_from_document(load_json(path))


def _closed_form(m, mode):
    s = classify_structure(m)
    if mode == CONJUNCTIVE:
        if s.consonant and s.non_dogmatic:
            return consonant_weights(m)
        if s.quasi_bayesian:
            return quasi_bayesian_weights(m)
        raise StructureMismatch("consonant-or-quasi-bayesian")
    if s.dual_quasi_bayesian:
        return dual_quasi_bayesian_weights(m)
    if s.consonant and s.subnormal:
        # a chain from ∅ is the complement of a chain to Ω
        w = consonant_weights(complement_mass(m))
        omega = m.frame.omega
        return WeightFunction(m.frame, DISJUNCTIVE, {omega ^ a: v for a, v in w.items()})
    raise StructureMismatch("dual-quasi-bayesian")


def _max_weight_deviation(m, w) -> float:
    ref = (
        oracle.brute_force_conjunctive_weights(m)
        if w.mode == CONJUNCTIVE
        else oracle.brute_force_disjunctive_weights(m)
    )
    got = np.array([w[a] for a in range(1 << m.frame.n)])
    return float(np.max(np.abs(got - ref.values) / np.abs(ref.values)))


def _max_abs(values, ref) -> float:
    return float(np.max(np.abs(np.asarray(values) - ref)))


def cmd_transform(args):
    doc = load_json(args.input)
    if args.inverse:
        table = table_from_document(doc)
        invert = mass_from_commonality if table.kind == "q" else mass_from_implicability
        return mass_to_document(invert(table, table.support))
    m = mass_from_document(doc)
    table = commonality_on(m, m.focal_sets) if args.to == "q" else implicability_on(m, m.focal_sets)
    return table_to_document(table, args.to)


def cmd_focal_points(args):
    m = _mass(args.input)
    mode = DISJUNCTIVE if args.disjunctive else CONJUNCTIVE
    cl = closure(m.focal_sets, mode, args.cap)
    return {
        "frame": list(m.frame.labels),
        "mode": mode,
        "counters": {
            "focal_sets": len(m),
            "points": len(cl),
            "operations": cl.operations,
        },
        "points": [{"set": m.frame.labels_of(a)} for a in cl.ordered()],
    }


def cmd_decompose(args):
    m = _mass(args.input)
    mode = DISJUNCTIVE if args.disjunctive else CONJUNCTIVE
    if args.discount:
        # applied up front so every route sees the same mass
        m = discount(m, args.discount) if mode == CONJUNCTIVE else complement_mass(
            discount(complement_mass(m), args.discount)
        )
    if args.closed_form:
        w = _closed_form(m, mode)
    elif args.direct:
        w = (conjunctive_weights_direct if mode == CONJUNCTIVE else disjunctive_weights_direct)(
            m, cap=args.cap
        )
    else:
        w = (conjunctive_weights if mode == CONJUNCTIVE else disjunctive_weights)(m, cap=args.cap)
    extra = {}
    if w.stats is not None:
        extra["counters"] = {
            "focal_sets": w.stats.focal_count,
            "focal_points": w.stats.focal_point_count,
            "closure_ops": w.stats.closure_ops,
            "products": w.stats.products,
        }
    if args.check:
        extra["check"] = {"max_rel_deviation": _max_weight_deviation(m, w)}
    return weights_to_document(w, extra)


def cmd_fuse(args):
    m1, m2 = _mass(args.first), _mass(args.second)
    return mass_to_document(RULES[args.rule](m1, m2))


def cmd_gen(args):
    spec = GeneratorSpec(args.structure, args.n, args.focal, args.seed, args.subnormal)
    return mass_to_document(generate_mass(spec), generator_metadata(spec))


def cmd_bench(args):
    specs = [
        GeneratorSpec(args.structure, n, args.focal, seed, args.subnormal)
        for n in args.n
        for seed in range(args.seed, args.seed + args.seeds)
    ]
    return bench.to_csv(bench.run_benchmark(specs, args.repetitions, args.cap))


def cmd_check(args):
    m = _mass(args.input)
    n = m.frame.n
    report: dict = {"n": n, "focal_sets": len(m), "structure": classify_structure(m).kind}
    q_dense = oracle.dense_commonality(m).values
    b_dense = oracle.dense_implicability(m).values
    everything = range(1 << n)
    q_direct = commonality_on(m, everything)
    b_direct = implicability_on(m, everything)
    report["commonality_vs_fmt"] = _max_abs([q_direct[a] for a in everything], q_dense)
    report["implicability_vs_fmt"] = _max_abs([b_direct[a] for a in everything], b_dense)
    if m.non_dogmatic:
        w = conjunctive_weights(m)
        report["conjunctive_weights_vs_brute_force"] = _max_weight_deviation(m, w)
        q_w = [commonality_from_weights(w, a) for a in everything]
        report["commonality_from_weights_vs_fmt"] = _max_abs(q_w, q_dense)
    if m.subnormal:
        v = disjunctive_weights(m)
        report["disjunctive_weights_vs_brute_force"] = _max_weight_deviation(m, v)
        b_v = [implicability_from_weights(v, a) for a in everything]
        report["implicability_from_weights_vs_fmt"] = _max_abs(b_v, b_dense)
    if len(m) <= oracle.SELECTION_CAP:
        for mode in (CONJUNCTIVE, DISJUNCTIVE):
            got = set(closure(m.focal_sets, mode).points)
            ref = oracle.brute_force_focal_points(m.focal_sets, mode)
            report[f"{mode}_closure_matches"] = got == ref
    return report


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="focaldecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", help="mass document to q/b table document, or back")
    t.add_argument("input", nargs="?", default="-")
    t.add_argument("--to", choices=("q", "b"), default="q")
    t.add_argument("--inverse", action="store_true", help="read a table document, emit masses")
    t.set_defaults(func=cmd_transform)

    f = sub.add_parser("focal-points", help="intersection (or union) closure of the focal sets")
    f.add_argument("input", nargs="?", default="-")
    f.add_argument("--disjunctive", action="store_true")
    f.add_argument("--cap", type=int, default=DEFAULT_CAP)
    f.set_defaults(func=cmd_focal_points)

    d = sub.add_parser("decompose", help="conjunctive or disjunctive weight function")
    d.add_argument("input", nargs="?", default="-")
    side = d.add_mutually_exclusive_group()
    side.add_argument("--conjunctive", action="store_true", default=True)
    side.add_argument("--disjunctive", action="store_true")
    route = d.add_mutually_exclusive_group()
    route.add_argument("--direct", action="store_true")
    route.add_argument("--closed-form", action="store_true")
    d.add_argument("--discount", type=float, default=None)
    d.add_argument("--check", action="store_true", help="compare against the full-lattice oracle")
    d.add_argument("--cap", type=int, default=DEFAULT_CAP)
    d.set_defaults(func=cmd_decompose)

    u = sub.add_parser("fuse", help="combine two mass documents")
    u.add_argument("first")
    u.add_argument("second")
    u.add_argument("--rule", choices=sorted(RULES), default="conjunctive")
    u.set_defaults(func=cmd_fuse)

    g = sub.add_parser("gen", help="seeded random mass document")
    g.add_argument("--structure", default="random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--focal", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--subnormal", action="store_true")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="benchmark CSV over frame sizes")
    b.add_argument("--structure", default="consonant")
    b.add_argument("--n", type=int, nargs="+", default=[16, 64, 128])
    b.add_argument("--focal", type=int, default=15)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--seeds", type=int, default=1)
    b.add_argument("--subnormal", action="store_true")
    b.add_argument("--repetitions", type=int, default=5)
    b.add_argument("--cap", type=int, default=DEFAULT_CAP)
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("check", help="oracle cross-validation report")
    c.add_argument("input", nargs="?", default="-")
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except DSTError as exc:
        sys.stderr.write(json.dumps({"error": exc.category, "message": str(exc)}) + "\n")
        return 2
    sys.stdout.write(out if isinstance(out, str) else dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
