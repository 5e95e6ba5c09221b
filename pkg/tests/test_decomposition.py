import pytest

from focaldecomp import oracle
from focaldecomp.core import classify_structure, complement_mass, make_frame, vacuous, validate_mass
from focaldecomp.decomposition import (
    WeightFunction,
    commonality_from_weights,
    commonality_table,
    conjunctive_weights,
    conjunctive_weights_direct,
    consonant_weights,
    disjunctive_weights,
    disjunctive_weights_direct,
    dual_proxy_weight,
    dual_quasi_bayesian_weights,
    exponent_table,
    implicability_from_weights,
    implicability_table,
    proxy_weight,
    quasi_bayesian_weights,
)
from focaldecomp.errors import DogmaticInput, ModeMismatch, NoUniqueMinimum, NotSubnormal, StructureMismatch
from focaldecomp.focal_points import conjunctive_closure, disjunctive_closure
from focaldecomp.generate import GeneratorSpec, generate_mass
from focaldecomp.transforms import commonality, mass_from_commonality, mass_from_implicability

from conftest import random_masses


def weights_by_label(w):
    return {"".join(w.frame.labels_of(a)): v for a, v in w.items()}


def test_conjunctive_weights_fixtures(fx):
    w = conjunctive_weights(fx["M_CONS"])
    assert weights_by_label(w) == pytest.approx({"a": 0.5, "ab": 0.4, "abc": 5.0}, rel=1e-12)
    w = conjunctive_weights(fx["M_FP"])
    assert weights_by_label(w) == pytest.approx(
        {"b": 1.225, "ab": 4 / 7, "bc": 4 / 7, "abcd": 2.5}, rel=1e-12
    )
    assert w.stats.focal_point_count == 4 and w.stats.closure_ops == 12
    f = make_frame("ab")
    v = conjunctive_weights(vacuous(f))
    assert dict(v.items()) == {f.omega: 1.0}
    assert all(v[a] == 1.0 for a in range(4))


def test_dogmatic_input_and_discount():
    f = make_frame("ab")
    m = validate_mass(f, [(0b01, 0.6), (0b10, 0.4)])
    with pytest.raises(DogmaticInput):
        conjunctive_weights(m)
    w = conjunctive_weights(m, eps=0.01)
    ref = oracle.brute_force_conjunctive_weights(validate_mass(f, [(1, 0.594), (2, 0.396), (3, 0.01)]))
    assert all(w[a] == pytest.approx(ref[a], rel=1e-9) for a in range(4))
    with pytest.raises(NotSubnormal):
        disjunctive_weights(m)
    v = disjunctive_weights(m, eps=0.01)
    assert v.mode == "disjunctive" and 0 in v


def test_direct_formula_examples(fx):
    w = conjunctive_weights_direct(fx["M_CONS"])
    assert w[fx["M_CONS"].frame.subset("a")] == pytest.approx(0.5, rel=1e-12)
    assert conjunctive_weights_direct(fx["M_QB"])[0] == pytest.approx(1.4, rel=1e-12)
    assert conjunctive_weights_direct(fx["M_FP"])[fx["M_FP"].frame.omega] == pytest.approx(2.5, rel=1e-12)


def test_exponent_tables(fx):
    qb = conjunctive_closure(fx["M_QB"].focal_sets)
    assert exponent_table(0, qb).entries == {0b001: 1, 0b010: 1, 0b111: -1}
    f = fx["M_CONS"].frame
    cons = conjunctive_closure(fx["M_CONS"].focal_sets)
    assert exponent_table(f.subset("a"), cons).entries == {f.subset("ab"): 1, f.omega: 0}
    g = fx["M_FP"].frame
    fp = conjunctive_closure(fx["M_FP"].focal_sets)
    assert exponent_table(0, fp).entries == {
        g.subset("b"): 1, g.subset("ab"): 0, g.subset("bc"): 0, g.omega: 0,
    }


def test_proxy_weight(fx):
    cons = fx["M_CONS"]
    f = cons.frame
    assert proxy_weight(cons, f.subset("b")) == pytest.approx(1.0)
    assert proxy_weight(cons, f.subset("a")) == pytest.approx(0.5)
    assert proxy_weight(fx["M_FP"], 0) == pytest.approx(1.0)
    # ∅ in M_QB sits below two incomparable points {a}, {b}
    with pytest.raises(NoUniqueMinimum):
        proxy_weight(fx["M_QB"], 0)
    with pytest.raises(NoUniqueMinimum):
        proxy_weight(cons, f.omega)
    assert dual_proxy_weight(fx["M_SUB"], fx["M_SUB"].frame.omega) == pytest.approx(0.7)


def test_proxy_gives_one_off_closure():
    for m in random_masses(30, 31, n_hi=7):
        cl = conjunctive_closure(m.focal_sets)
        w = oracle.brute_force_conjunctive_weights(m)
        for a in range(2**m.frame.n):
            if a in cl:
                continue
            assert proxy_weight(m, a, cl) == pytest.approx(1.0, abs=1e-12)
            assert w[a] == pytest.approx(1.0, abs=1e-9)


def test_consonant_closed_form(fx):
    w = consonant_weights(fx["M_CONS"])
    assert weights_by_label(w) == pytest.approx({"a": 0.5, "ab": 0.4, "abc": 5.0}, rel=1e-12)
    f = make_frame("abc")
    assert dict(consonant_weights(vacuous(f)).items()) == {f.omega: 1.0}
    with pytest.raises(StructureMismatch) as err:
        consonant_weights(fx["M_QB"])
    assert err.value.category == "not-consonant"


def test_quasi_bayesian_closed_form(fx):
    w = quasi_bayesian_weights(fx["M_QB"])
    assert weights_by_label(w) == pytest.approx(
        {"": 1.4, "a": 3 / 7, "b": 0.5, "abc": 10 / 3}, rel=1e-12
    )
    f = make_frame("abc")
    v = quasi_bayesian_weights(vacuous(f))
    assert v[f.omega] == 1.0 and v[0] == 1.0
    with pytest.raises(StructureMismatch):
        quasi_bayesian_weights(fx["M_CONS"])


def test_dual_quasi_bayesian_closed_form(fx):
    cm = complement_mass(fx["M_QB"])
    v = dual_quasi_bayesian_weights(cm)
    assert weights_by_label(v) == pytest.approx(
        {"": 10 / 3, "ac": 0.5, "bc": 3 / 7, "abc": 1.4}, rel=1e-12
    )
    assert v.isclose(disjunctive_weights(cm), 1e-12)
    f = make_frame("ab")
    assert dual_quasi_bayesian_weights(validate_mass(f, [(0, 1.0)]))[0] == 1.0
    with pytest.raises(StructureMismatch):
        dual_quasi_bayesian_weights(fx["M_CONS"])


def test_quasi_bayesian_with_empty_focal_set():
    # ∅ is disjoint from everything, so {∅, {a}, {b}, Ω} is still quasi-Bayesian
    f = make_frame("abc")
    m = validate_mass(f, [(0, 0.1), (1, 0.3), (2, 0.2), (7, 0.4)])
    assert classify_structure(m).quasi_bayesian
    ref = oracle.brute_force_conjunctive_weights(m)
    w = quasi_bayesian_weights(m)
    assert all(w[a] == pytest.approx(ref[a], rel=1e-12) for a in range(8))
    # single disjoint set: ∅ is not a focal point and keeps weight 1
    m = validate_mass(f, [(1, 0.6), (7, 0.4)])
    assert 0 not in quasi_bayesian_weights(m)


def test_disjunctive_weights_fixtures(fx):
    v = disjunctive_weights(fx["M_SUB"])
    assert dict(v.items()) == pytest.approx({0: 5.0, 1: 2 / 7, 3: 0.7}, rel=1e-12)
    f = make_frame("ab")
    v = disjunctive_weights(validate_mass(f, [(0, 1.0)]))
    assert dict(v.items()) == {0: 1.0}
    assert disjunctive_weights_direct(fx["M_SUB"])[3] == pytest.approx(0.7, rel=1e-12)
    assert disjunctive_weights_direct(fx["M_SUB"])[0] == pytest.approx(5.0, rel=1e-12)
    cl = disjunctive_closure(fx["M_SUB"].focal_sets)
    assert exponent_table(3, cl).entries == {1: 1, 0: 0}


def test_weights_reconstruct_fixtures(fx):
    f = fx["M_CONS"].frame
    w = conjunctive_weights(fx["M_CONS"])
    assert commonality_from_weights(w, f.subset("b")) == pytest.approx(0.5)
    g = fx["M_FP"].frame
    w = conjunctive_weights(fx["M_FP"])
    assert commonality_from_weights(w, g.subset("a")) == pytest.approx(0.7)
    assert commonality_from_weights(w, 0) == 1.0
    v = disjunctive_weights(fx["M_SUB"])
    assert implicability_from_weights(v, 0b10) == pytest.approx(0.2)
    assert implicability_from_weights(v, 0b01) == pytest.approx(0.7)
    assert implicability_from_weights(v, 0b11) == 1.0
    with pytest.raises(ModeMismatch):
        commonality_from_weights(v, 0)
    with pytest.raises(ModeMismatch):
        implicability_from_weights(w, 0)


def _assert_matches_oracle(w, ref, closure_points):
    n = w.frame.n
    for a in range(2**n):
        assert w[a] == pytest.approx(ref[a], rel=1e-9), a
        if a not in closure_points:
            assert abs(ref[a] - 1.0) <= 1e-9


def test_conjunctive_against_oracle():
    for m in random_masses(60, 41):
        w = conjunctive_weights(m)
        cl = conjunctive_closure(m.focal_sets)
        _assert_matches_oracle(w, oracle.brute_force_conjunctive_weights(m), cl.points)
        assert set(w.keys()) == set(cl.points)


def test_disjunctive_against_oracle():
    for m in random_masses(60, 42, subnormal=True):
        v = disjunctive_weights(m)
        cl = disjunctive_closure(m.focal_sets)
        _assert_matches_oracle(v, oracle.brute_force_disjunctive_weights(m), cl.points)


def test_formula_agreement():
    for m in random_masses(40, 43, n_hi=8, max_focal=40):
        assert conjunctive_weights(m).isclose(conjunctive_weights_direct(m), 1e-9)
    for m in random_masses(40, 44, n_hi=8, max_focal=40, subnormal=True):
        assert disjunctive_weights(m).isclose(disjunctive_weights_direct(m), 1e-9)
    for seed in range(30):
        n = 2 + seed % 7
        cons = generate_mass(GeneratorSpec("consonant", n, 1 + seed % (n + 1), seed))
        assert consonant_weights(cons).isclose(conjunctive_weights(cons), 1e-12)
        qb = generate_mass(GeneratorSpec("quasi-bayesian", n, 1 + seed % n, seed))
        assert quasi_bayesian_weights(qb).isclose(conjunctive_weights(qb), 1e-12)
        assert quasi_bayesian_weights(qb).isclose(conjunctive_weights_direct(qb), 1e-12)
        dqb = generate_mass(GeneratorSpec("dual-quasi-bayesian", n, 1 + seed % n, seed))
        assert dual_quasi_bayesian_weights(dqb).isclose(disjunctive_weights(dqb), 1e-12)


def test_reconstruction_pipelines():
    for m in random_masses(40, 45):
        w = conjunctive_weights(m)
        q = oracle.dense_commonality(m)
        for a in range(2**m.frame.n):
            assert commonality_from_weights(w, a) == pytest.approx(q[a], rel=1e-9)
        assert mass_from_commonality(commonality_table(w, m.focal_sets), m.focal_sets).isclose(m, 1e-9)
    for m in random_masses(40, 46, subnormal=True):
        v = disjunctive_weights(m)
        b = oracle.dense_implicability(m)
        for a in range(2**m.frame.n):
            assert implicability_from_weights(v, a) == pytest.approx(b[a], rel=1e-9)
        assert mass_from_implicability(implicability_table(v, m.focal_sets), m.focal_sets).isclose(m, 1e-9)


def test_duality_bridge():
    for m in random_masses(40, 47):
        omega = m.frame.omega
        w = conjunctive_weights(m)
        v = disjunctive_weights(complement_mass(m))
        assert set(v.keys()) == {omega ^ a for a in w.keys()}
        for a, wa in w.items():
            assert v[omega ^ a] == pytest.approx(wa, rel=1e-9)


def test_exponent_equilibrium():
    # alternating sum over every interval [A, C] with A strictly inside C vanishes
    for n in range(1, 7):
        for c in range(2**n):
            sub = c
            while True:
                a = sub
                if a != c:
                    total = 0
                    rest = c ^ a
                    s = rest
                    while True:
                        total += (-1) ** (s.bit_count() + 1)
                        if s == 0:
                            break
                        s = (s - 1) & rest
                    assert total == 0
                if sub == 0:
                    break
                sub = (sub - 1) & c


def test_exponents_are_integers_and_anchor_at_minimum():
    for m in random_masses(20, 48, n_hi=7, max_focal=25):
        cl = conjunctive_closure(m.focal_sets)
        for a in cl.ordered():
            ex = exponent_table(a, cl)
            assert all(isinstance(e, int) for e in ex.entries.values())
            minima = [f for f in ex.entries if not any(g != f and g & f == g for g in ex.entries)]
            assert all(ex.entries[f] == 1 for f in minima)


def test_weight_function_defaults():
    f = make_frame("ab")
    w = WeightFunction(f, "conjunctive", {1: 2.0})
    assert w[1] == 2.0 and w[2] == 1.0
    other = WeightFunction(f, "conjunctive", {1: 2.0, 2: 1.0})
    assert w.isclose(other)
    assert not w.isclose(WeightFunction(f, "disjunctive", {1: 2.0}))


def test_wide_consonant_frame():
    # products counter scales with the closure, not with 2^n
    m = generate_mass(GeneratorSpec("consonant", 300, 50, 3))
    w = conjunctive_weights(m)
    assert w.stats.focal_point_count == 50
    assert w.stats.products <= 50 * 50
    assert commonality_from_weights(w, 0) == 1.0
    some = m.focal_sets[10]
    assert commonality_from_weights(w, some) == pytest.approx(commonality(m, some), rel=1e-9)
