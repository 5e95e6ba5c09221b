import pytest
from hypothesis import given, strategies as st

from focaldecomp.core import (
    Frame,
    canonical_order,
    classify_structure,
    complement_mass,
    discount,
    is_subset,
    make_frame,
    vacuous,
    validate_mass,
)
from focaldecomp.errors import (
    DuplicateLabel,
    DuplicateSubset,
    EmptyFrame,
    FrameMismatch,
    NegativeMass,
    SumOutOfTolerance,
)

from conftest import random_masses


def test_make_frame():
    assert make_frame(["a"]).n == 1
    f = make_frame(["a", "b", "c"])
    assert f.n == 3 and f.index("a") == 0 and f.index("c") == 2
    with pytest.raises(DuplicateLabel):
        make_frame(["a", "a"])
    with pytest.raises(EmptyFrame):
        make_frame([])


def test_subset_encoding_roundtrip():
    f = make_frame(["a", "b", "c"])
    assert f.subset(["a", "c"]) == 0b101
    assert f.labels_of(0b110) == ["b", "c"]
    assert f.complement(0b001) == 0b110
    with pytest.raises(FrameMismatch):
        f.subset(["z"])
    with pytest.raises(FrameMismatch):
        f.check(0b1000)


def test_wide_frames():
    f = make_frame([f"x{i}" for i in range(1024)])
    a = f.subset(["x0", "x1023"])
    assert a.bit_count() == 2
    assert f.complement(f.complement(a)) == a
    assert f.omega.bit_length() == 1024


subsets16 = st.integers(0, 2**16 - 1)


@given(subsets16, subsets16)
def test_subset_algebra_laws(a, b):
    omega = 2**16 - 1
    assert is_subset(a & b, a)
    assert is_subset(a, a | b)
    assert omega ^ (omega ^ a) == a
    assert is_subset(a, b) == (a & b == a)


def test_canonical_order():
    assert canonical_order([0b11, 0b100, 0b1, 0]) == [0, 0b1, 0b100, 0b11]


def test_validate_mass(fx):
    f2 = make_frame(["a", "b"])
    m = validate_mass(f2, [(f2.omega, 1.0)])
    assert m.focal_sets == (f2.omega,)
    assert classify_structure(m).kind == "vacuous"

    f3 = make_frame(["a", "b", "c"])
    m = validate_mass(f3, [(0b001, 0.5), (0b011, 0.3), (0b111, 0.2)])
    assert m == fx["M_CONS"]

    with pytest.raises(SumOutOfTolerance):
        validate_mass(f3, [(0b001, 0.6), (0b010, 0.6)])
    with pytest.raises(NegativeMass):
        validate_mass(f3, [(0b001, 1.1), (0b010, -0.1)])
    with pytest.raises(DuplicateSubset):
        validate_mass(f3, [(0b001, 0.5), (0b001, 0.5)])
    m = validate_mass(f3, [(0b001, 1.0), (0b010, 1e-13)])
    assert m.focal_sets == (0b001,)


def test_classify_fixtures(fx):
    cons = classify_structure(fx["M_CONS"])
    assert cons.kind == "consonant" and cons.non_dogmatic and not cons.subnormal
    qb = classify_structure(fx["M_QB"])
    assert qb.kind == "quasi-bayesian" and qb.non_dogmatic
    fp = classify_structure(fx["M_FP"])
    assert fp.kind == "general" and fp.non_dogmatic
    sub = classify_structure(fx["M_SUB"])
    # ∅ ⊂ {a} ⊂ Ω is a chain, and also dual quasi-Bayesian on a 2-element frame
    assert sub.kind == "consonant" and sub.subnormal and sub.dual_quasi_bayesian
    dqb = classify_structure(complement_mass(fx["M_QB"]))
    assert dqb.kind == "dual-quasi-bayesian"
    assert classify_structure(complement_mass(fx["M_CONS"])).subnormal


def test_complement_mass(fx):
    f = make_frame(["a", "b"])
    assert complement_mass(vacuous(f))[0] == 1.0
    cm = complement_mass(fx["M_CONS"])
    f3 = fx["M_CONS"].frame
    assert dict(cm.items()) == {f3.subset("bc"): 0.5, f3.subset("c"): 0.3, 0: 0.2}
    for m in list(fx.values()) + random_masses(20, 1):
        assert complement_mass(complement_mass(m)) == m
        assert m.non_dogmatic == complement_mass(m).subnormal


def test_discount_makes_non_dogmatic():
    f = make_frame(["a", "b"])
    m = validate_mass(f, [(0b01, 1.0)])
    d = discount(m, 0.1)
    assert d.non_dogmatic and d[f.omega] == pytest.approx(0.1) and d[0b01] == pytest.approx(0.9)
    with pytest.raises(ValueError):
        discount(m, 0.0)


def test_random_masses_are_valid():
    for m in random_masses(50, 2):
        total = sum(v for _, v in m.items())
        assert abs(total - 1) <= 1e-9
        assert all(v > 0 for _, v in m.items())


def test_frame_is_hashable_value():
    assert Frame(("a", "b")) == make_frame(["a", "b"])
    assert len({Frame(("a",)), Frame(("a",))}) == 1
