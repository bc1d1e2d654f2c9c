from fractions import Fraction as F

import pytest

from tanaka_forge.graded import (
    CRError,
    CRPartition,
    GradingError,
    PartitionFailure,
    admissible_structures,
    attach_cr,
    build_partition_iv,
    check_condition_ii,
    check_condition_iii,
    classify,
    diagram_for,
    dominant_weights_by_sum,
    enumerate_shifts,
    grade_algebra,
    real_form_admissible,
    swap_involution,
)
from tanaka_forge.presets import sl2_algebra, sl3_algebra
from tanaka_forge.roots import Character, build_root_system, cartan_matrix, weight_system

SL3, _ = sl3_algebra()
SL2, _ = sl2_algebra()


def shifts(alg, w):
    return [d.shift for d in enumerate_shifts(alg, weight_system(alg.root_system, w), w)]


# --- the graded CR algebra --------------------------------------------------

def test_sl3_gradation_and_cr_roots():
    assert SL3.kind == 2 and SL3.cokind == 2
    assert sorted(SL3.R_p(-1)) == [(-1, 0), (0, -1)]
    assert SL3.R10 == [(0, -1)]
    assert SL3.R01 == [(-1, 0)]
    assert SL3.levi_tanaka


def test_sl2_gradation():
    assert SL2.kind == 1
    assert SL2.R_p(-1) == [(-1,)]
    assert SL2.j_value((-1,)) == -1


def test_grading_must_be_integral():
    rs = build_root_system(cartan_matrix("A2"))
    with pytest.raises(GradingError):
        grade_algebra(rs, (F(1, 2), 1))


def test_cr_axioms_reject_scaled_J():
    rs = build_root_system(cartan_matrix("A2"))
    alg = grade_algebra(rs, (1, 1))
    with pytest.raises(CRError):
        attach_cr(alg, (2, -2))
    # both degree -1 roots on the same side: their sum violates [JX, JY] = [X, Y]
    with pytest.raises(CRError):
        attach_cr(alg, (1, 1))


# --- shifts -------------------------------------------------------------------

def test_shifts_of_gamma10():
    ds = enumerate_shifts(SL3, weight_system(SL3.root_system, (1, 0)), (1, 0))
    assert [sorted(set(d.degrees.values())) for d in ds] == [[-3, -2, -1], [-2, -1, 0]]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_sl2_line_count(n):
    assert len(shifts(SL2, (n - 1,))) == n - 1


def test_single_weight_has_no_shift():
    assert enumerate_shifts(SL3, Character({(0, 0): 1})) == []
    assert enumerate_shifts(SL3, Character()) == []


# --- condition (ii) ------------------------------------------------------------

def test_condition_ii_gamma10():
    d = diagram_for(SL3, (1, 0), -1)
    assert sorted(set(d.degrees.values())) == [-2, -1, 0]
    assert check_condition_ii(d) == F(1, 3)


def test_condition_ii_gamma20_zero_line():
    for shift in (0, -2):
        d = diagram_for(SL3, (2, 0), shift)
        line = sorted(w for w, p in d.degrees.items() if p in (0, -2) and SL3.weight_E(w) == 0)
        assert line == [(-2, 2), (1, -1)]
        assert sorted(SL3.weight_J(w) for w in line) == [F(-4, 3), F(2, 3)]
        assert check_condition_ii(d) is None


def test_condition_ii_singleton():
    d = diagram_for(SL2, (1,), F(-3, 2))  # one weight in degree -2, nothing in 0
    assert d.P_p(0) == [] and len(d.P_p(-2)) == 1
    assert check_condition_ii(d) is not None


# --- condition (iii) -----------------------------------------------------------

def test_condition_iii_sl2_three_dim():
    bad = diagram_for(SL2, (2,), -1)
    assert sorted(set(bad.degrees.values())) == [-2, -1, 0]
    viol = check_condition_iii(bad)
    assert viol
    # lam - 2 gamma with lam the bottom weight and gamma the degree -1 root
    assert {(v.weight, v.offending) for v in viol} == {((-2,), (2,))}
    good = diagram_for(SL2, (2,), -2)
    assert sorted(set(good.degrees.values())) == [-3, -2, -1]
    assert check_condition_iii(good) == []


def test_condition_iii_vacuous():
    d = diagram_for(SL3, (1, 0), 0)  # degrees 1, 0, -1: no degree -2
    assert d.P_p(-2) == []
    assert check_condition_iii(d) == []


# --- condition (iv) ------------------------------------------------------------

def test_partition_gamma10_top():
    d = diagram_for(SL3, (1, 0), -2)
    part = build_partition_iv(d)
    assert isinstance(part, CRPartition)
    # L_1 = L_2 + alpha_1 with L_2 the degree -2 weight
    assert d.P_p(-2) == [(-1, 1)]
    assert part.p10 == ((1, 0),) and part.p01 == ()


def test_partition_gamma20():
    d = diagram_for(SL3, (2, 0), -1)
    part = build_partition_iv(d)
    assert isinstance(part, CRPartition)
    assert part.p10 == ((1, -1),)  # L_1 + L_3
    assert part.p01 == ((-2, 2),)  # 2 L_2


def test_partition_failure_witness():
    d = diagram_for(SL2, (2,), -1)
    res = build_partition_iv(d)
    assert isinstance(res, PartitionFailure)


def test_partition_empty_degree_minus_one():
    d = diagram_for(SL3, (1, 0), -4)  # everything below -1
    part = build_partition_iv(d)
    assert isinstance(part, CRPartition) and part.p10 == () and part.p01 == ()


# --- admissible structures -----------------------------------------------------

@pytest.mark.parametrize("n", [3, 4])
def test_gamma_n0_unique_structure_on_extreme_line(n):
    for w in ((n, 0), (0, n)):
        sts = admissible_structures(SL3, w)
        assert len(sts) == 1
        d = sts[0].diagram
        top = max(SL3.weight_E(x) for x in d.weights)
        assert d.P_p(-1) == [x for x in sorted(d.weights) if SL3.weight_E(x) == top]


def test_gamma11_two_structures():
    sts = admissible_structures(SL3, (1, 1))
    assert [s.shift for s in sts] == [-2, 0]
    assert [s.k for s in sts] == [0, 0]


def test_gamma21_none():
    assert admissible_structures(SL3, (2, 1)) == []
    for d in enumerate_shifts(SL3, weight_system(SL3.root_system, (2, 1)), (2, 1)):
        assert check_condition_iii(d)


def test_gamma10_structures_and_k():
    sts = admissible_structures(SL3, (1, 0))
    assert [(s.shift, s.k) for s in sts] == [(-2, F(-2, 3)), (-1, F(1, 3))]
    assert len(admissible_structures(SL3, (2, 0))) == 2


def test_multiplicity_one_at_degree_minus_one():
    for w in dominant_weights_by_sum(2, 4):
        ch = weight_system(SL3.root_system, w)
        for st in admissible_structures(SL3, w):
            assert all(ch[x] == 1 for x in st.diagram.P_p(-1))


def test_sl2_family_structures():
    for n in range(2, 7):
        sts = admissible_structures(SL2, (n - 1,))
        assert len(sts) == 1
        st = sts[0]
        assert st.diagram.P_p(-1) == [(n - 1,)]
        assert st.k == F(n - 3, 2)


def test_requires_cr_functional():
    rs = build_root_system(cartan_matrix("A1"))
    with pytest.raises(CRError):
        admissible_structures(grade_algebra(rs, (1,)), (1,))


# --- classification ---------------------------------------------------------------

def admissible_set(bound):
    return {tuple(r["weight"]) for r in classify(SL3, bound) if r["structures"]}


def test_classify_bounds():
    assert admissible_set(0) == set()
    assert admissible_set(1) == {(1, 0), (0, 1)}
    assert admissible_set(4) == {(n, 0) for n in range(1, 5)} | {(0, n) for n in range(1, 5)} | {(1, 1)}


def test_classify_order_and_skip():
    rows = classify(SL3, 2, dim_cap=6)
    assert [r["weight"] for r in rows] == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert [r["skipped"] for r in rows] == [False, False, False, True, False]


def test_real_form_merge():
    counts = {(1, 0): 2, (0, 1): 2, (1, 1): 2, (3, 0): 1, (0, 3): 1}
    out = real_form_admissible(counts, swap_involution, {(1, 1): "real"})
    assert [(e.members, e.type, e.counts) for e in out] == [
        (((1, 0), (0, 1)), "complex", (2, 2)),
        (((1, 1),), "real", (2,)),
        (((3, 0), (0, 3)), "complex", (1, 1)),
    ]
    with pytest.raises(ValueError, match=r"\(1, 1\)"):
        real_form_admissible(counts, swap_involution, {})
    ident = real_form_admissible({(1, 0): 2}, tuple, {(1, 0): "real"})
    assert [(e.members, e.type) for e in ident] == [(((1, 0),), "real")]


def test_regraded_moves_degrees():
    d = diagram_for(SL3, (1, 0), -2)
    e = d.regraded(1)
    assert all(e.degree(w) == d.degree(w) + 1 for w in d.weights)
