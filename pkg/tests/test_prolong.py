from fractions import Fraction as F

import pytest

from tanaka_forge.extension import complex_extension
from tanaka_forge.graded import attach_cr, grade_algebra
from tanaka_forge.lie import ConsistencyError, from_json, jacobi_violations, killing_form, signature, to_json
from tanaka_forge.presets import chevalley, sl2_anti_hermitian, sl2_family, sl3_algebra, sl3_reducible
from tanaka_forge.prolong import (
    GradedNilpotent,
    NilpotentError,
    assemble_m,
    check_prolongation,
    nilpotent_violations,
    tanaka_prolongation,
)


def prolong(ext, **kw):
    pr = tanaka_prolongation(assemble_m(ext), **kw)
    check_prolongation(pr)
    return pr


def semisimple_only(label, E, J):
    ch = chevalley(label)
    alg = attach_cr(grade_algebra(ch.root_system, E, label), J)
    return complex_extension(alg, ch, [])


def test_su22_profile():
    pr = prolong(sl2_anti_hermitian())
    assert pr.dims() == {-2: 1, -1: 4, 0: 5, 1: 4, 2: 1}
    assert pr.dim == 15
    assert not pr.truncated
    # su(2,2): maximal compact subalgebra of dimension 7
    assert signature(killing_form(pr.table)) == (8, 7, 0)


def test_semisimple_graded_cr_algebra_is_its_own_prolongation():
    pr = prolong(semisimple_only("A2", (1, 1), (1, -1)))
    assert pr.dim == 16
    assert pr.dims() == {-2: 2, -1: 4, 0: 4, 1: 4, 2: 2}


def test_b2_oracle_for_three_dim_module():
    """B2 with its principal grading prolongs to itself; sl2 + l^3 has the same m profile."""
    b2 = prolong(semisimple_only("B2", (1, 1), (1, -1)))
    assert b2.dim == 20
    n3 = prolong(sl2_family(3))
    assert n3.dims() == b2.dims() == {-3: 2, -2: 2, -1: 4, 0: 4, 1: 4, 2: 2, 3: 2}
    assert signature(killing_form(n3.table)) == signature(killing_form(b2.table)) == (10, 10, 0)


def test_sl2_plus_two_dim_module_is_sl3():
    pr = prolong(sl2_family(2))
    assert pr.dim == 16
    assert signature(killing_form(pr.table)) == (8, 8, 0)


def test_without_J_the_engel_part_does_not_stop():
    pr = tanaka_prolongation(assemble_m(semisimple_only("B2", (1, 1), (1, -1))), max_degree=5, use_J=False)
    assert pr.truncated
    assert pr.dims()[0] == 6


def test_truncation_flag_and_bounds():
    m = assemble_m(sl2_anti_hermitian())
    assert tanaka_prolongation(m, max_degree=2).truncated  # degree 2 is nonzero, 3 never computed
    assert not tanaka_prolongation(m, max_degree=3).truncated
    with pytest.raises(ValueError):
        tanaka_prolongation(m, max_degree=1)


def test_full_table_is_a_lie_algebra():
    pr = prolong(sl3_reducible())
    assert jacobi_violations(pr.table) == []
    assert pr.transitivity_violations() == []
    assert pr.dims() == {-3: 2, -2: 6, -1: 8, 0: 12, 1: 8, 2: 6, 3: 2}


def test_imaginary_unit_extends():
    pr = prolong(sl2_family(4))
    I = pr.imaginary_unit()
    assert I is not None
    n = pr.dim
    sq = [[sum(I[r][k] * I[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    assert sq == [[F(-1) if r == c else F(0) for c in range(n)] for r in range(n)]
    assert prolong(sl2_anti_hermitian()).imaginary_unit() is None


def test_nilpotent_json_round_trip_prolongs_identically():
    m = assemble_m(sl2_anti_hermitian())
    t = from_json(to_json(m.table))
    m2 = GradedNilpotent(t, tuple(False for _ in range(t.dim)))
    assert tanaka_prolongation(m2).dims() == tanaka_prolongation(m).dims()


def test_nilpotent_violations():
    m = assemble_m(sl2_family(3))
    assert nilpotent_violations(m) == []
    # drop the bracket into degree -2: no longer fundamental
    t = m.table
    broken = t.with_(brackets={k: v for k, v in t.brackets.items() if not any(t.grading[x] == -2 for x in v)})
    bad = nilpotent_violations(GradedNilpotent(broken, m.l_mask, m.unit, m.source))
    assert bad and bad[0][0] == "fundamental"


def test_assemble_requires_cr():
    ext = sl3_reducible()
    from tanaka_forge.extension import Extension

    bare = Extension(ext.table, ext.s_dim, ext.components, ext.E, ext.J_s, ext.units, ext.weights, None, ext.unit)
    with pytest.raises(NilpotentError):
        assemble_m(bare)


def test_check_prolongation_catches_broken_tables():
    pr = tanaka_prolongation(assemble_m(sl2_family(2)))
    pr.actions[0] = [dict() for _ in range(pr.M)]  # first degree-0 element acts as zero
    pr._memo.clear()
    pr._table = None
    with pytest.raises(ConsistencyError):
        check_prolongation(pr)
