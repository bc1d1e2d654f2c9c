from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanaka_forge.exact import GaussianRational as G
from tanaka_forge.lie import (
    LieTableError,
    centralizer,
    chevalley_constants,
    derived_subalgebra,
    from_json,
    is_ideal,
    jacobi_violations,
    killing_form,
    maximal_semisimple_ideal,
    radical,
    real_form_fixed_points,
    realify,
    signature,
    table_from_function,
    to_json,
)
from tanaka_forge.presets import chevalley, su12
from tanaka_forge.roots import build_root_system, cartan_matrix


def matrix_algebra(mats, labels):
    """Structure constants of a matrix Lie algebra spanned by ``mats``."""
    from tanaka_forge.exact import SpanSolver

    n = len(mats[0])
    flat = [[m[r][c] for r in range(n) for c in range(n)] for m in mats]
    solver = SpanSolver(flat, n * n)

    def br(i, j):
        a, b = mats[i], mats[j]
        c = [[sum(a[r][k] * b[k][s] - b[r][k] * a[k][s] for k in range(n)) for s in range(n)] for r in range(n)]
        co = solver.coords([c[r][s] for r in range(n) for s in range(n)])
        return {k: x for k, x in zip(solver.independent, co) if x}

    return table_from_function(labels, br)


def E(n, i, j):
    return [[F(int(r == i and c == j)) for c in range(n)] for r in range(n)]


def test_sl2_killing_form():
    t = chevalley("A1").table
    kf = killing_form(t)
    h = t.labels.index("h1")
    assert kf[h][h] == 8  # tr(ad h)^2 = 4 + 0 + 4
    e, f = 0, 2
    assert kf[e][f] == 4


def test_sl3_killing_form_matches_trace_formula():
    t = chevalley("A2").table
    kf = killing_form(t)
    for i in range(2):
        h = t.labels.index(f"h{i + 1}")
        assert kf[h][h] == 12  # 2 * 3 * tr(h_i^2)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2", "A3"])
def test_chevalley_tables_satisfy_jacobi(label):
    ch = chevalley(label)
    assert jacobi_violations(ch.table) == []
    assert len(maximal_semisimple_ideal(ch.table)) == ch.table.dim
    assert radical(ch.table) == []


def test_chevalley_dims():
    assert {lab: chevalley(lab).table.dim for lab in ("A1", "A2", "B2", "G2", "A3")} == {
        "A1": 3, "A2": 8, "B2": 10, "G2": 14, "A3": 15,
    }


def test_matrix_oracle_sl3_signature_matches():
    # independent realization through elementary matrices
    mats = [E(3, i, j) for i in range(3) for j in range(3) if i != j]
    mats += [[[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(E(3, i, i), E(3, i + 1, i + 1))] for i in range(2)]
    t = matrix_algebra(mats, [f"x{k}" for k in range(8)])
    assert jacobi_violations(t) == []
    assert signature(killing_form(t)) == signature(killing_form(chevalley("A2").table)) == (5, 3, 0)


def test_su2_is_compact():
    t = chevalley("A1").table
    # sigma(X) = -X^*: e -> -f, h -> -h, f -> -e
    sigma = [[F(0)] * 3 for _ in range(3)]
    sigma[2][0] = sigma[1][1] = sigma[0][2] = F(-1)
    sub, basis = real_form_fixed_points(t, sigma)
    assert sub.dim == 3
    assert signature(killing_form(sub)) == (0, 3, 0)


def test_split_real_form_sl2():
    t = chevalley("A1").table
    sigma = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    sub, _ = real_form_fixed_points(t, sigma)
    assert signature(killing_form(sub)) == (2, 1, 0)


def test_su12_real_form():
    t, basis, E_, J = su12()
    assert t.dim == 8
    assert signature(killing_form(t)) == (4, 4, 0)
    assert jacobi_violations(t) == []


def test_bad_conjugation_rejected():
    t = chevalley("A1").table
    sigma = [[F(0)] * 3 for _ in range(3)]
    sigma[0][0] = sigma[1][1] = sigma[2][2] = F(2)
    with pytest.raises(LieTableError):
        real_form_fixed_points(t, sigma)


def test_realify_doubles_and_keeps_jacobi():
    t = realify(chevalley("A2").table)
    assert t.dim == 16
    assert jacobi_violations(t) == []
    # realified complex simple algebra: Killing signature (n, n)
    assert signature(killing_form(t)) == (8, 8, 0)


def semidirect_sl2_c2():
    # e, h, f acting on the standard module v1, v2
    labels = ("e", "h", "f", "v1", "v2")
    base = {
        (0, 1): {0: F(-2)}, (0, 2): {1: F(1)}, (1, 2): {2: F(-2)},
        (0, 4): {3: F(1)}, (1, 3): {3: F(1)}, (1, 4): {4: F(-1)}, (2, 3): {4: F(1)},
    }
    return table_from_function(labels, lambda i, j: base.get((i, j), {}))


def test_semidirect_radical_and_levi():
    t = semidirect_sl2_c2()
    assert jacobi_violations(t) == []
    rad = radical(t)
    assert len(rad) == 2
    assert maximal_semisimple_ideal(t) == []
    assert is_ideal(t, rad)
    assert len(derived_subalgebra(t)) == 5


def test_direct_sum_with_center():
    base = {(0, 1): {0: F(-2)}, (0, 2): {1: F(1)}, (1, 2): {2: F(-2)}}
    t = table_from_function(("e", "h", "f", "z"), lambda i, j: base.get((i, j), {}))
    assert len(radical(t)) == 1
    assert len(maximal_semisimple_ideal(t)) == 3
    assert len(centralizer(t, radical(t))) == 4


def test_json_round_trip_is_byte_stable():
    for lab in ("A2", "G2"):
        t = chevalley(lab).table
        text = to_json(t)
        back = from_json(text)
        assert to_json(back) == text
        assert back.brackets == t.brackets
    t = su12()[0]
    assert to_json(from_json(to_json(t))) == to_json(t)


def test_json_rejects_self_bracket():
    with pytest.raises(LieTableError):
        from_json('{"basis": ["a"], "field": "Q", "brackets": [[0, 0, [[0, "1"]]]]}')


@given(st.sampled_from(["A1", "A2", "B2"]), st.integers(0, 10 ** 6))
def test_bracket_is_bilinear_and_antisymmetric(label, seed):
    import random

    t = chevalley(label).table
    rnd = random.Random(seed)
    u = [F(rnd.randint(-3, 3)) for _ in range(t.dim)]
    v = [F(rnd.randint(-3, 3)) for _ in range(t.dim)]
    zero = G() if t.field == "Qi" else F(0)
    assert [a + b for a, b in zip(t.bracket(u, v), t.bracket(v, u))] == [zero] * t.dim
    assert t.bracket(u, u) == [zero] * t.dim


def test_root_system_of_chevalley_matches():
    ch = chevalley_constants(build_root_system(cartan_matrix("B2")))
    assert len(ch.index) == 8
