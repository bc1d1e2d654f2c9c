from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanaka_forge.exact import (
    ExactnessError,
    GaussianRational as G,
    SpanSolver,
    as_fraction,
    complement_in,
    format_rational,
    identity,
    intersect,
    kernel,
    matmul,
    orthogonal,
    parse_rational,
    rank,
    solve,
    span_basis,
)


def test_parse_and_format_round_trip():
    for text in ("0", "-3", "7/4", "-2/6"):
        q = parse_rational(text)
        assert parse_rational(format_rational(q)) == q
    assert format_rational(F(-2, 6)) == "-1/3"
    assert format_rational(F(4, 2)) == "2"


def test_floats_are_refused():
    with pytest.raises(ExactnessError):
        as_fraction(0.5)
    with pytest.raises(ExactnessError):
        parse_rational("1.5")
    with pytest.raises(ExactnessError):
        parse_rational("1/0")


def test_gaussian_arithmetic():
    i = G(0, 1)
    assert i * i == G(-1)
    assert (G(1, 2) / G(1, 2)) == G(1)
    assert G(3, 4).conjugate() == G(3, -4)
    assert G(2) == 2
    with pytest.raises(ExactnessError):
        as_fraction(i)


def test_kernel_of_known_matrix():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, -1]]
    ker = kernel(rows, 3)
    assert len(ker) == 1
    v = ker[0]
    assert all(sum(F(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    assert rank(rows) == 2


def test_sparse_rows_accepted():
    ker = kernel([{0: 1, 2: -1}], 3)
    assert len(ker) == 2


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 1], [1, -1]], [3, 1], 2) == [2, 1]
    assert solve([[1, 1], [2, 2]], [1, 3], 2) is None


def test_span_solver_coordinates():
    vecs = [[1, 0, 1], [0, 1, 1], [1, 1, 2]]
    s = SpanSolver(vecs, 3)
    assert s.rank == 2
    c = s.coords([2, 3, 5])
    assert c is not None
    assert [sum(x * v[k] for x, v in zip(c, (vecs[j] for j in s.independent))) for k in range(3)] == [2, 3, 5]
    assert s.coords([0, 0, 1]) is None


def test_intersect_complement_orthogonal():
    a = [[1, 0, 0], [0, 1, 0]]
    b = [[0, 1, 0], [0, 0, 1]]
    assert len(intersect(a, b, 3)) == 1
    assert len(complement_in(a, identity(3), 3)) == 1
    form = identity(3)
    orth = orthogonal(form, a, 3)
    assert span_basis(orth, 3) == span_basis([[0, 0, 1]], 3)


small = st.integers(min_value=-4, max_value=4)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=5)))
def test_rank_nullity(rows):
    n = len(rows[0])
    ker = kernel(rows, n)
    assert rank(rows) + len(ker) == n
    for v in ker:
        assert all(sum(F(a) * b for a, b in zip(r, v)) == 0 for r in rows)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_solve_recovers_solution(m):
    x = [F(1), F(-2), F(3)]
    b = [sum(F(a) * y for a, y in zip(r, x)) for r in m]
    sol = solve(m, b, 3)
    assert sol is not None
    assert [sum(F(a) * y for a, y in zip(r, sol)) for r in m] == b


def test_matmul_identity():
    m = [[F(1), F(2)], [F(3), F(4)]]
    assert matmul(identity(2), m) == m
