"""Concrete graded CR algebras and extensions used by the demos and tests."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import ONE, ZERO, GaussianRational, SpanSolver, transpose
from .extension import (
    Extension,
    ExtensionError,
    ModulePart,
    abelian_extension,
    complex_extension,
    graded_chevalley,
    realified_part,
)
from .graded import GradedCRAlgebra, Structure, admissible_structures, attach_cr, grade_algebra
from .lie import ChevalleyAlgebra, LieTable, chevalley_constants, real_form_fixed_points, realify
from .modules import realize_module
from .roots import build_root_system, cartan_matrix

F = Fraction


@lru_cache(maxsize=None)
def chevalley(label: str) -> ChevalleyAlgebra:
    return chevalley_constants(build_root_system(cartan_matrix(label)))


def sl2_algebra() -> tuple[GradedCRAlgebra, ChevalleyAlgebra]:
    """sl(2,C) with E = diag(1/2, -1/2) and J = diag(i/2, -i/2)."""
    ch = chevalley("A1")
    alg = attach_cr(grade_algebra(ch.root_system, (1,), "sl2"), (1,))
    return alg, ch


def sl3_algebra(E=(1, 1)) -> tuple[GradedCRAlgebra, ChevalleyAlgebra]:
    """sl(3,C) with E = diag(1,0,-1) and J = diag(i/3,-2i/3,i/3).

    ``E=(-1, -1)`` gives the opposite gradation diag(-1,0,1).
    """
    ch = chevalley("A2")
    alg = attach_cr(grade_algebra(ch.root_system, E, "sl3"), (1, -1))
    return alg, ch


def structure_with_shift(alg: GradedCRAlgebra, weight, shift) -> Structure:
    for st in admissible_structures(alg, weight):
        if st.shift == shift:
            return st
    raise ExtensionError(f"no CR structure on weight {tuple(weight)} with shift {shift}")


def extension_of(alg: GradedCRAlgebra, ch: ChevalleyAlgebra, items) -> Extension:
    """Extension by several irreducibles, each given as (weight, shift)."""
    comps = []
    for w, shift in items:
        st = structure_with_shift(alg, w, F(shift))
        comps.append((realize_module(ch, w), st.shift, st.partition))
    return complex_extension(alg, ch, comps)


def sl2_family(n: int) -> Extension:
    """sl(2,C) plus its irreducible module of dimension n (top weight in degree -1)."""
    alg, ch = sl2_algebra()
    sts = admissible_structures(alg, (n - 1,))
    if len(sts) != 1:
        raise ExtensionError(f"expected one structure for dimension {n}, found {len(sts)}")
    st = sts[0]
    return complex_extension(alg, ch, [(realize_module(ch, (n - 1,)), st.shift, st.partition)])


def sl3_reducible() -> Extension:
    """sl(3,C) with C^3 in degrees -3,-2,-1 and its dual in degrees 0,-1,-2."""
    alg, ch = sl3_algebra((-1, -1))
    return extension_of(alg, ch, [((1, 0), -2), ((0, 1), -1)])


# ---------------------------------------------------------------------------
# sl(2,C) acting on anti-Hermitian 2x2 matrices
# ---------------------------------------------------------------------------

G = GaussianRational
_I = G(0, 1)


def _mm(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), G()) for j in range(n)] for i in range(n)]


def _star(a):
    return [[a[j][i].conjugate() for j in range(len(a))] for i in range(len(a))]


def _mat(rows):
    return [[G.lift(x) for x in r] for r in rows]


# real basis of the anti-Hermitian 2x2 matrices
_HERM_BASIS = [
    _mat([[_I, 0], [0, 0]]),
    _mat([[0, 1], [-1, 0]]),
    _mat([[0, _I], [_I, 0]]),
    _mat([[0, 0], [0, _I]]),
]


def _herm_coords(a) -> list[Fraction]:
    return [a[0][0].imag, a[0][1].real, a[0][1].imag, a[1][1].imag]


def _sl2_real_matrices() -> list:
    """Matrices of the realified Chevalley basis e, ie, h, ih, f, if."""
    e = _mat([[0, 1], [0, 0]])
    h = _mat([[1, 0], [0, -1]])
    f = _mat([[0, 0], [1, 0]])
    out = []
    for m in (e, h, f):
        out += [m, [[_I * x for x in r] for r in m]]
    return out


def anti_hermitian_part(name: str = "l") -> ModulePart:
    """X . A = X A + A X^*, graded by [E, A] = E A + A E - A."""
    action = []
    for X in _sl2_real_matrices():
        cols = [_herm_coords([[u + v for u, v in zip(r1, r2)] for r1, r2 in zip(_mm(X, B), _mm(B, _star(X)))])
                for B in _HERM_BASIS]
        action.append(tuple(tuple(r) for r in transpose(cols)))
    labels = tuple(f"{name}.{s}" for s in ("i*e11", "e12-e21", "i*(e12+e21)", "i*e22"))
    return ModulePart(tuple(action), (0, -1, -1, -2), labels)


def sl2_anti_hermitian(copies: int = 1) -> Extension:
    """sl(2,C) extended by ``copies`` copies of the anti-Hermitian matrices."""
    alg, ch = sl2_algebra()
    s = realify(graded_chevalley(alg, ch))
    E = [ZERO] * 6
    E[2] = F(1, 2)
    J_s = [ZERO] * 6
    J_s[3] = F(1, 2)
    names = ["l"] if copies == 1 else [f"l{k + 1}" for k in range(copies)]
    return abelian_extension(s, E, J_s, [anti_hermitian_part(nm) for nm in names])


# ---------------------------------------------------------------------------
# su(1,2)
# ---------------------------------------------------------------------------

def su12_conjugation(ch: ChevalleyAlgebra) -> list[list]:
    """sigma(X) = -K X^* K with K antidiagonal, on the Chevalley basis of sl(3,C).

    It fixes diag(1,0,-1) and diag(i/3,-2i/3,i/3).
    """
    std = realize_module(ch, (1, 0))
    # weights L1, L2, L3 in this order
    order = sorted(range(3), key=lambda k: [(1, 0), (-1, 1), (0, -1)].index(std.weights[k]))
    n = ch.table.dim
    mats = []
    for k in range(n):
        m = [[ZERO] * 3 for _ in range(3)]
        for (r, c), x in std.matrices[k].items():
            m[order.index(r)][order.index(c)] = x
        mats.append(m)
    flat = [[m[r][c] for r in range(3) for c in range(3)] for m in mats]
    solver = SpanSolver(flat, 9)
    sigma = [[ZERO] * n for _ in range(n)]
    for k, m in enumerate(mats):
        # -K m^T K with K the antidiagonal permutation (m is rational, so m^* = m^T)
        img = [[-m[2 - c][2 - r] for c in range(3)] for r in range(3)]
        co = solver.coords([img[r][c] for r in range(3) for c in range(3)])
        for j, x in zip(solver.independent, co):
            sigma[j][k] = x
    return sigma


def su12() -> tuple[LieTable, list, list, list]:
    """Real graded su(1,2): (table, basis in realified sl3 coordinates, E, J_s)."""
    alg, ch = sl3_algebra()
    tc = graded_chevalley(alg, ch)
    sub, basis = real_form_fixed_points(tc, su12_conjugation(ch))
    solver = SpanSolver(basis, 2 * tc.dim)
    hE = ch.cartan_for_functional(alg.E)
    hJ = ch.cartan_for_functional(alg.J)
    E_r = [x for c in hE for x in (F(c), ZERO)]
    J_r = [x for c in hJ for x in (ZERO, F(c))]
    E = solver.coords(E_r)
    J = solver.coords(J_r)
    if E is None or J is None:
        raise ExtensionError("E or J_s is not in the real form")
    return sub, basis, E, J


def adjoint_part(s: LieTable, shift: int = 0, name: str = "ad") -> ModulePart:
    """Adjoint module with degrees shifted: l_d is a copy of s_{d + shift}."""
    action = tuple(tuple(tuple(r) for r in m) for m in s.ad_matrices)
    degrees = tuple(d - shift for d in s.grading)
    labels = tuple(f"{name}.{lab}" for lab in s.labels)
    return ModulePart(action, degrees, labels, s.imaginary_unit)


def su12_adjoint(shift: int = 0) -> Extension:
    """su(1,2) extended by its adjoint module (shift 0 or 2)."""
    s, _, E, J = su12()
    return abelian_extension(s, E, J, [adjoint_part(s, shift)])


def sl3_adjoint(shift: int = 0) -> Extension:
    """sl(3,C) extended by its adjoint module (shift 0 or 2)."""
    alg, ch = sl3_algebra()
    return extension_of(alg, ch, [((1, 1), -shift)])


def restrict_part(part: ModulePart, basis) -> ModulePart:
    """A realified module restricted to a real subalgebra given by ``basis``."""
    n = len(part.degrees)
    action = []
    for b in basis:
        m = [[ZERO] * n for _ in range(n)]
        for k, c in enumerate(b):
            if c:
                for r in range(n):
                    row = part.action[k][r]
                    for col in range(n):
                        if row[col]:
                            m[r][col] += c * row[col]
        action.append(tuple(tuple(r) for r in m))
    return ModulePart(tuple(action), part.degrees, part.labels, part.unit, part.weights, part.cr)


def su12_extension(weight, shift) -> Extension:
    """su(1,2) extended by the realified module of a CR admissible sl3 weight."""
    alg, ch = sl3_algebra()
    st = structure_with_shift(alg, weight, F(shift))
    part = realified_part(realize_module(ch, weight), [st.diagram.degree(w) for w in realize_module(ch, weight).weights],
                          st.partition, name="l_")
    s, basis, E, J = su12()
    return abelian_extension(s, E, J, [restrict_part(part, basis)])
