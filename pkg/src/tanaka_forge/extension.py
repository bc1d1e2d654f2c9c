"""Real abelian extensions ``s + l`` and the brute-force CR oracle.

Everything here is over Q on realified data: a complex algebra or module is
replaced by its underlying real space (basis ``x, i*x``) together with an
explicit matrix for multiplication by ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import ONE, ZERO, SpanSolver, kernel, matmul, span_basis
from .graded import CRPartition, GradedCRAlgebra, Structure
from .lie import ChevalleyAlgebra, ConsistencyError, LieTable, check_grading, realify, table_from_function
from .modules import ModuleRealization, realize_module


class ExtensionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ModulePart:
    """A real graded module: action matrices indexed like the real s basis."""

    action: tuple  # dense matrices, one per basis element of s
    degrees: tuple
    labels: tuple
    unit: tuple | None = None  # multiplication by i, when the module is complex
    weights: tuple | None = None  # complex weight of each real basis vector
    cr: dict | None = None  # local index -> local image vector of J, on degree -1


@dataclass(frozen=True, eq=False)
class Extension:
    table: LieTable  # s first, then the module components
    s_dim: int
    components: tuple  # (start, stop) per module component
    E: tuple  # element of s acting by the degree
    J_s: tuple | None  # element of s acting as J on s_-1
    units: tuple  # per component: multiplication by i on its range, or None
    weights: tuple | None = None
    cr: tuple | None = None  # dense J on the degree -1 indices (table order)
    unit: tuple | None = None  # multiplication by i on everything, when complex

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def l_indices(self) -> list[int]:
        return list(range(self.s_dim, self.dim))

    def indices(self, p: int) -> list[int]:
        return self.table.degree_indices(p)

    @property
    def negative(self) -> list[int]:
        return [i for i, d in enumerate(self.table.grading) if d < 0]

    @property
    def kind(self) -> int:
        return max(-d for d in self.table.grading)


def abelian_extension(s: LieTable, E, J_s, parts: Sequence[ModulePart], check: bool = True) -> Extension:
    """Semidirect sum of a real graded algebra with real graded modules."""
    n = s.dim
    labels = list(s.labels)
    grading = list(s.grading)
    comps = []
    offset = n
    for p in parts:
        comps.append((offset, offset + len(p.degrees)))
        labels += list(p.labels)
        grading += list(p.degrees)
        offset += len(p.degrees)
    total = offset

    def owner(k):
        for c, (a, b) in enumerate(comps):
            if a <= k < b:
                return c, a
        raise IndexError(k)

    def br(i, j):
        if j < n:
            return s.bracket_basis(i, j)
        if i >= n:
            return {}
        c, a = owner(j)
        m = parts[c].action[i]
        col = j - a
        return {a + r: m[r][col] for r in range(len(m)) if m[r][col]}

    t = table_from_function(labels, br, "Q", grading=tuple(grading))
    weights = None
    if all(p.weights is not None for p in parts):
        weights = tuple([None] * n + [w for p in parts for w in p.weights])
    unit = None
    if s.imaginary_unit is not None and all(p.unit is not None for p in parts):
        u = [[ZERO] * total for _ in range(total)]
        for r in range(n):
            for c in range(n):
                u[r][c] = s.imaginary_unit[r][c]
        for p, (a, b) in zip(parts, comps):
            for r in range(b - a):
                for c in range(b - a):
                    u[a + r][a + c] = p.unit[r][c]
        unit = tuple(tuple(r) for r in u)
    ext = Extension(t, n, tuple(comps), tuple(E), None if J_s is None else tuple(J_s),
                    tuple(p.unit for p in parts), weights, None, unit)
    if check:
        bad = check_grading(t)
        if bad:
            i, j = bad[0]
            raise ExtensionError(f"bracket ({labels[i]}, {labels[j]}) breaks the grading")
        if n and E is not None:
            ad_e = t.ad(list(E) + [ZERO] * (total - n))
            for k in range(total):
                if k >= n:
                    # on the module, E acts as degree minus the shift of its component
                    continue
                col = [ad_e[r][k] for r in range(total)]
                want = [grading[k] if r == k else ZERO for r in range(total)]
                if col != want:
                    raise ExtensionError(f"E does not act by the degree on {labels[k]}")
    if J_s is not None:
        ext = _with_cr(ext, parts)
    return ext


def _with_cr(ext: Extension, parts) -> Extension:
    """J on the degree -1 part: ad(J_s) on s, the supplied map on l."""
    t = ext.table
    m1 = ext.indices(-1)
    pos = {g: k for k, g in enumerate(m1)}
    ad_j = t.ad(list(ext.J_s) + [ZERO] * (ext.dim - ext.s_dim))
    J = [[ZERO] * len(m1) for _ in m1]
    for g in m1:
        if g < ext.s_dim:
            for r in m1:
                J[pos[r]][pos[g]] = ad_j[r][g]
    for c, (a, b) in enumerate(ext.components):
        p = parts[c]
        for g in range(a, b):
            if t.grading[g] != -1:
                continue
            if p.cr is None:
                img = {r - a: ad_j[r][g] for r in range(a, b) if ad_j[r][g]}
            else:
                img = p.cr[g - a]
            for r, x in img.items():
                J[pos[a + r]][pos[g]] = x
    return with_cr_matrix(ext, J)


def with_cr_matrix(ext: Extension, J) -> Extension:
    J = tuple(tuple(r) for r in J)
    return Extension(ext.table.with_(complex_structure=J), ext.s_dim, ext.components, ext.E,
                     ext.J_s, ext.units, ext.weights, J, ext.unit)


# ---------------------------------------------------------------------------
# complex data, realified
# ---------------------------------------------------------------------------

def graded_chevalley(alg: GradedCRAlgebra, ch: ChevalleyAlgebra) -> LieTable:
    """Complex Chevalley table with the root grading."""
    grading = []
    for k in range(ch.table.dim):
        r = ch.root_of(k)
        grading.append(0 if r is None else alg.degree(r))
    return ch.table.with_(grading=tuple(grading))


def _realify_matrix(m: dict, n: int, times_i: bool) -> list[list[Fraction]]:
    """Rational complex matrix (sparse) -> real 2n x 2n, optionally times i."""
    out = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for (r, c), x in m.items():
        if times_i:
            out[2 * r + 1][2 * c] = x
            out[2 * r][2 * c + 1] = -x
        else:
            out[2 * r][2 * c] = x
            out[2 * r + 1][2 * c + 1] = x
    return out


def unit_matrix(n: int) -> tuple:
    """Multiplication by i on a realified space of complex dimension n."""
    u = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        u[2 * k + 1][2 * k] = ONE
        u[2 * k][2 * k + 1] = -ONE
    return tuple(tuple(r) for r in u)


def realified_part(mod: ModuleRealization, degrees: Sequence[int], partition: CRPartition | None = None,
                   name: str = "v") -> ModulePart:
    """Realified module with J = +-i on degree -1 weight vectors."""
    n = mod.dim
    s_dim = len(mod.matrices)
    action = []
    for a in range(s_dim):
        for times_i in (False, True):
            action.append(tuple(tuple(r) for r in _realify_matrix(mod.matrices[a], n, times_i)))
    labels = []
    for k, w in enumerate(mod.weights):
        lab = f"{name}{k}{list(w)}".replace(" ", "")
        labels += [lab, f"i*{lab}"]
    deg = tuple(d for d in degrees for _ in (0, 1))
    weights = tuple(w for w in mod.weights for _ in (0, 1))
    cr = None
    if partition is not None:
        cr = {}
        for k, w in enumerate(mod.weights):
            if degrees[k] != -1:
                continue
            if w in partition.p10:
                sign = ONE
            elif w in partition.p01:
                sign = -ONE
            else:
                raise ExtensionError(f"degree -1 weight {w} is not in the partition")
            cr[2 * k] = {2 * k + 1: sign}
            cr[2 * k + 1] = {2 * k: -sign}
    return ModulePart(tuple(action), deg, tuple(labels), unit_matrix(n), weights, cr)


def complex_extension(alg: GradedCRAlgebra, ch: ChevalleyAlgebra, components: Sequence,
                      with_cr: bool = True) -> Extension:
    """Realified extension of a complex graded CR algebra.

    ``components`` holds ``(module, shift)`` or ``(module, shift, partition)``;
    a missing partition means J on the module is the action of ``J_s``.
    """
    s = realify(graded_chevalley(alg, ch))
    parts = []
    for c, comp in enumerate(components):
        mod, shift = comp[0], comp[1]
        part = comp[2] if len(comp) > 2 else None
        degs = []
        for w in mod.weights:
            d = alg.weight_E(w) + shift
            if d.denominator != 1:
                raise ExtensionError(f"weight {w} gets non-integral degree {d}")
            degs.append(int(d))
        parts.append(realified_part(mod, degs, part, name=f"l{c + 1}_"))
    E = _realify_element(ch.cartan_for_functional(alg.E))
    J_s = None
    if with_cr and alg.J is not None:
        hj = ch.cartan_for_functional(alg.J)
        J_s = [ZERO] * (2 * len(hj))
        for k, x in enumerate(hj):
            J_s[2 * k + 1] = x
    ext = abelian_extension(s, E, J_s, parts)
    return ext


def _realify_element(v) -> list[Fraction]:
    out = []
    for x in v:
        out += [Fraction(x), ZERO]
    return out


def structure_extension(alg: GradedCRAlgebra, ch: ChevalleyAlgebra, st: Structure, dim_cap: int = 200) -> Extension:
    mod = realize_module(ch, st.diagram.highest_weight, dim_cap)
    return complex_extension(alg, ch, [(mod, st.shift, st.partition)])


# ---------------------------------------------------------------------------
# the oracle
# ---------------------------------------------------------------------------

@dataclass
class OracleReport:
    failures: list = field(default_factory=list)  # (axiom, witness)
    J: tuple | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, axiom: str, witness) -> None:
        self.failures.append((axiom, witness))


def _unit(n, k):
    v = [ZERO] * n
    v[k] = ONE
    return v


def _embed(ext: Extension, idx: list[int], local) -> list[Fraction]:
    v = [ZERO] * ext.dim
    for k, x in zip(idx, local):
        v[k] = x
    return v


def module_level_validate(ext: Extension, J=None) -> OracleReport:
    """Check every graded CR axiom on the realified extension.

    ``J`` is a dense matrix on the degree -1 indices; by default the one
    attached to the extension is used.
    """
    rep = OracleReport()
    t = ext.table
    n = ext.dim
    J = J if J is not None else ext.cr
    if J is None:
        rep.fail("J", "no complex structure")
        return rep
    m1 = ext.indices(-1)
    k1 = len(m1)
    rep.J = tuple(tuple(r) for r in J)

    def Jv(local):
        return [sum((J[r][c] * local[c] for c in range(k1) if local[c]), ZERO) for r in range(k1)]

    # (i) J^2 = -1
    if matmul(J, J) != [[-ONE if r == c else ZERO for c in range(k1)] for r in range(k1)]:
        rep.fail("J^2 = -1", None)
    basis = [_unit(k1, c) for c in range(k1)]
    # (ii) [JX, JY] = [X, Y], and (diamond) [JX, Y] + [X, JY] = 0
    for a in range(k1):
        for b in range(a + 1, k1):
            X, Y = basis[a], basis[b]
            JX, JY = _embed(ext, m1, Jv(X)), _embed(ext, m1, Jv(Y))
            Xg, Yg = _embed(ext, m1, X), _embed(ext, m1, Y)
            if t.bracket(JX, JY) != t.bracket(Xg, Yg):
                rep.fail("[JX,JY] = [X,Y]", (t.labels[m1[a]], t.labels[m1[b]]))
            s = [u + v for u, v in zip(t.bracket(JX, Yg), t.bracket(Xg, JY))]
            if any(s):
                rep.fail("integrability", (t.labels[m1[a]], t.labels[m1[b]]))
    # (iii) degree 0 elements commute with J
    for A in ext.indices(0):
        ad = t.ad_matrices[A]
        for c in range(k1):
            col_JX = Jv(basis[c])
            lhs = [sum((ad[m1[r]][m1[x]] * col_JX[x] for x in range(k1) if col_JX[x]), ZERO) for r in range(k1)]
            AX = [ad[m1[r]][m1[c]] for r in range(k1)]
            if lhs != Jv(AX):
                rep.fail("[A,JX] = J[A,X]", (t.labels[A], t.labels[m1[c]]))
                break
    neg = ext.negative
    # fundamental: degree -1 generates the negative part
    for p in range(2, ext.kind + 1):
        gen = []
        for x in m1:
            for y in ext.indices(-(p - 1)):
                gen.append([t.bracket_basis(x, y).get(k, ZERO) for k in ext.indices(-p)])
        if len(span_basis(gen, len(ext.indices(-p)))) != len(ext.indices(-p)):
            rep.fail("fundamental", -p)
    # nondegenerate and transitive: kernels of ad restricted to degree -1
    for name, idx in (("nondegenerate", m1), ("transitive", [i for i in range(n) if t.grading[i] >= 0])):
        rows = []
        for x in m1:
            for r in range(n):
                rows.append([t.bracket_basis(x, y).get(r, ZERO) for y in idx])
        ker = kernel(rows, len(idx))
        if ker:
            v = ker[0]
            rep.fail(name, {t.labels[idx[k]]: c for k, c in enumerate(v) if c})
    # multiplicity one at degree -1
    if ext.weights is not None:
        seen: dict = {}
        for g in m1:
            if g >= ext.s_dim:
                seen[ext.weights[g]] = seen.get(ext.weights[g], 0) + 1
        for w, c in seen.items():
            if c > 2:  # realified: each complex weight vector contributes two
                rep.fail("multiplicity one", w)
    return rep


def solve_cr_structure(ext: Extension) -> list[list[Fraction]] | None:
    """The unique J on degree -1 compatible with ad(J_s) on s_-1, if any.

    On the module it is forced by ``[X, J Y] = -[J X, Y]`` for X in s_-1.
    Returns None when that linear system has no solution or several.
    """
    t = ext.table
    m1 = ext.indices(-1)
    pos = {g: k for k, g in enumerate(m1)}
    s1 = [g for g in m1 if g < ext.s_dim]
    l1 = [g for g in m1 if g >= ext.s_dim]
    nl = len(l1)
    ad_j = t.ad(list(ext.J_s) + [ZERO] * (ext.dim - ext.s_dim))
    lpos = {g: k for k, g in enumerate(l1)}
    # unknown J_l[r][c] at index r * nl + c
    rows, rhs = [], []
    targets = [g for g in range(ext.s_dim, ext.dim) if t.grading[g] == -2]
    for X in s1:
        JX = [ad_j[r][X] for r in range(ext.dim)]
        for c, Y in enumerate(l1):
            JXY = t.bracket(JX, _unit(ext.dim, Y))
            for z in targets:
                row = [ZERO] * (nl * nl)
                for r, Yr in enumerate(l1):
                    v = t.bracket_basis(X, Yr).get(z)
                    if v:
                        row[r * nl + c] = v
                rows.append(row)
                rhs.append(-JXY[z])
    from .exact import solve

    sol = solve(rows, rhs, nl * nl)
    if sol is None or kernel(rows, nl * nl):
        return None
    k1 = len(m1)
    J = [[ZERO] * k1 for _ in range(k1)]
    for g in s1:
        for r in m1:
            J[pos[r]][pos[g]] = ad_j[r][g]
    for r, Yr in enumerate(l1):
        for c, Yc in enumerate(l1):
            J[pos[Yr]][pos[Yc]] = sol[r * nl + c]
    return J


def oracle_admissible(ext: Extension) -> OracleReport:
    """Decide CR admissibility of an extension by brute force."""
    J = solve_cr_structure(ext)
    if J is None:
        rep = OracleReport()
        rep.fail("J on the module", "no unique solution")
        return rep
    return module_level_validate(ext, J)
