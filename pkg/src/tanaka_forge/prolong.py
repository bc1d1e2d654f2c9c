"""Maximal transitive graded CR prolongation of a fundamental graded algebra.

An element of degree ``p >= 0`` is stored through its action on ``m``: for
each basis vector ``x`` of ``m`` the vector ``[A, x]``, which lives in the
already computed part of degree ``p + deg x``.  Degree ``p`` is the kernel of
the derivation identity written on all basis pairs of ``m`` (and, for
``p = 0``, of commutation with J on degree -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import ONE, ZERO, SpanSolver, kernel, matmul, span_basis
from .lie import ConsistencyError, LieTable, jacobi_violations, table_from_function

Vec = dict  # global index -> coefficient


class NilpotentError(ValueError):
    pass


def _axpy(out: dict, a, src: dict) -> None:
    for k, v in src.items():
        w = out.get(k, ZERO) + a * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)


@dataclass(frozen=True, eq=False)
class GradedNilpotent:
    table: LieTable  # negative grading, complex structure on degree -1
    l_mask: tuple  # True on basis vectors coming from the module
    unit: tuple | None = None  # multiplication by i, if the data is complex
    source: tuple | None = None  # indices in the extension it was cut from

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def kind(self) -> int:
        return max((-d for d in self.table.grading), default=0)

    def indices(self, p: int) -> list[int]:
        return self.table.degree_indices(p)


def nilpotent_violations(m: GradedNilpotent) -> list[tuple[str, object]]:
    t = m.table
    out = []
    if any(d >= 0 for d in t.grading):
        out.append(("negative grading", [t.labels[i] for i, d in enumerate(t.grading) if d >= 0][0]))
        return out
    m1 = m.indices(-1)
    for p in range(2, m.kind + 1):
        gen = [[t.bracket_basis(x, y).get(k, ZERO) for k in m.indices(-p)] for x in m1 for y in m.indices(1 - p)]
        if len(span_basis(gen, len(m.indices(-p)))) != len(m.indices(-p)):
            out.append(("fundamental", -p))
    rows = [[t.bracket_basis(x, y).get(r, ZERO) for y in m1] for x in m1 for r in range(t.dim)]
    ker = kernel(rows, len(m1)) if m1 else []
    if ker:
        out.append(("nondegenerate", {t.labels[m1[k]]: c for k, c in enumerate(ker[0]) if c}))
    J = t.complex_structure
    if J is not None:
        k1 = len(m1)
        if matmul(J, J) != [[-ONE if r == c else ZERO for c in range(k1)] for r in range(k1)]:
            out.append(("J^2 = -1", None))
        for a, b in combinations(range(k1), 2):
            ja = {m1[r]: J[r][a] for r in range(k1) if J[r][a]}
            jb = {m1[r]: J[r][b] for r in range(k1) if J[r][b]}
            lhs: dict = {}
            for u, cu in ja.items():
                for v, cv in jb.items():
                    _axpy(lhs, cu * cv, t.bracket_basis(u, v))
            if lhs != {k: c for k, c in t.bracket_basis(m1[a], m1[b]).items() if c}:
                out.append(("[JX,JY] = [X,Y]", (t.labels[m1[a]], t.labels[m1[b]])))
                break
    return out


def assemble_m(ext) -> GradedNilpotent:
    """Negative part of an extension, with its CR structure, validated."""
    idx = ext.negative
    if ext.cr is None:
        raise NilpotentError("extension has no CR structure")
    # degree -1 indices keep their relative order, so J carries over as is
    pos = {g: k for k, g in enumerate(idx)}
    t = ext.table

    def br(i, j):
        return {pos[k]: c for k, c in t.bracket_basis(idx[i], idx[j]).items()}

    sub = table_from_function([t.labels[g] for g in idx], br, "Q",
                              grading=tuple(t.grading[g] for g in idx), complex_structure=ext.cr)
    unit = None
    if ext.unit is not None:
        unit = tuple(tuple(ext.unit[r][c] for c in idx) for r in idx)
        if any(ext.unit[r][c] for r in range(ext.dim) for c in idx if r not in pos):
            unit = None
    m = GradedNilpotent(sub, tuple(g >= ext.s_dim for g in idx), unit, tuple(idx))
    bad = nilpotent_violations(m)
    if bad:
        raise NilpotentError(f"assembled m fails {bad[0][0]}: {bad[0][1]}")
    return m


@dataclass(eq=False)
class Prolongation:
    m: GradedNilpotent
    degrees: list  # degree of each global basis vector
    actions: list  # for global index M + k: list over m basis of Vec
    levels: dict  # p -> global indices (p >= 0)
    cols: dict  # p -> column layout [(x, g)]
    solvers: dict  # p -> SpanSolver over the level basis
    truncated: bool = False
    use_J: bool = True
    _memo: dict = field(default_factory=dict)
    _table: LieTable | None = None
    _unit: object = None

    @property
    def M(self) -> int:
        return self.m.dim

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def top(self) -> int:
        return max(self.levels, default=-1)

    def basis_of(self, p: int) -> list[int]:
        if p < 0:
            return self.m.indices(p)
        return self.levels.get(p, [])

    def dims(self) -> dict[int, int]:
        out: dict = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    # -- brackets --------------------------------------------------------
    def act(self, g: int, x: int) -> Vec:
        """[g, x] for a global basis vector g and a basis vector x of m."""
        if g < self.M:
            return self.m.table.bracket_basis(g, x)
        return self.actions[g - self.M][x]

    def bracket_vec(self, g: int, v: Vec) -> Vec:
        out: dict = {}
        for k, c in v.items():
            _axpy(out, c, self.br(g, k))
        return out

    def br(self, g: int, h: int) -> Vec:
        M = self.M
        if g == h:
            return {}
        if h < M:
            return self.act(g, h)
        if g < M:
            return {k: -c for k, c in self.act(h, g).items()}
        key = (g, h) if g < h else (h, g)
        if key not in self._memo:
            a, b = key
            images = []
            for x in range(M):
                v = self.bracket_vec(a, self.act(b, x))
                _axpy(v, -1, self.bracket_vec(b, self.act(a, x)))
                images.append(v)
            res = self.from_images(self.degrees[a] + self.degrees[b], images)
            if res is None:
                raise ConsistencyError(f"bracket of g{a} and g{b} leaves the prolongation")
            self._memo[key] = res
        res = self._memo[key]
        return res if g < h else {k: -c for k, c in res.items()}

    def flatten(self, p: int, images: Sequence[Vec]) -> list | None:
        cols = self.cols.get(p, [])
        where = {c: k for k, c in enumerate(cols)}
        v = [ZERO] * len(cols)
        for x, img in enumerate(images):
            for g, c in img.items():
                if c:
                    if (x, g) not in where:
                        return None
                    v[where[(x, g)]] = c
        return v

    def from_images(self, p: int, images: Sequence[Vec]) -> Vec | None:
        """Global coordinates of the degree p element with the given action."""
        if all(not img for img in images):
            return {}
        if p not in self.levels:
            return None
        v = self.flatten(p, images)
        if v is None:
            return None
        c = self.solvers[p].coords(v)
        if c is None:
            return None
        return {g: x for g, x in zip(self.levels[p], c) if x}

    # -- outputs ---------------------------------------------------------
    @property
    def table(self) -> LieTable:
        if self._table is None:
            labels = list(self.m.table.labels)
            for p in sorted(self.levels):
                labels += [f"g{p}_{k}" for k in range(len(self.levels[p]))]
            self._table = table_from_function(labels, self.br, "Q", grading=tuple(self.degrees),
                                              complex_structure=self.m.table.complex_structure)
        return self._table

    def vector(self, v: Vec) -> list[Fraction]:
        out = [ZERO] * self.dim
        for k, c in v.items():
            out[k] = c
        return out

    def imaginary_unit(self) -> list[list[Fraction]] | None:
        """Multiplication by i extended to all of g, when it exists."""
        if self._unit is not None:
            return self._unit or None
        if self.m.unit is None:
            self._unit = False
            return None
        M = self.M
        cols: dict = {}
        U = self.m.unit
        for x in range(M):
            cols[x] = {r: U[r][x] for r in range(M) if U[r][x]}

        def apply(v: Vec) -> Vec:
            out: dict = {}
            for k, c in v.items():
                _axpy(out, c, cols[k])
            return out

        for p in sorted(self.levels):
            for g in self.levels[p]:
                images = [apply(self.act(g, x)) for x in range(M)]
                res = self.from_images(p, images)
                if res is None:
                    self._unit = False
                    return None
                cols[g] = res
        n = self.dim
        I = [[ZERO] * n for _ in range(n)]
        for g, col in cols.items():
            for r, c in col.items():
                I[r][g] = c
        t = self.table
        for a in range(n):
            ia = self.vector(cols[a])
            for b in range(n):
                lhs = t.bracket(ia, self.vector({b: ONE}))
                rhs = apply(t.bracket_basis(a, b))
                if {k: c for k, c in enumerate(lhs) if c} != rhs:
                    self._unit = False
                    return None
        self._unit = I
        return I

    def transitivity_violations(self) -> list[int]:
        """Degrees p >= 0 where g_p -> Hom(m_-1, g_{p-1}) is not injective."""
        bad = []
        m1 = self.m.indices(-1)
        for p, idx in self.levels.items():
            vecs = []
            for g in idx:
                v = []
                for x in m1:
                    img = self.act(g, x)
                    v += [img.get(h, ZERO) for h in self.basis_of(p - 1)]
                vecs.append(v)
            if len(span_basis(vecs, len(vecs[0]) if vecs else 0)) != len(idx):
                bad.append(p)
        return bad


def _level(pr: Prolongation, p: int) -> list[list[Fraction]]:
    """Kernel basis for degree p in the column layout of that degree."""
    m = pr.m
    t = m.table
    M = m.dim
    dg = t.grading
    cols = [(x, g) for x in range(M) for g in pr.basis_of(p + dg[x])]
    where = {c: k for k, c in enumerate(cols)}
    pr.cols[p] = cols
    rows = []
    for x, y in combinations(range(M), 2):
        row: dict = {}  # target global index -> {col: coeff}
        for z, c in t.bracket_basis(x, y).items():
            for h in pr.basis_of(p + dg[z]):
                row.setdefault(h, {})
                _axpy(row[h], c, {where[(z, h)]: ONE})
        for g in pr.basis_of(p + dg[x]):
            for h, c in pr.br(g, y).items():
                row.setdefault(h, {})
                _axpy(row[h], -c, {where[(x, g)]: ONE})
        for g in pr.basis_of(p + dg[y]):
            for h, c in pr.br(g, x).items():
                row.setdefault(h, {})
                _axpy(row[h], c, {where[(y, g)]: ONE})
        rows += [r for r in row.values() if r]
    J = t.complex_structure
    if p == 0 and pr.use_J and J is not None:
        m1 = m.indices(-1)
        for a, x in enumerate(m1):
            for b, h in enumerate(m1):
                r: dict = {}
                for c, z in enumerate(m1):
                    if J[c][a]:
                        _axpy(r, J[c][a], {where[(z, h)]: ONE})
                    if J[b][c]:
                        _axpy(r, -J[b][c], {where[(x, z)]: ONE})
                if r:
                    rows.append(r)
    return kernel(rows, len(cols))


def tanaka_prolongation(m: GradedNilpotent, max_degree: int | None = None, use_J: bool = True) -> Prolongation:
    """Degree by degree, until the first zero degree or ``max_degree``."""
    if max_degree is None:
        max_degree = m.kind + 4
    if max_degree < m.kind:
        raise ValueError(f"max_degree {max_degree} is below the kind {m.kind}")
    pr = Prolongation(m, list(m.table.grading), [], {}, {}, {}, use_J=use_J)
    for p in range(0, max_degree + 1):
        ker = _level(pr, p)
        if not ker:
            pr.cols.pop(p, None)
            break
        idx = []
        for v in ker:
            images: list = [dict() for _ in range(m.dim)]
            for (x, g), c in zip(pr.cols[p], v):
                if c:
                    images[x][g] = c
            idx.append(len(pr.degrees))
            pr.degrees.append(p)
            pr.actions.append(images)
        pr.levels[p] = idx
        pr.solvers[p] = SpanSolver(ker, len(pr.cols[p]))
    else:
        pr.truncated = True
    return pr


def check_prolongation(pr: Prolongation) -> None:
    """Jacobi on the full table and transitivity, or a hard error."""
    bad = jacobi_violations(pr.table, limit=1)
    if bad:
        raise ConsistencyError(f"Jacobi fails on {[pr.table.labels[i] for i in bad[0]]}")
    bad = pr.transitivity_violations()
    if bad:
        raise ConsistencyError(f"transitivity fails in degree {bad[0]}")
