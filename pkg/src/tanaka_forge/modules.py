"""Explicit highest-weight modules over a Chevalley basis.

The irreducible module is built weight space by weight space: a vector of
weight below the top is zero exactly when every raising operator kills it, so
candidate vectors ``f_i w`` are compared through their images under all
``e_j`` and an independent subset is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import ZERO, SpanSolver
from .lie import ChevalleyAlgebra, ConsistencyError, LieTable
from .roots import Character, WeightError, weight_system

DEFAULT_DIM_CAP = 200

Sparse = dict  # (row, col) -> Fraction


def sp_mul(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out: Sparse = {}
    for (r, k), v in a.items():
        for c, w in by_row.get(k, ()):
            key = (r, c)
            s = out.get(key, 0) + v * w
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def sp_lin(*terms) -> Sparse:
    """Linear combination ``sum c * m`` of sparse matrices given as (c, m)."""
    out: Sparse = {}
    for c, m in terms:
        for k, v in m.items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def sp_commutator(a: Sparse, b: Sparse) -> Sparse:
    return sp_lin((1, sp_mul(a, b)), (-1, sp_mul(b, a)))


def sp_apply(m: Sparse, v: Sequence) -> list:
    out = [ZERO] * len(v)
    for (r, c), x in m.items():
        if v[c]:
            out[r] += x * v[c]
    return out


def sp_dense(m: Sparse, n: int) -> list[list[Fraction]]:
    d = [[ZERO] * n for _ in range(n)]
    for (r, c), v in m.items():
        d[r][c] = v
    return d


@dataclass(frozen=True, eq=False)
class ModuleRealization:
    algebra: ChevalleyAlgebra
    highest_weight: tuple
    weights: tuple  # weight of each basis vector
    matrices: tuple  # sparse action matrix per basis element of the algebra

    @property
    def dim(self) -> int:
        return len(self.weights)

    def character(self) -> Character:
        ch = Character()
        for w in self.weights:
            ch[w] += 1
        return ch

    def action(self, k: int) -> Sparse:
        return self.matrices[k]


def extend_to_algebra(ch: ChevalleyAlgebra, e: list[Sparse], f: list[Sparse], h: list[Sparse]) -> list[Sparse]:
    """Images of every Chevalley basis vector from those of the generators."""
    rs = ch.root_system
    t = ch.table
    out: list = [None] * t.dim
    for i in range(rs.rank):
        out[ch.index[rs.simple_root(i)]] = e[i]
        out[ch.index[tuple(-x for x in rs.simple_root(i))]] = f[i]
        out[ch.h_index(i)] = h[i]
    for sign, gens in ((1, e), (-1, f)):
        for xi in rs.positive_roots:
            if sum(xi) == 1:
                continue
            for i in range(rs.rank):
                gamma = tuple(x - int(k == i) for k, x in enumerate(xi))
                if gamma in ch.index and all(x >= 0 for x in gamma):
                    si = ch.index[tuple(sign * int(k == i) for k in range(rs.rank))]
                    gi = ch.index[tuple(sign * x for x in gamma)]
                    xs = ch.index[tuple(sign * x for x in xi)]
                    c = t.bracket_basis(si, gi).get(xs)
                    if c:
                        out[xs] = sp_lin((Fraction(1) / c, sp_commutator(out[si], out[gi])))
                        break
            else:
                raise ConsistencyError(f"no simple decomposition for root {xi}")
    return out


def representation_violations(t: LieTable, mats: Sequence[Sparse], limit: int | None = None) -> list[tuple[int, int]]:
    """Basis pairs (a, b) where rho([x_a, x_b]) != [rho(x_a), rho(x_b)]."""
    bad = []
    n = t.dim
    for a in range(n):
        for b in range(a + 1, n):
            lhs = sp_lin(*((c, mats[k]) for k, c in t.bracket_basis(a, b).items()))
            rhs = sp_commutator(mats[a], mats[b])
            if sp_lin((1, lhs), (-1, rhs)):
                bad.append((a, b))
                if limit and len(bad) >= limit:
                    return bad
    return bad


def realize_module(ch: ChevalleyAlgebra, highest, dim_cap: int = DEFAULT_DIM_CAP, verify: bool = True) -> ModuleRealization:
    """Irreducible module of the given dominant highest weight, explicitly."""
    rs = ch.root_system
    lam = tuple(int(x) for x in highest)
    if not rs.is_dominant(lam):
        raise WeightError(f"highest weight {lam} is not dominant")
    need = rs.weyl_dimension(lam)
    if need > dim_cap:
        raise WeightError(f"module of highest weight {lam} has dimension {need}, above the cap {dim_cap}")
    char = weight_system(rs, lam)
    simple_w = rs.simple_weights()
    n = rs.rank

    def level(mu):
        return sum(rs.weight_to_simple(tuple(a - b for a, b in zip(lam, mu))))

    order = sorted(char, key=lambda mu: (level(mu), tuple(-x for x in mu)))
    space: dict = {}  # weight -> list of global indices
    weights: list = []
    # column storage: Ecol[j][w] = {row: coeff}
    Ecol: list[dict] = [dict() for _ in range(n)]
    Fcol: list[dict] = [dict() for _ in range(n)]

    def shift(mu, i, s):
        return tuple(a + s * b for a, b in zip(mu, simple_w[i]))

    for mu in order:
        if mu == lam:
            space[mu] = [0]
            weights.append(mu)
            continue
        targets = []
        owner = {}
        for j in range(n):
            for g in space.get(shift(mu, j, 1), []):
                owner[g] = j
                targets.append(g)
        tpos = {g: k for k, g in enumerate(targets)}
        cands = []
        vecs = []
        for i in range(n):
            up = shift(mu, i, 1)
            for w in space.get(up, []):
                vec = [ZERO] * len(targets)
                for j in range(n):
                    # e_j f_i w = f_i e_j w + [i == j] <up, h_i> w
                    for r, x in Ecol[j].get(w, {}).items():
                        for r2, y in Fcol[i].get(r, {}).items():
                            vec[tpos[r2]] += x * y
                    if i == j and up[i]:
                        vec[tpos[w]] += up[i]
                cands.append((i, w))
                vecs.append(vec)
        solver = SpanSolver(vecs, len(targets))
        new = []
        for k in solver.independent:
            g = len(weights)
            weights.append(mu)
            new.append(g)
            for t_idx, x in enumerate(vecs[k]):
                if x:
                    g2 = targets[t_idx]
                    Ecol[owner[g2]].setdefault(g, {})[g2] = x
        space[mu] = new
        if len(new) != char[mu]:
            raise ConsistencyError(f"weight {mu}: built {len(new)} vectors, Freudenthal gives {char[mu]}")
        for (i, w), vec in zip(cands, vecs):
            c = solver.coords(vec)
            for g, x in zip(new, c):
                if x:
                    Fcol[i].setdefault(w, {})[g] = x
    E = [{(r, c): x for c, col in Ecol[j].items() for r, x in col.items()} for j in range(n)]
    F = [{(r, c): x for c, col in Fcol[i].items() for r, x in col.items()} for i in range(n)]
    H = [{(k, k): Fraction(weights[k][i]) for k in range(len(weights)) if weights[k][i]} for i in range(n)]
    mats = extend_to_algebra(ch, E, F, H)
    mod = ModuleRealization(ch, lam, tuple(weights), tuple(mats))
    if len(weights) != need:
        raise ConsistencyError(f"realized dimension {len(weights)} differs from Weyl dimension {need}")
    if verify:
        bad = representation_violations(ch.table, mats, limit=1)
        if bad:
            a, b = bad[0]
            raise ConsistencyError(f"module fails bracket relation on ({ch.table.labels[a]}, {ch.table.labels[b]})")
    return mod
