"""Lie algebras as exact structure-constant tables.

A :class:`LieTable` stores ``[x_i, x_j]`` for ``i < j`` as sparse coefficient
dicts.  Elements are coordinate lists.  Everything here is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Sequence

from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    SpanSolver,
    as_fraction,
    format_rational,
    identity,
    intersect,
    kernel,
    lin_comb,
    matmul,
    orthogonal,
    parse_rational,
    span_basis,
    transpose,
    unit,
)
from .roots import RootSystem


class LieTableError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An internal verification failed; the input lies outside the method's validity."""


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True, eq=False)
class LieTable:
    labels: tuple
    brackets: dict  # (i, j) with i < j -> {k: coeff}
    field: str = "Q"
    grading: tuple | None = None
    complex_structure: tuple | None = None  # CR structure, square matrix on degree -1 indices
    imaginary_unit: tuple | None = None  # multiplication by i on the whole space (realified tables)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket_basis(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    @cached_property
    def _full(self) -> list[list[dict]]:
        n = self.dim
        return [[self.bracket_basis(i, j) for j in range(n)] for i in range(n)]

    def bracket(self, u: Sequence, v: Sequence) -> list:
        n = self.dim
        zero = GaussianRational() if self.field == "Qi" else ZERO
        out = [zero] * n
        full = self._full
        for i, a in enumerate(u):
            if not a:
                continue
            row = full[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] = out[k] + ab * c
        return out

    @cached_property
    def ad_matrices(self) -> list[list[list]]:
        """``ad(x_i)`` as dense matrices (column k = [x_i, x_k])."""
        n = self.dim
        mats = []
        for i in range(n):
            m = [[ZERO] * n for _ in range(n)]
            for k in range(n):
                for l, c in self.bracket_basis(i, k).items():
                    m[l][k] = c
            mats.append(m)
        return mats

    def ad(self, u: Sequence) -> list[list]:
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(u):
            if a:
                ai = self.ad_matrices[i]
                for r in range(n):
                    row, src = m[r], ai[r]
                    for c in range(n):
                        if src[c]:
                            row[c] += a * src[c]
        return m

    def degree_indices(self, p: int) -> list[int]:
        if self.grading is None:
            raise LieTableError("table is not graded")
        return [i for i, d in enumerate(self.grading) if d == p]

    def with_(self, **kw) -> "LieTable":
        data = dict(
            labels=self.labels,
            brackets=self.brackets,
            field=self.field,
            grading=self.grading,
            complex_structure=self.complex_structure,
            imaginary_unit=self.imaginary_unit,
        )
        data.update(kw)
        return LieTable(**data)


def table_from_function(labels, bracket: Callable[[int, int], dict], field: str = "Q", **kw) -> LieTable:
    n = len(labels)
    br = {}
    for i, j in combinations(range(n), 2):
        d = _clean(bracket(i, j))
        if d:
            br[(i, j)] = d
    return LieTable(tuple(labels), br, field, **kw)


def jacobi_violations(t: LieTable, limit: int | None = None) -> list[tuple[int, int, int]]:
    """Basis triples on which the Jacobi identity fails."""
    n = t.dim
    bad = []
    ad = t._full

    def br(i, v: dict) -> dict:
        out: dict = {}
        for k, c in v.items():
            for l, d in ad[i][k].items():
                out[l] = out.get(l, 0) + c * d
        return out

    for i, j, k in combinations(range(n), 3):
        tot: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l, v in br(a, ad[b][c]).items():
                tot[l] = tot.get(l, 0) + v
        if any(tot.values()):
            bad.append((i, j, k))
            if limit and len(bad) >= limit:
                break
    return bad


def check_grading(t: LieTable) -> list[tuple[int, int]]:
    """Pairs violating [x_p, y_q] in degree p + q."""
    if t.grading is None:
        return []
    g = t.grading
    return [
        (i, j)
        for (i, j), d in t.brackets.items()
        if any(g[k] != g[i] + g[j] for k in d)
    ]


# ---------------------------------------------------------------------------
# Chevalley basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChevalleyAlgebra:
    """A split semisimple Lie algebra in a Chevalley basis.

    Basis order: positive root vectors, Cartan generators ``h_i``, negative
    root vectors (same root order as the positive ones).
    """

    root_system: RootSystem
    table: LieTable
    index: dict  # root -> basis index

    def h_index(self, i: int) -> int:
        return len(self.root_system.positive_roots) + i

    def cartan_element(self, coeffs) -> list:
        """Element ``sum coeffs[i] h_i``."""
        v = [ZERO] * self.table.dim
        for i, c in enumerate(coeffs):
            v[self.h_index(i)] = as_fraction(c)
        return v

    def cartan_for_functional(self, values) -> list:
        """Cartan element H with alpha_i(H) = values[i]."""
        rs = self.root_system
        n = rs.rank
        # alpha_i(sum c_k h_k) = sum_k c_k a_{k i}
        from .exact import solve

        c = solve([[rs.cartan[k][i] for k in range(n)] for i in range(n)], list(values), n)
        if c is None:
            raise LieTableError("singular Cartan matrix")
        return self.cartan_element(c)

    def root_of(self, k: int):
        for r, i in self.index.items():
            if i == k:
                return r
        return None


def chevalley_constants(rs: RootSystem) -> ChevalleyAlgebra:
    """Chevalley basis with signs fixed by extraspecial pairs (positive sign)."""
    pos = rs.positive_roots
    order = {r: k for k, r in enumerate(pos)}
    roots = rs.root_set
    n = rs.rank

    def neg(r):
        return tuple(-x for x in r)

    def plus(r, s):
        return tuple(a + b for a, b in zip(r, s))

    def is_pos(r):
        return r in order

    extraspecial = {}
    for xi in pos:
        if sum(xi) == 1:
            continue
        for a in pos:
            b = tuple(x - y for x, y in zip(xi, a))
            if b in order:
                p = 0
                cur = b
                while True:
                    cur = tuple(x - y for x, y in zip(cur, a))
                    if cur in roots:
                        p += 1
                    else:
                        break
                extraspecial[xi] = (a, b, p + 1)
                break

    norm = {r: rs.inner(r, r) for r in rs.roots}
    memo: dict = {}

    def N(r, s) -> Fraction:
        key = (r, s)
        if key in memo:
            return memo[key]
        t = plus(r, s)
        if t not in roots:
            val = Fraction(0)
        elif is_pos(r) and is_pos(s):
            if order[r] > order[s]:
                val = -N(s, r)
            else:
                a, b, nab = extraspecial[t]
                if r == a:
                    val = Fraction(nab)
                else:
                    ma, mb = neg(a), neg(b)
                    term = Fraction(0)
                    sb = plus(s, mb)
                    if sb in roots:
                        term += N(s, mb) * N(r, ma) / norm[sb]
                    rb = plus(r, mb)
                    if rb in roots:
                        term += N(mb, r) * N(s, ma) / norm[rb]
                    val = -norm[t] * term / nab
        elif not is_pos(r) and not is_pos(s):
            val = -N(neg(r), neg(s))
        else:
            u = neg(t)
            if is_pos(s) == is_pos(u):
                val = norm[u] / norm[r] * N(s, u)
            else:
                val = norm[u] / norm[s] * N(u, r)
        memo[key] = val
        return val

    npos = len(pos)
    labels = (
        [f"e{_rl(r)}" for r in pos]
        + [f"h{i + 1}" for i in range(n)]
        + [f"f{_rl(r)}" for r in pos]
    )
    index = {}
    for k, r in enumerate(pos):
        index[r] = k
        index[neg(r)] = npos + n + k
    root_at = {i: r for r, i in index.items()}

    def br(i, j):
        ri, rj = root_at.get(i), root_at.get(j)
        if ri is None and rj is None:
            return {}
        if ri is None or rj is None:
            hi, r = (i, rj) if ri is None else (j, ri)
            c = rs.root_to_weight(r)[hi - npos]
            sign = 1 if ri is None else -1
            return {index[r]: Fraction(sign * c)} if c else {}
        s = plus(ri, rj)
        if all(x == 0 for x in s):
            # [e_r, e_{-r}] = h_r for r > 0
            if is_pos(ri):
                cor = rs.coroot(ri)
                return {npos + k: Fraction(c) for k, c in enumerate(cor) if c}
            cor = rs.coroot(rj)
            return {npos + k: Fraction(-c) for k, c in enumerate(cor) if c}
        c = N(ri, rj)
        if not c:
            return {}
        return {index[s]: c}

    table = table_from_function(labels, br, "Qi")
    for v in table.brackets.values():
        for c in v.values():
            if c.denominator != 1:
                raise ConsistencyError("non-integral Chevalley constant")
    return ChevalleyAlgebra(rs, table, index)


def _rl(r) -> str:
    return "(" + ",".join(str(x) for x in r) + ")"


# ---------------------------------------------------------------------------
# structural linear algebra
# ---------------------------------------------------------------------------

def _require_rational(t: LieTable):
    if t.field != "Q" and any(isinstance(c, GaussianRational) for d in t.brackets.values() for c in d.values()):
        raise LieTableError("structural operations need rational structure constants; realify first")


def killing_form(t: LieTable) -> list[list[Fraction]]:
    _require_rational(t)
    n = t.dim
    ad = t.ad_matrices
    # sparse column lists
    sparse = []
    for m in ad:
        sparse.append({(r, c): v for r in range(n) for c in range(n) if (v := m[r][c])})
    kf = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = ZERO
            bj = sparse[j]
            for (r, c), v in sparse[i].items():
                w = bj.get((c, r))
                if w:
                    s += v * w
            kf[i][j] = kf[j][i] = s
    return kf


def restricted_form(form, basis) -> list[list[Fraction]]:
    fb = [[sum((form[r][c] * v[c] for c in range(len(v)) if v[c]), ZERO) for r in range(len(form))] for v in basis]
    return [[sum((u[r] * fv[r] for r in range(len(u)) if u[r]), ZERO) for fv in fb] for u in basis]


def form_rank(m) -> int:
    from .exact import rank

    return rank(m)


def derived_subalgebra(t: LieTable, sub: Sequence | None = None) -> list[list[Fraction]]:
    """Basis of [sub, sub] (whole algebra when sub is None)."""
    n = t.dim
    if sub is None:
        vecs = []
        for (i, j), d in t.brackets.items():
            v = [ZERO] * n
            for k, c in d.items():
                v[k] = c
            vecs.append(v)
        return span_basis(vecs, n)
    sub = list(sub)
    return span_basis([t.bracket(u, v) for u, v in combinations(sub, 2)], n)


def bracket_spaces(t: LieTable, a, b) -> list[list[Fraction]]:
    return span_basis([t.bracket(u, v) for u in a for v in b], t.dim)


def radical(t: LieTable) -> list[list[Fraction]]:
    """Solvable radical: Killing-orthogonal of the derived subalgebra."""
    kf = killing_form(t)
    return orthogonal(kf, derived_subalgebra(t), t.dim)


def centralizer(t: LieTable, sub) -> list[list[Fraction]]:
    n = t.dim
    rows = []
    for s in sub:
        ads = t.ad(s)  # [s, x] = ad(s) x ; want = 0
        rows.extend(ads)
    if not rows:
        return identity(n)
    return kernel(rows, n)


def is_ideal(t: LieTable, sub) -> bool:
    if not sub:
        return True
    solver = SpanSolver([list(v) for v in sub], t.dim)
    n = t.dim
    for v in sub:
        for i in range(n):
            if not solver.contains(t.bracket(unit(n, i), v)):
                return False
    return True


def is_subalgebra(t: LieTable, sub) -> bool:
    if not sub:
        return True
    solver = SpanSolver([list(v) for v in sub], t.dim)
    return all(solver.contains(t.bracket(u, v)) for u, v in combinations(sub, 2))


def lower_central_series_vanishes(t: LieTable, sub) -> bool:
    """True when the subalgebra spanned by ``sub`` is nilpotent."""
    cur = span_basis(sub, t.dim)
    while cur:
        nxt = span_basis([t.bracket(u, v) for u in sub for v in cur], t.dim)
        if len(nxt) >= len(cur):
            return False
        cur = nxt
    return True


def maximal_semisimple_ideal(t: LieTable) -> list[list[Fraction]]:
    """Largest semisimple ideal: perfect part of the centralizer of the radical."""
    n = t.dim
    rad = radical(t)
    cur = centralizer(t, rad) if rad else identity(n)
    while True:
        nxt = derived_subalgebra(t, cur)
        if len(nxt) == len(cur):
            break
        cur = nxt
    if cur:
        if not is_ideal(t, cur):
            raise ConsistencyError("semisimple-ideal candidate is not an ideal")
        kf = killing_form(t)
        if form_rank(restricted_form(kf, cur)) != len(cur):
            raise ConsistencyError("semisimple-ideal candidate has degenerate Killing form")
    return cur


def quotient_dim(a, b, n) -> int:
    return len(span_basis(list(a) + list(b), n)) - len(span_basis(list(b), n))


# ---------------------------------------------------------------------------
# real and complex
# ---------------------------------------------------------------------------

def realify(t: LieTable) -> LieTable:
    """Complex table -> real table on basis (x_0, i x_0, x_1, i x_1, ...).

    The result carries multiplication by i as ``imaginary_unit``.
    """
    if t.field != "Qi":
        raise LieTableError("realify expects a complex (Qi) table")
    n = t.dim
    labels = []
    for lab in t.labels:
        labels += [lab, f"i*{lab}"]

    def parts(c):
        g = GaussianRational.lift(c)
        return g.real, g.imag

    br = {}

    def put(a, b, d):
        if a == b:
            return
        if a > b:
            a, b = b, a
            d = {k: -v for k, v in d.items()}
        d = _clean(d)
        if d:
            br[(a, b)] = d

    for j in range(n):
        for k in range(n):
            if j >= k:
                continue
            d = t.bracket_basis(j, k)
            if not d:
                continue
            re_part: dict = {}
            times_i: dict = {}
            for l, c in d.items():
                a, b = parts(c)
                # [x_j, x_k] = sum (a + b i) x_l
                re_part[2 * l] = re_part.get(2 * l, 0) + a
                re_part[2 * l + 1] = re_part.get(2 * l + 1, 0) + b
                # i * (a + b i) x_l = -b x_l + a (i x_l)
                times_i[2 * l] = times_i.get(2 * l, 0) - b
                times_i[2 * l + 1] = times_i.get(2 * l + 1, 0) + a
            put(2 * j, 2 * k, re_part)
            put(2 * j + 1, 2 * k, times_i)
            put(2 * j, 2 * k + 1, times_i)
            put(2 * j + 1, 2 * k + 1, {l: -v for l, v in re_part.items()})
    m = 2 * n
    iu = [[ZERO] * m for _ in range(m)]
    for k in range(n):
        iu[2 * k + 1][2 * k] = ONE
        iu[2 * k][2 * k + 1] = -ONE
    grading = None if t.grading is None else tuple(g for g in t.grading for _ in (0, 1))
    return LieTable(tuple(labels), br, "Q", grading, None, tuple(tuple(r) for r in iu))


def realify_vector(v: Sequence) -> list[Fraction]:
    out = []
    for c in v:
        g = GaussianRational.lift(c)
        out += [g.real, g.imag]
    return out


def conjugation_violations(t: LieTable, sigma: Sequence[Sequence]) -> list:
    """Check a conjugate-linear map given on the basis (columns of ``sigma``)."""
    n = t.dim
    cols = [[GaussianRational.lift(sigma[r][k]) for r in range(n)] for k in range(n)]

    def apply(v):
        out = [GaussianRational()] * n
        for k, c in enumerate(v):
            c = GaussianRational.lift(c)
            if c:
                cc = c.conjugate()
                for r in range(n):
                    if cols[k][r]:
                        out[r] = out[r] + cc * cols[k][r]
        return out

    bad = []
    for k in range(n):
        if apply(cols[k]) != [GaussianRational.lift(int(r == k)) for r in range(n)]:
            bad.append(("involution", k, k))
    for j, k in combinations(range(n), 2):
        lhs = apply([GaussianRational.lift(c) for c in _dense(t.bracket_basis(j, k), n)])
        rhs = t.bracket(cols[j], cols[k])
        if [GaussianRational.lift(x) for x in lhs] != [GaussianRational.lift(x) for x in rhs]:
            bad.append(("automorphism", j, k))
    return bad


def _dense(d: dict, n: int) -> list:
    v = [ZERO] * n
    for k, c in d.items():
        v[k] = c
    return v


def subalgebra_table(t: LieTable, basis, labels=None, grading=None) -> LieTable:
    """Structure constants of the subalgebra spanned by ``basis``."""
    solver = SpanSolver([list(v) for v in basis], t.dim)
    if solver.rank != len(basis):
        raise LieTableError("subalgebra basis is not independent")
    m = len(basis)

    def br(i, j):
        c = solver.coords(t.bracket(basis[i], basis[j]))
        if c is None:
            raise LieTableError(f"span is not closed under brackets ({i}, {j})")
        return {k: v for k, v in enumerate(c) if v}

    labels = labels or [f"y{k}" for k in range(m)]
    return table_from_function(labels, br, "Q", grading=grading)


def real_form_fixed_points(t: LieTable, sigma: Sequence[Sequence]) -> tuple[LieTable, list[list[Fraction]]]:
    """Real form fixed by a conjugate-linear involutive automorphism.

    ``sigma[r][k]`` is the coefficient of ``x_r`` in ``sigma(x_k)``.  Returns
    the real table and the basis of fixed points in realified coordinates.
    """
    if t.field != "Qi":
        raise LieTableError("real forms need a complex (Qi) table")
    bad = conjugation_violations(t, sigma)
    if bad:
        kind, j, k = bad[0]
        raise LieTableError(f"sigma fails {kind} axiom on basis pair ({t.labels[j]}, {t.labels[k]})")
    n = t.dim
    rt = realify(t)
    spanning = []
    for k in range(n):
        x = [GaussianRational()] * n
        x[k] = GaussianRational(1)
        sx = [GaussianRational.lift(sigma[r][k]) for r in range(n)]
        plus = [a + b for a, b in zip(x, sx)]
        minus = [GaussianRational(0, 1) * (a - b) for a, b in zip(x, sx)]
        spanning += [realify_vector(plus), realify_vector(minus)]
    basis = span_basis(spanning, 2 * n)
    if len(basis) != n:
        raise ConsistencyError(f"fixed-point space has real dimension {len(basis)}, expected {n}")
    grading = None
    if rt.grading is not None:
        grading = []
        for v in basis:
            degs = {rt.grading[i] for i, c in enumerate(v) if c}
            if len(degs) != 1:
                grading = None
                break
            grading.append(degs.pop())
        grading = tuple(grading) if grading is not None else None
    sub = subalgebra_table(rt, basis, grading=grading)
    return sub, basis


def signature(form) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a rational symmetric form (LDL^T)."""
    m = [list(map(as_fraction, r)) for r in form]
    n = len(m)
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in idx for j in idx if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j, which has nonzero norm 2 m_ij
            for r in range(n):
                m[r][i] += m[r][j]
            for c in range(n):
                m[i][c] += m[j][c]
            continue
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in idx if i != piv]
        for i in rest:
            f = m[i][piv] / d
            if f:
                for j in rest:
                    m[i][j] -= f * m[piv][j]
        idx = rest
    return pos, neg, n - pos - neg


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _fmt(c):
    if isinstance(c, GaussianRational):
        if c.imag == 0:
            return format_rational(c.real)
        return [format_rational(c.real), format_rational(c.imag)]
    return format_rational(c)


def _parse(c, field):
    if isinstance(c, list):
        return GaussianRational(parse_rational(c[0]), parse_rational(c[1]))
    v = parse_rational(c) if isinstance(c, str) else as_fraction(c)
    return v


def to_json(t: LieTable) -> str:
    obj = {"basis": list(t.labels), "field": t.field}
    triples = []
    for (i, j) in sorted(t.brackets):
        d = t.brackets[(i, j)]
        triples.append([i, j, [[k, _fmt(d[k])] for k in sorted(d)]])
    obj["brackets"] = triples
    if t.grading is not None:
        obj["grading"] = list(t.grading)
    if t.complex_structure is not None:
        obj["J"] = [[format_rational(x) for x in row] for row in t.complex_structure]
    if t.imaginary_unit is not None:
        obj["I"] = [[format_rational(x) for x in row] for row in t.imaginary_unit]
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def from_json(text: str) -> LieTable:
    obj = json.loads(text)
    field = obj.get("field", "Q")
    if field not in ("Q", "Qi"):
        raise LieTableError(f"unknown field {field!r}")
    labels = tuple(obj["basis"])
    br = {}
    for i, j, coeffs in obj["brackets"]:
        d = {int(k): _parse(c, field) for k, c in coeffs}
        if i == j:
            raise LieTableError("bracket of a basis vector with itself must be omitted")
        if i > j:
            i, j = j, i
            d = {k: -v for k, v in d.items()}
        br[(i, j)] = _clean(d)
    grading = tuple(obj["grading"]) if "grading" in obj else None
    J = tuple(tuple(parse_rational(x) for x in row) for row in obj["J"]) if "J" in obj else None
    iu = tuple(tuple(parse_rational(x) for x in row) for row in obj["I"]) if "I" in obj else None
    return LieTable(labels, br, field, grading, J, iu)
