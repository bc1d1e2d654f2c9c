"""Structure of a computed prolongation: pi, J_g, radical, nilpotent part."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import ONE, ZERO, SpanSolver, complement_in, identity, intersect, kernel, orthogonal, solve, span_basis
from .lie import (
    ConsistencyError,
    bracket_spaces,
    derived_subalgebra,
    form_rank,
    is_ideal,
    killing_form,
    maximal_semisimple_ideal,
    restricted_form,
    subalgebra_table,
)
from .prolong import Prolongation, _axpy


@dataclass
class StructureReport:
    dims: dict
    total_dim: int
    complex: bool
    pi: list
    pi_components: list
    spectrum: dict  # eigenvalue -> dimension of ad(pi) on b
    b_dim: int
    J_element: list | None
    k_values: list
    radical_dim: int
    nilpotent_dim: int
    semisimple_ideal_dim: int
    classification: str
    shape: dict = field(default_factory=dict)
    embedding: list | None = None  # columns: extension basis -> g coordinates

    @property
    def complex_dims(self) -> dict | None:
        if not self.complex:
            return None
        return {p: d // 2 for p, d in self.dims.items()}


def embed_extension(pr: Prolongation, ext) -> list[list[Fraction]]:
    """g-coordinates of every basis vector of the extension (as columns)."""
    src = pr.m.source
    pos = {g: k for k, g in enumerate(src)}
    t = ext.table
    cols: dict = {}
    for g in src:
        cols[g] = {pos[g]: ONE}
    for p in sorted({d for d in t.grading if d >= 0}):
        for g in ext.indices(p):
            images = []
            for x in src:
                img: dict = {}
                for k, c in t.bracket_basis(g, x).items():
                    if k not in cols:
                        raise ConsistencyError(f"{t.labels[k]} is not yet embedded")
                    _axpy(img, c, cols[k])
                images.append(img)
            res = pr.from_images(p, images)
            if res is None:
                raise ConsistencyError(f"{t.labels[g]} does not act as an element of the prolongation")
            cols[g] = res
    return [pr.vector(cols[g]) for g in range(ext.dim)]


def _images_element(pr: Prolongation, images) -> list[Fraction]:
    res = pr.from_images(0, images)
    if res is None:
        raise ConsistencyError("degree 0 candidate is not in the prolongation")
    return pr.vector(res)


def projection_elements(pr: Prolongation, ext) -> tuple[list, list]:
    """pi (identity on l_-, zero on s_-) and the per-component projections."""
    src = pr.m.source
    M = pr.M
    comps = []
    for a, b in ext.components:
        images = [{k: ONE} if a <= src[k] < b else {} for k in range(M)]
        comps.append(_images_element(pr, images))
    total = [sum((v[i] for v in comps), ZERO) for i in range(pr.dim)]
    if not comps:
        total = [ZERO] * pr.dim
    return total, comps


def ad_spectrum(t, x, sub) -> dict[int, int]:
    """Integer eigenvalues of ad(x) on an invariant subspace, all accounted for."""
    n = t.dim
    if not sub:
        return {}
    solver = SpanSolver(sub, n)
    if solver.rank != len(sub):
        sub = solver.basis()
        solver = SpanSolver(sub, n)
    d = len(sub)
    # matrix of ad(x) on sub
    A = [[ZERO] * d for _ in range(d)]
    for j, v in enumerate(sub):
        c = solver.coords(t.bracket(x, v))
        if c is None:
            raise ConsistencyError("subspace is not ad(pi)-invariant")
        for i in range(d):
            A[i][j] = c[i]
    out = {}
    found = 0
    h = 1
    while found < d and h >= -2 * d - 2:
        rows = [[A[i][j] - (h if i == j else 0) for j in range(d)] for i in range(d)]
        k = d - len(span_basis(rows, d)) if rows else 0
        if k:
            out[h] = k
            found += k
        h -= 1
    if found != d:
        raise ConsistencyError("ad(pi) is not diagonalizable with integer eigenvalues <= 1")
    # diagonalizable: eigenspace dimensions must add up, checked above
    return dict(sorted(out.items(), reverse=True))


def find_J_element(pr: Prolongation) -> list | None:
    """X in g_0 with ad(X) = J on g_-1."""
    J = pr.m.table.complex_structure
    if J is None:
        return None
    m1 = pr.m.indices(-1)
    g0 = pr.levels.get(0, [])
    rows, rhs = [], []
    for a, x in enumerate(m1):
        for b, h in enumerate(m1):
            rows.append([pr.act(g, x).get(h, ZERO) for g in g0])
            rhs.append(J[b][a])
    sol = solve(rows, rhs, len(g0))
    if sol is None:
        return None
    v = [ZERO] * pr.dim
    for g, c in zip(g0, sol):
        v[g] = c
    return v


def _k_values(pr: Prolongation, ext, J_g, emb) -> list[Fraction]:
    """Write J_g - J_s as -sum k_c i pi_c and return the k_c."""
    if ext.J_s is None:
        return []
    js = [sum((emb[r][i] * ext.J_s[i] for i in range(ext.s_dim)), ZERO) for r in range(pr.dim)]
    z = [a - b for a, b in zip(J_g, js)]
    src = pr.m.source
    pos = {g: k for k, g in enumerate(src)}
    zv = {k: c for k, c in enumerate(z) if c}
    # action of z on m
    act = {}
    for x in range(pr.M):
        img: dict = {}
        for g, c in zv.items():
            _axpy(img, c, pr.act(g, x))
        act[x] = img
    for x in range(pr.M):
        if src[x] < ext.s_dim and act[x]:
            raise ConsistencyError("J_g - J_s does not vanish on s_-")
    ks = []
    for c, (a, b) in enumerate(ext.components):
        unit = ext.units[c]
        idx = [x for x in range(pr.M) if a <= src[x] < b]
        lam = None
        for x in idx:
            img = act[x]
            if unit is None:
                if img:
                    raise ConsistencyError("J_g - J_s is nonzero on a module without complex structure")
                continue
            # unit column of x, in m coordinates
            ux = {pos[a + r]: unit[r][src[x] - a] for r in range(b - a) if unit[r][src[x] - a]}
            for key in set(img) | set(ux):
                u = ux.get(key, ZERO)
                v = img.get(key, ZERO)
                if u == 0:
                    if v:
                        raise ConsistencyError("J_g - J_s is not a multiple of i on a component")
                    continue
                if lam is None:
                    lam = v / u
                elif v != lam * u:
                    raise ConsistencyError("J_g - J_s is not a multiple of i on a component")
        ks.append(-(lam or ZERO))
    return ks


def nilpotent_part(t, rad) -> list:
    """Largest nilpotent ideal, from [g, r] and the trace form on the rest."""
    n = t.dim
    if not rad:
        return []
    base = bracket_spaces(t, identity(n), rad)
    T = complement_in(base, rad, n)
    extra = []
    if T:
        # trace form tr(ad x ad y) on T; its kernel is ad-nilpotent modulo [g, r]
        ad = [t.ad(v) for v in T]
        B = [[sum((a[i][j] * b[j][i] for i in range(n) for j in range(n) if a[i][j] and b[j][i]), ZERO) for b in ad] for a in ad]
        ker = kernel(B, len(T))
        extra = [[sum((c * T[k][i] for k, c in enumerate(v)), ZERO) for i in range(n)] for v in ker]
        rest = complement_in(ker, identity(len(T)), len(T))
        if rest:
            Bc = [[sum((u[i] * B[i][j] * w[j] for i in range(len(T)) for j in range(len(T))), ZERO) for w in rest] for u in rest]
            if form_rank(Bc) != len(rest):
                raise ConsistencyError("trace form on the toral complement is degenerate")
    cand = span_basis(base + extra, n)
    if not is_ideal(t, cand):
        raise ConsistencyError("nilpotent-part candidate is not an ideal")
    # ad(cand) acts nilpotently on g
    cur = identity(n)
    for _ in range(n + 1):
        if not cur:
            break
        cur = span_basis([t.bracket(u, v) for u in cand for v in cur], n)
    if cur:
        raise ConsistencyError("nilpotent-part candidate does not act nilpotently")
    return cand


def structure_report(pr: Prolongation, ext=None) -> StructureReport:
    t = pr.table
    n = t.dim
    kf = killing_form(t)
    der = derived_subalgebra(t)
    rad = orthogonal(kf, der, n)
    sig = maximal_semisimple_ideal(t)
    nil = nilpotent_part(t, rad)
    if len(sig) == n:
        cls = "semisimple"
    elif not sig:
        cls = "proper"
    else:
        cls = "mixed"
    unit = pr.imaginary_unit()
    J_g = find_J_element(pr)
    pi, pis, spec, b_dim, ks, emb, shape = [ZERO] * n, [], {}, 0, [], None, {}
    if ext is not None:
        emb_cols = embed_extension(pr, ext)
        emb = emb_cols
        pi, pis = projection_elements(pr, ext)
        s_vecs = span_basis(emb_cols[: ext.s_dim], n)
        b = orthogonal(kf, s_vecs, n)
        if intersect(b, s_vecs, n) or len(b) + len(s_vecs) != n:
            raise ConsistencyError("Killing-orthogonal of s is not a complement")
        spec = ad_spectrum(t, pi, b)
        b_dim = len(b)
        l_vecs = span_basis(emb_cols[ext.s_dim:], n)
        top = orthogonal_eigenspace(t, pi, b, 1)
        if len(top) != len(l_vecs) or len(span_basis(top + l_vecs, n)) != len(l_vecs):
            raise ConsistencyError("the eigenvalue 1 space of ad(pi) differs from l")
        if J_g is not None:
            ks = _k_values(pr, ext, J_g, [[emb_cols[c][r] for c in range(ext.dim)] for r in range(n)])
        levi = n - len(rad)
        shape = {
            "s": len(s_vecs),
            "l": len(l_vecs),
            "a": levi - len(s_vecs),
            "t": len(rad) - len(nil),
            "n_extra": len(nil) - len(l_vecs) if len(span_basis(nil + l_vecs, n)) == len(nil) else None,
        }
    return StructureReport(
        dims=pr.dims(),
        total_dim=n,
        complex=unit is not None,
        pi=pi,
        pi_components=pis,
        spectrum=spec,
        b_dim=b_dim,
        J_element=J_g,
        k_values=ks,
        radical_dim=len(rad),
        nilpotent_dim=len(nil),
        semisimple_ideal_dim=len(sig),
        classification=cls,
        shape=shape,
        embedding=emb,
    )


def orthogonal_eigenspace(t, x, sub, h) -> list:
    """Eigenvectors of ad(x) with eigenvalue h inside span(sub)."""
    n = t.dim
    if not sub:
        return []
    d = len(sub)
    # coefficients c with ad(x)(sum c v) = h sum c v
    cols = [[a - h * b for a, b in zip(t.bracket(x, v), v)] for v in sub]
    rows = [[cols[j][i] for j in range(d)] for i in range(n)]
    ker = kernel(rows, d)
    return [[sum((c * sub[k][i] for k, c in enumerate(v)), ZERO) for i in range(n)] for v in ker]


def decompose_extension(pr: Prolongation) -> tuple[list, list]:
    """g = sigma(g) + its Killing-orthogonal, both verified ideals."""
    t = pr.table
    n = t.dim
    sig = maximal_semisimple_ideal(t)
    if not sig:
        return [], identity(n)
    kf = killing_form(t)
    rest = orthogonal(kf, sig, n)
    if len(rest) + len(sig) != n or intersect(rest, sig, n):
        raise ConsistencyError("Killing-orthogonal of the semisimple ideal is not a complement")
    if not is_ideal(t, rest):
        raise ConsistencyError("complement of the semisimple ideal is not an ideal")
    if rest:
        sub = subalgebra_table(t, rest)
        if maximal_semisimple_ideal(sub):
            raise ConsistencyError("complement contains a semisimple ideal")
    return sig, rest
