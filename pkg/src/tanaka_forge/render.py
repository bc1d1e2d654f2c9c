"""Weight diagrams as SVG and plain text.

Weights are projected with the LDL^T factorization of the symmetrized Cartan
form on fundamental weights.  Each axis gets a single integer scale factor, so
the projection is one fixed rational linear map: points of equal degree stay
exactly collinear and every coordinate written out is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm

from .exact import ZERO, format_rational
from .graded import (
    CRPartition,
    GradedCRAlgebra,
    build_partition_iv,
    check_condition_ii,
    check_condition_iii,
    enumerate_shifts,
)
from .roots import Character

SCALE = 60
SIZE = 480


@dataclass
class Candidate:
    shift: Fraction
    admissible: bool
    k: Fraction | None
    partition: CRPartition | None
    violations: list


@dataclass
class DiagramSpec:
    rank: int
    weights: list  # (weight, multiplicity, E value)
    points: dict  # weight -> (x, y), integers
    lines: list  # (E value, [weights on it])
    marks: dict  # E value -> shifts making it degree -1
    overlays: list  # (lam, combination, offending), deduplicated
    candidates: list = field(default_factory=list)
    warning: str | None = None


def candidates(alg: GradedCRAlgebra, character) -> list[Candidate]:
    out = []
    for d in enumerate_shifts(alg, Character(character)):
        k = check_condition_ii(d)
        viol = check_condition_iii(d)
        part = build_partition_iv(d)
        ok = k is not None and not viol and isinstance(part, CRPartition)
        ok = ok and all(d.character[w] == 1 for w in d.P_p(-1))
        out.append(Candidate(d.shift, ok, k, part if isinstance(part, CRPartition) else None, viol))
    return out


def _ldl(G):
    n = len(G)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [ZERO] * n
    for j in range(n):
        D[j] = G[j][j] - sum((L[j][k] ** 2 * D[k] for k in range(j)), ZERO)
        for i in range(j + 1, n):
            L[i][j] = (G[i][j] - sum((L[i][k] * L[j][k] * D[k] for k in range(j)), ZERO)) / D[j]
    return L, D


def projection(rs):
    """Integer-valued linear map on integral weights, close to an isometry times SCALE."""
    n = rs.rank
    if n > 2:
        return None
    fund = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    G = [[rs.weight_inner(a, b) for b in fund] for a in fund]
    L, D = _ldl(G)
    rows = []
    for k in range(n):
        col = [L[j][k] for j in range(n)]  # y_k = sqrt(D_k) * sum_j L[j][k] c_j
        den = lcm(*[c.denominator for c in col])
        target = D[k] * SCALE * SCALE  # (scale factor)^2
        s = isqrt(target.numerator * target.denominator) // target.denominator
        s = max(den, (s // den) * den)
        rows.append([c * s for c in col])
    if n == 1:
        rows.append([ZERO])
    return rows


def _apply(P, w):
    x = sum((P[0][j] * w[j] for j in range(len(w))), ZERO)
    y = sum((P[1][j] * w[j] for j in range(len(w))), ZERO)
    return int(x), -int(y)


def diagram_spec(alg: GradedCRAlgebra, character) -> DiagramSpec:
    rs = alg.root_system
    ch = Character({w: m for w, m in dict(character).items() if m})
    ws = sorted(ch, key=lambda w: (-alg.weight_E(w), tuple(-x for x in w)))
    weights = [(w, ch[w], alg.weight_E(w)) for w in ws]
    cands = candidates(alg, ch) if ch and alg.J is not None else []
    levels: dict = {}
    for w, _, e in weights:
        levels.setdefault(e, []).append(w)
    lines = sorted(levels.items(), key=lambda t: -t[0])
    marks: dict = {}
    for c in cands:
        if c.admissible:
            marks.setdefault(Fraction(-1) - c.shift, []).append(c.shift)
    overlays = sorted({(v.weight, v.combination, v.offending) for c in cands for v in c.violations})
    P = projection(rs)
    warning = None
    points = {}
    if P is None:
        warning = f"rank {rs.rank} > 2: no planar projection, table output only"
    else:
        points = {w: _apply(P, w) for w in ws}
    return DiagramSpec(rs.rank, weights, points, lines, marks, overlays, cands, warning)


def _direction(alg: GradedCRAlgebra):
    """Integral weight spanning the kernel of E (rank 2), or None."""
    rs = alg.root_system
    if rs.rank != 2:
        return None
    e = [alg.weight_E(w) for w in ((1, 0), (0, 1))]
    if e[0] == 0 and e[1] == 0:
        return (1, 0)
    d = (-e[1], e[0])
    m = lcm(d[0].denominator, d[1].denominator)
    return tuple(int(x * m) for x in d)


def _label(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def render_svg(alg: GradedCRAlgebra, spec: DiagramSpec, title: str = "") -> str:
    out = []
    if spec.warning is not None or not spec.points:
        lo_x = lo_y = -SIZE // 2
        span = SIZE
    else:
        xs = [p[0] for p in spec.points.values()]
        ys = [p[1] for p in spec.points.values()]
        span = max(max(xs) - min(xs), max(ys) - min(ys)) + 3 * SCALE
        lo_x = (min(xs) + max(xs)) // 2 - span // 2
        lo_y = (min(ys) + max(ys)) // 2 - span // 2
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
               f'viewBox="{lo_x} {lo_y} {span} {span}">')
    if title:
        out.append(f"<title>{title}</title>")
    out.append('<g class="lines" stroke="#555" stroke-width="1" stroke-dasharray="2 4" fill="none">')
    d = _direction(alg)
    P = projection(alg.root_system) if spec.points else None
    for e, ws in spec.lines:
        if not spec.points:
            break
        if d is None:
            x, y = spec.points[ws[0]]
            a, b = (x, y - SCALE // 2), (x, y + SCALE // 2)
        else:
            # parameter of each weight along d, measured from the first one
            base = ws[0]
            dd = (d[0] * d[0] + d[1] * d[1]) or 1
            ts = [Fraction((w[0] - base[0]) * d[0] + (w[1] - base[1]) * d[1], dd) for w in ws]
            t0, t1 = min(ts) - 1, max(ts) + 1
            ends = []
            for t in (t0, t1):
                ends.append(_apply(P, (base[0] + t * d[0], base[1] + t * d[1])))
            a, b = ends
        mark = ' class="marked"' if e in spec.marks else ""
        out.append(f'<line{mark} x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
    out.append("</g>")
    out.append('<g class="marks" fill="#000">')
    for e, ws in spec.lines:
        if e not in spec.marks or not spec.points:
            continue
        # small triangle to the right of the rightmost weight on the line
        x, y = max((spec.points[w] for w in ws), key=lambda p: (p[0], -p[1]))
        x += SCALE // 2
        out.append(f'<polygon class="mark" points="{x},{y} {x + 10},{y - 6} {x + 10},{y + 6}"/>')
    out.append("</g>")
    out.append('<g class="forbidden" stroke="#c00" stroke-width="2" fill="none">')
    for lam, comb, off in spec.overlays:
        if lam in spec.points and off in spec.points:
            a, b = spec.points[lam], spec.points[off]
            out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"><title>{comb}</title></line>')
    out.append("</g>")
    out.append('<g class="weights" font-family="monospace" font-size="12">')
    for w, mult, _ in spec.weights:
        if w not in spec.points:
            continue
        x, y = spec.points[w]
        out.append(f'<circle class="weight" cx="{x}" cy="{y}" r="5" fill="#000"><title>{_label(w)}</title></circle>')
        if mult > 1:
            out.append(f'<text class="mult" x="{x + 8}" y="{y - 8}">x{mult}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(alg: GradedCRAlgebra, spec: DiagramSpec, title: str = "") -> str:
    out = []
    if title:
        out.append(title)
    if spec.warning:
        out.append(f"warning: {spec.warning}")
    mult = {w: m for w, m, _ in spec.weights}
    out.append("E-value  mark  weights")
    for e, ws in spec.lines:
        mk = "  *  " if e in spec.marks else "     "
        cells = [_label(w) + (f"x{mult[w]}" if mult[w] > 1 else "") for w in ws]
        out.append(f"{format_rational(e):>7}  {mk}  " + " ".join(cells))
    for c in spec.candidates:
        verdict = "admissible" if c.admissible else "rejected"
        line = f"shift {format_rational(c.shift)}: {verdict}"
        if c.admissible:
            line += f", k = {format_rational(c.k)}"
        out.append(line)
        for v in c.violations:
            out.append(f"  forbidden: {_label(v.weight)} {v.combination} -> {_label(v.offending)}")
    return "\n".join(out) + "\n"
