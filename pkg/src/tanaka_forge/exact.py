"""Exact scalars and sparse exact linear algebra over the rationals.

Vectors are plain lists of :class:`fractions.Fraction`; sparse rows are
``dict[int, value]``.  Kernels are computed by fraction-free elimination on
integer rows (content removed after every step), coordinates with respect to a
fixed basis by :class:`SpanSolver`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class ExactnessError(ValueError):
    """Raised when a value cannot be represented exactly."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ExactnessError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, GaussianRational):
        if x.imag != 0:
            raise ExactnessError(f"{x} is not real")
        return x.real
    raise ExactnessError(f"refusing inexact scalar {x!r}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise ExactnessError("empty rational")
    try:
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ExactnessError(f"cannot parse rational {text!r}") from exc


def format_rational(x) -> str:
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """``real + imag*i`` with rational parts."""

    real: Fraction = ZERO
    imag: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "real", as_fraction(self.real))
        object.__setattr__(self, "imag", as_fraction(self.imag))

    @staticmethod
    def lift(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(as_fraction(x), ZERO)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def __add__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other):
        return self + (-GaussianRational.lift(other))

    def __rsub__(self, other):
        return GaussianRational.lift(other) - self

    def __mul__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.lift(other)
        n = o.real * o.real + o.imag * o.imag
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(o.real / n, -o.imag / n)

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __eq__(self, other):
        try:
            o = GaussianRational.lift(other)
        except ExactnessError:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __repr__(self):
        if self.imag == 0:
            return format_rational(self.real)
        return f"({format_rational(self.real)}+{format_rational(self.imag)}i)"


I_UNIT = GaussianRational(ZERO, ONE)


# ---------------------------------------------------------------------------
# dense helpers
# ---------------------------------------------------------------------------

def zeros(n: int) -> list[Fraction]:
    return [ZERO] * n


def unit(n: int, k: int) -> list[Fraction]:
    v = [ZERO] * n
    v[k] = ONE
    return v


def identity(n: int) -> list[list[Fraction]]:
    return [unit(n, k) for k in range(n)]


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def scale(c, v):
    return [c * a for a in v]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def is_zero(v) -> bool:
    return not any(v)


def matvec(m, v):
    return [dot(row, v) for row in m]


def matmul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def transpose(m):
    return [list(r) for r in zip(*m)]


def lin_comb(coeffs, vectors, n: int):
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return out


# ---------------------------------------------------------------------------
# fraction-free sparse elimination
# ---------------------------------------------------------------------------

def _integer_row(row) -> dict[int, int]:
    items = {j: as_fraction(a) for j, a in (row.items() if isinstance(row, dict) else enumerate(row)) if a}
    if not items:
        return {}
    den = lcm(*(a.denominator for a in items.values()))
    out = {j: int(a * den) for j, a in items.items()}
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for a in row.values():
        g = gcd(g, a)
        if g == 1:
            break
    if g > 1:
        row = {j: a // g for j, a in row.items()}
    return row


class Echelon:
    """Incremental reduced row echelon form over the integers.

    Each pivot row is primitive with a positive pivot; pivot columns are
    cleared from every other stored row.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        r = dict(row)
        for c in [c for c in r if c in self.rows]:
            a = r.get(c)
            if not a:
                continue
            p = self.rows[c]
            pc = p[c]
            g = gcd(pc, a)
            mr, mp = pc // g, a // g
            new = {j: v * mr for j, v in r.items()}
            for j, v in p.items():
                w = new.get(j, 0) - mp * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            r = _primitive(new) if new else new
        return r

    def add(self, row) -> bool:
        """Insert a row; return True when it increased the rank."""
        r = self.reduce(_integer_row(row))
        if not r:
            return False
        c = min(r)
        if r[c] < 0:
            r = {j: -v for j, v in r.items()}
        for k, p in list(self.rows.items()):
            a = p.get(c)
            if a:
                g = gcd(r[c], a)
                mr, mp = r[c] // g, a // g
                new = {j: v * mr for j, v in p.items()}
                for j, v in r.items():
                    w = new.get(j, 0) - mp * v
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
                new = _primitive(new)
                if new[k] < 0:
                    new = {j: -v for j, v in new.items()}
                self.rows[k] = new
        self.rows[c] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def rank(rows: Iterable) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def kernel(rows: Iterable, ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space ``{x : A x = 0}`` of a rational matrix.

    ``rows`` may be dense sequences or sparse dicts.  Basis vectors are
    ordered by their free column and normalised to 1 there.
    """
    ech = Echelon()
    for r in rows:
        ech.add(r)
    piv = ech.rows
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for c, p in piv.items():
            a = p.get(f)
            if a:
                x[c] = Fraction(-a, p[c])
        basis.append(x)
    return basis


def solve(rows: Sequence, rhs: Sequence, ncols: int) -> list[Fraction] | None:
    """One solution of ``A x = b`` (free variables set to 0) or None."""
    ech = Echelon()
    for r, b in zip(rows, rhs):
        row = dict(r) if isinstance(r, dict) else {j: a for j, a in enumerate(r) if a}
        b = as_fraction(b)
        if b:
            row[ncols] = -b
        ech.add(row)
    piv = ech.rows
    if ncols in piv:
        return None
    x = [ZERO] * ncols
    for c, p in piv.items():
        a = p.get(ncols)
        if a:
            x[c] = Fraction(-a, p[c])
    return x


class SpanSolver:
    """Coordinates of vectors with respect to a fixed list of vectors.

    The basis need not be independent; ``independent`` lists the indices of a
    maximal independent subset chosen greedily, and coordinates are always
    expressed on that subset.
    """

    def __init__(self, vectors: Sequence[Sequence], dim: int | None = None):
        self.dim = dim if dim is not None else (len(vectors[0]) if vectors else 0)
        self.vectors = [list(map(as_fraction, v)) for v in vectors]
        # pivot col -> (row dict, combo dict over basis indices)
        self._piv: dict[int, tuple[dict, dict]] = {}
        self.independent: list[int] = []
        for k, v in enumerate(self.vectors):
            row = {j: a for j, a in enumerate(v) if a}
            combo = {k: ONE}
            row, combo = self._reduce(row, combo)
            if row:
                c = min(row)
                inv = 1 / row[c]
                row = {j: a * inv for j, a in row.items()}
                combo = {j: a * inv for j, a in combo.items()}
                for pc, (prow, pcombo) in self._piv.items():
                    a = prow.get(c)
                    if a:
                        self._axpy(prow, -a, row)
                        self._axpy(pcombo, -a, combo)
                self._piv[c] = (row, combo)
                self.independent.append(k)

    @staticmethod
    def _axpy(target: dict, a, src: dict):
        for j, v in src.items():
            w = target.get(j, ZERO) + a * v
            if w:
                target[j] = w
            else:
                target.pop(j, None)

    def _reduce(self, row: dict, combo: dict):
        for c in [c for c in row if c in self._piv]:
            a = row.get(c)
            if a:
                prow, pcombo = self._piv[c]
                self._axpy(row, -a, prow)
                self._axpy(combo, -a, pcombo)
        return row, combo

    @property
    def rank(self) -> int:
        return len(self._piv)

    def contains(self, v) -> bool:
        row, _ = self._reduce({j: as_fraction(a) for j, a in enumerate(v) if a}, {})
        return not row

    def coords(self, v) -> list[Fraction] | None:
        """Coefficients on ``self.independent`` (in that order), or None."""
        row, combo = self._reduce({j: as_fraction(a) for j, a in enumerate(v) if a}, {})
        if row:
            return None
        # combo holds -coefficients of the reduction
        pos = {k: n for n, k in enumerate(self.independent)}
        out = [ZERO] * len(self.independent)
        for k, a in combo.items():
            out[pos[k]] = -a
        return out

    def basis(self) -> list[list[Fraction]]:
        return [self.vectors[k] for k in self.independent]


def span_basis(vectors: Iterable[Sequence], dim: int) -> list[list[Fraction]]:
    """A basis (subset of the input) of the span of ``vectors``."""
    vs = [list(map(as_fraction, v)) for v in vectors]
    if not vs:
        return []
    return SpanSolver(vs, dim).basis()


def intersect(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    # x in a-coords, y in b-coords with sum x_i a_i - sum y_j b_j = 0
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    rows = transpose(cols)
    ker = kernel(rows, len(cols))
    out = [lin_comb(k[: len(a)], a, dim) for k in ker]
    return span_basis(out, dim)


def complement_in(sub_basis: Sequence[Sequence], whole: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Vectors from ``whole`` extending ``sub_basis`` to a basis of span(whole)."""
    solver_vectors = [list(v) for v in sub_basis]
    n0 = len(SpanSolver(solver_vectors, dim).independent) if solver_vectors else 0
    out = []
    cur = list(solver_vectors)
    r = n0
    for w in whole:
        trial = SpanSolver(cur + [list(w)], dim)
        if trial.rank > r:
            cur.append(list(w))
            out.append(list(w))
            r += 1
    return out


def orthogonal(form: Sequence[Sequence], sub: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Basis of ``{x : form(s, x) = 0 for s in sub}``."""
    if not sub:
        return identity(dim)
    rows = [matvec(transpose(form), s) for s in sub]  # row_s · x = s^T F x
    return kernel(rows, dim)
