"""Root systems from Cartan matrices, weight systems and characters.

Conventions: ``cartan[i][j] = alpha_j(h_i)`` (so column ``j`` is the simple
root ``alpha_j`` written in fundamental-weight coordinates).  Roots are kept
in simple-root coordinates as integer tuples, weights in fundamental-weight
coordinates as integer tuples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable

from .exact import ZERO, as_fraction, solve

Weight = tuple  # fundamental-weight coordinates
Root = tuple  # simple-root coordinates


class CartanError(ValueError):
    pass


class WeightError(ValueError):
    pass


def _symmetrizer(a: list[list[int]]) -> list[Fraction]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                # d_i a_ij = d_j a_ji
                dj = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise CartanError("Cartan matrix is not symmetrizable")
    # normalise each component so the shortest simple root has d = 1
    comp = _components(a)
    for c in comp:
        m = min(d[i] for i in c)
        for i in c:
            d[i] = d[i] / m
    return d  # type: ignore[return-value]


def _components(a) -> list[list[int]]:
    n = len(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and a[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class RootSystem:
    cartan: tuple
    positive_roots: tuple  # simple-root coordinates, ordered by height then lex
    sym: tuple  # d_i = (alpha_i, alpha_i) / 2

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def pairing(self) -> tuple:
        """Symmetrized Cartan form on simple roots: (alpha_i, alpha_j) = d_i a_ij."""
        n = self.rank
        return tuple(tuple(self.sym[i] * self.cartan[i][j] for j in range(n)) for i in range(n))

    @cached_property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.rank))

    def inner(self, x, y) -> Fraction:
        """Invariant pairing of two vectors in simple-root coordinates."""
        b = self.pairing
        n = self.rank
        return sum((as_fraction(x[i]) * b[i][j] * as_fraction(y[j]) for i in range(n) for j in range(n)), ZERO)

    def root_to_weight(self, r: Root) -> Weight:
        n = self.rank
        return tuple(sum(self.cartan[i][j] * r[j] for j in range(n)) for i in range(n))

    def weight_to_simple(self, w: Weight) -> tuple:
        n = self.rank
        x = solve([list(self.cartan[i]) for i in range(n)], list(w), n)
        return tuple(x)

    def weight_inner(self, u: Weight, v: Weight) -> Fraction:
        return self.inner(self.weight_to_simple(u), self.weight_to_simple(v))

    def coroot(self, r: Root) -> tuple:
        """Coefficients of h_r on the simple coroots h_i."""
        dr = self.inner(r, r) / 2
        out = []
        for i, c in enumerate(r):
            v = Fraction(c) * self.sym[i] / dr
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def height(self, r: Root) -> int:
        return sum(r)

    def reflect_weight(self, w: Weight, i: int) -> Weight:
        m = w[i]
        return tuple(w[k] - m * self.cartan[k][i] for k in range(self.rank))

    def is_dominant(self, w: Weight) -> bool:
        return all(c >= 0 for c in w)

    def dominant_representative(self, w: Weight) -> Weight:
        w = tuple(w)
        while True:
            for i, c in enumerate(w):
                if c < 0:
                    w = self.reflect_weight(w, i)
                    break
            else:
                return w

    def weyl_orbit(self, w: Weight) -> set:
        w = tuple(w)
        seen = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for i in range(self.rank):
                y = self.reflect_weight(x, i)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def weyl_dimension(self, highest: Weight) -> int:
        lr = tuple(a + 1 for a in highest)
        rho = self.weyl_vector
        num = Fraction(1)
        for a in self.positive_roots:
            aw = self.root_to_weight(a)
            num *= self.weight_inner(lr, aw) / self.weight_inner(rho, aw)
        assert num.denominator == 1
        return int(num)

    def simple_weights(self) -> list[Weight]:
        """Simple roots in fundamental-weight coordinates."""
        return [self.root_to_weight(self.simple_root(i)) for i in range(self.rank)]


def build_root_system(cartan, bound: int = 500) -> RootSystem:
    """Root system of a finite-type Cartan matrix by simple-reflection closure.

    ``bound`` caps the number of positive roots; exceeding it is taken as
    evidence of non-finite type.
    """
    a = [[int(x) for x in row] for row in cartan]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise CartanError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if a[i][i] != 2:
            raise CartanError(f"diagonal entry ({i},{i}) is {a[i][i]}, expected 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise CartanError(f"off-diagonal entry ({i},{j}) = {a[i][j]} is positive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise CartanError(f"entries ({i},{j}) and ({j},{i}) must vanish together")
    d = _symmetrizer(a)

    # positive roots via strings: beta + alpha_i is a root iff q > 0 where
    # p - q = <beta, alpha_i^vee>; p read off from beta - k alpha_i in the set.
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    pos = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            bw = [sum(a[i][j] * b[j] for j in range(n)) for i in range(n)]
            for i in range(n):
                p = 0
                cur = list(b)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in pos:
                        p += 1
                    else:
                        break
                q = p - bw[i]
                if q > 0:
                    c = list(b)
                    c[i] += 1
                    c = tuple(c)
                    if c not in pos:
                        pos.add(c)
                        nxt.append(c)
        if len(pos) > bound:
            raise CartanError(f"root closure exceeded {bound} positive roots; Cartan matrix is not of finite type")
        layer = nxt
    ordered = tuple(sorted(pos, key=lambda r: (sum(r), tuple(-x for x in r))))
    rs = RootSystem(tuple(tuple(r) for r in a), ordered, tuple(d))
    # closure under simple reflections (checked, not assumed)
    rset = rs.root_set
    for r in rs.roots:
        for i in range(n):
            c = sum(a[i][j] * r[j] for j in range(n))
            s = tuple(r[k] - (c if k == i else 0) for k in range(n))
            if s not in rset:
                raise CartanError(f"root set not closed under reflection s_{i}: {r} -> {s}")
    return rs


CARTAN_TYPES = {
    "A": lambda n: [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)],
}


def cartan_matrix(label: str) -> list[list[int]]:
    """Cartan matrix for labels ``A1..An``, ``B2``, ``C2``, ``G2`` (Kac convention)."""
    label = label.strip().upper()
    kind, rank = label[0], int(label[1:])
    if kind == "A":
        return CARTAN_TYPES["A"](rank)
    if kind in "BC" and rank >= 2:
        m = CARTAN_TYPES["A"](rank)
        if kind == "B":
            m[rank - 1][rank - 2] = -2
        else:
            m[rank - 2][rank - 1] = -2
        return m
    if label == "G2":
        return [[2, -1], [-3, 2]]
    raise CartanError(f"unsupported type label {label!r}")


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

class Character(Counter):
    """Weight -> multiplicity."""

    @property
    def dimension(self) -> int:
        return sum(self.values())

    def __add__(self, other):
        out = Character(self)
        out.update(other)
        return out


def dominant_weights_below(rs: RootSystem, highest: Weight) -> list[Weight]:
    """Dominant weights mu <= highest (difference a non-negative root combination)."""
    top = rs.weight_to_simple(highest)
    bounds = [int(x) for x in (t.__floor__() for t in top)]
    simple_w = rs.simple_weights()
    out = []
    for ks in product(*(range(b + 1) for b in bounds)):
        w = list(highest)
        for i, k in enumerate(ks):
            if k:
                for r in range(rs.rank):
                    w[r] -= k * simple_w[i][r]
        if all(c >= 0 for c in w):
            out.append((sum(ks), tuple(w)))
    out.sort()
    return [w for _, w in out]


def weight_system(rs: RootSystem, highest) -> Character:
    """All weights with multiplicities of the irreducible module (Freudenthal)."""
    highest = tuple(int(x) for x in highest)
    if len(highest) != rs.rank:
        raise WeightError(f"weight {highest} has wrong length for rank {rs.rank}")
    if not rs.is_dominant(highest):
        raise WeightError(f"highest weight {highest} is not dominant")
    doms = dominant_weights_below(rs, highest)
    dom_set = set(doms)
    mult: dict[Weight, int] = {highest: 1}
    rho = rs.weyl_vector
    lr = tuple(a + b for a, b in zip(highest, rho))
    norm_lr = rs.weight_inner(lr, lr)
    pos_w = [rs.root_to_weight(a) for a in rs.positive_roots]

    def m_of(w):
        d = rs.dominant_representative(w)
        if d not in dom_set:
            return 0
        return mult.get(d, 0)

    for mu in doms[1:]:
        total = Fraction(0)
        for aw in pos_w:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, aw))
                dn = rs.dominant_representative(nu)
                if dn not in dom_set:
                    break
                m = m_of(nu)
                if m:
                    total += rs.weight_inner(nu, aw) * m
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = norm_lr - rs.weight_inner(mr, mr)
        val = 2 * total / denom
        assert val.denominator == 1 and val >= 0, (mu, val)
        mult[mu] = int(val)
    ch = Character()
    for d, m in mult.items():
        if m:
            for w in rs.weyl_orbit(d):
                ch[w] = m
    return ch


def decompose_character(rs: RootSystem, ch) -> list[tuple[Weight, int]]:
    """Split a character into irreducible characters, highest weights first."""
    rest = Counter({tuple(w): m for w, m in ch.items() if m})
    out: list[tuple[Weight, int]] = []
    while rest:
        if any(m < 0 for m in rest.values()):
            w = next(w for w, m in rest.items() if m < 0)
            raise WeightError(f"not a character: negative multiplicity at weight {w}")
        top = max(rest, key=lambda w: (sum(rs.weight_to_simple(w)), w))
        if not rs.is_dominant(top):
            raise WeightError(f"not a character: maximal weight {top} is not dominant")
        m = rest[top]
        irr = weight_system(rs, top)
        for w, k in irr.items():
            rest[w] -= m * k
            if rest[w] < 0:
                raise WeightError(f"not a character: multiplicity at {w} goes negative")
            if rest[w] == 0:
                del rest[w]
        out.append((top, m))
    return out


def character_of_sum(rs: RootSystem, summands: Iterable[tuple[Weight, int]]) -> Character:
    ch = Character()
    for w, m in summands:
        for x, k in weight_system(rs, w).items():
            ch[x] += m * k
    return ch
