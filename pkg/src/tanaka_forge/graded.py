"""Gradations, CR functionals and the weight-combinatorial admissibility test.

A semisimple algebra is graded by a characteristic functional ``E`` (its
values ``alpha_i(E)`` on simple roots) and carries a CR functional ``J``
(values ``alpha_i(J)/i``).  An irreducible module with character ``P`` is
graded by ``deg(lam) = lam(E) + shift``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .exact import as_fraction
from .lie import ConsistencyError
from .roots import Character, RootSystem, _components, weight_system


class GradingError(ValueError):
    pass


class CRError(ValueError):
    pass


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


@dataclass(frozen=True, eq=False)
class GradedCRAlgebra:
    root_system: RootSystem
    E: tuple
    J: tuple | None = None
    label: str = ""

    def degree(self, root) -> int:
        d = sum((c * e for c, e in zip(root, self.E)), Fraction(0))
        return int(d)

    def j_value(self, root) -> Fraction:
        return sum((c * j for c, j in zip(root, self.J)), Fraction(0))

    @cached_property
    def R(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for r in self.root_system.roots:
            out.setdefault(self.degree(r), []).append(r)
        return out

    def R_p(self, p: int) -> list:
        return self.R.get(p, [])

    @cached_property
    def kind(self) -> int:
        return max([-p for p in self.R if p < 0], default=0)

    @cached_property
    def cokind(self) -> int:
        return max([p for p in self.R if p > 0], default=0)

    @cached_property
    def R10(self) -> list:
        return [r for r in self.R_p(-1) if self.j_value(r) == 1]

    @cached_property
    def R01(self) -> list:
        return [r for r in self.R_p(-1) if self.j_value(r) == -1]

    @cached_property
    def simple_ideal_kinds(self) -> list[int]:
        rs = self.root_system
        kinds = []
        for comp in _components([list(r) for r in rs.cartan]):
            roots = [r for r in rs.roots if all(r[i] == 0 for i in range(rs.rank) if i not in comp)]
            kinds.append(max([-self.degree(r) for r in roots], default=0))
        return kinds

    @property
    def levi_tanaka(self) -> bool:
        return self.J is not None and all(k >= 2 for k in self.simple_ideal_kinds)

    # weights are in fundamental coordinates
    def weight_E(self, w) -> Fraction:
        s = self.root_system.weight_to_simple(w)
        return sum((a * e for a, e in zip(s, self.E)), Fraction(0))

    def weight_J(self, w) -> Fraction:
        s = self.root_system.weight_to_simple(w)
        return sum((a * j for a, j in zip(s, self.J)), Fraction(0))

    @cached_property
    def root_weights(self) -> dict:
        return {r: self.root_system.root_to_weight(r) for r in self.root_system.roots}

    @cached_property
    def nonpositive_base(self) -> list:
        """Simple system all of whose roots have degree <= 0."""
        rs = self.root_system
        big = max(sum(abs(x) for x in r) for r in rs.roots) + 1

        def phi(r):
            return -self.degree(r) * big + sum(r)

        pos = [r for r in rs.roots if phi(r) > 0]
        pset = set(pos)
        simple = [r for r in pos if not any(_sub(r, a) in pset for a in pos if a != r)]
        assert len(simple) == rs.rank
        return simple

    def base_parts(self):
        b = self.nonpositive_base
        b0 = [r for r in b if self.degree(r) == 0]
        b10 = [r for r in b if r in self.R10]
        b01 = [r for r in b if r in self.R01]
        return b0, b10, b01


def grade_algebra(rs: RootSystem, E, label: str = "") -> GradedCRAlgebra:
    """Grade by a characteristic functional given on simple roots."""
    E = tuple(as_fraction(x) for x in E)
    if len(E) != rs.rank:
        raise GradingError(f"E has {len(E)} values for rank {rs.rank}")
    alg = GradedCRAlgebra(rs, E, None, label)
    for r in rs.roots:
        d = sum((c * e for c, e in zip(r, E)), Fraction(0))
        if d.denominator != 1:
            raise GradingError(f"root {r} has non-integral degree {d}")
    return alg


def attach_cr(alg: GradedCRAlgebra, J) -> GradedCRAlgebra:
    """Attach a CR functional and validate the graded CR axioms on roots."""
    J = tuple(as_fraction(x) for x in J)
    if len(J) != alg.root_system.rank:
        raise CRError("J has wrong length")
    out = GradedCRAlgebra(alg.root_system, alg.E, J, alg.label)
    for r in out.R_p(-1):
        v = out.j_value(r)
        if v not in (1, -1):
            raise CRError(f"root {r} of degree -1 has alpha(J)/i = {v}, expected +-1")
    roots = alg.root_system.root_set
    for side, name in ((out.R10, "R10"), (out.R01, "R01")):
        for a in side:
            for b in side:
                if _add(a, b) in roots:
                    raise CRError(f"roots {a} and {b} of {name} sum to a root")
    # s_0-equivariance: degree-0 root vectors preserve the J-eigenspaces
    for a in out.R_p(0):
        for b in out.R_p(-1):
            c = _add(a, b)
            if c in roots and out.j_value(c) != out.j_value(b):
                raise CRError(f"degree-0 root {a} does not commute with J on root {b}")
    return out


# ---------------------------------------------------------------------------
# weight diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeightDiagram:
    algebra: GradedCRAlgebra
    character: Character
    shift: Fraction
    highest_weight: tuple | None = None

    def degree(self, w) -> int:
        d = self.algebra.weight_E(w) + self.shift
        if d.denominator != 1:
            raise GradingError(f"weight {w} gets non-integral degree {d}")
        return int(d)

    @cached_property
    def weights(self) -> frozenset:
        return frozenset(w for w, m in self.character.items() if m)

    @cached_property
    def P(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for w in sorted(self.weights):
            out.setdefault(self.degree(w), []).append(w)
        return out

    def P_p(self, p: int) -> list:
        return self.P.get(p, [])

    @property
    def degrees(self) -> dict:
        return {w: self.degree(w) for w in sorted(self.weights)}

    @property
    def kind(self) -> int:
        return max([-p for p in self.P], default=0)

    @property
    def cokind(self) -> int:
        return max(self.P, default=0)

    @property
    def degree_set(self) -> list[int]:
        return sorted(self.P, reverse=True)

    def regraded(self, k) -> "WeightDiagram":
        return WeightDiagram(self.algebra, self.character, self.shift + as_fraction(k), self.highest_weight)


def diagram_for(alg: GradedCRAlgebra, highest, shift) -> WeightDiagram:
    ch = weight_system(alg.root_system, highest)
    return WeightDiagram(alg, ch, as_fraction(shift), tuple(highest))


def enumerate_shifts(alg: GradedCRAlgebra, character, highest=None) -> list[WeightDiagram]:
    """All integral shifts giving nonempty degree -1 and -2 parts."""
    ws = [w for w, m in character.items() if m]
    if not ws:
        return []
    vals = sorted({alg.weight_E(w) for w in ws})
    cands = set()
    for v in vals:
        for target in (-1, -2):
            k = target - v
            if all((x + k).denominator == 1 for x in vals):
                cands.add(k)
    out = []
    for k in sorted(cands):
        degs = {x + k for x in vals}
        if -1 in degs and -2 in degs:
            out.append(WeightDiagram(alg, Character(character), k, highest))
    return out


def check_condition_ii(d: WeightDiagram) -> Fraction | None:
    """The constant value of lam(J)/i on P_0 and P_-2, if it is constant."""
    alg = d.algebra
    vals = {alg.weight_J(w) for w in d.P_p(0) + d.P_p(-2)}
    if len(vals) == 1:
        return vals.pop()
    return None


@dataclass(frozen=True)
class Violation:
    weight: tuple
    combination: str
    offending: tuple


def check_condition_iii(d: WeightDiagram) -> list[Violation]:
    """Forbidden configurations around degree -2 weights (empty list = pass)."""
    alg = d.algebra
    P = d.weights
    rw = alg.root_weights
    R10 = [rw[r] for r in alg.R10]
    R01 = [rw[r] for r in alg.R01]
    out = []
    for lam in d.P_p(-2):
        for a in R10:
            for a2 in R10:
                w = _sub(_sub(lam, a), a2)
                if w in P:
                    out.append(Violation(lam, "lam-alpha-alpha'", w))
            for b in R01:
                w = _add(_sub(lam, a), b)
                if w in P:
                    out.append(Violation(lam, "lam-alpha+beta", w))
                w = _sub(_add(lam, a), b)
                if w in P:
                    out.append(Violation(lam, "lam+alpha-beta", w))
        for b in R01:
            for b2 in R01:
                w = _sub(_sub(lam, b), b2)
                if w in P:
                    out.append(Violation(lam, "lam-beta-beta'", w))
    return sorted(set(out), key=lambda v: (v.weight, v.combination, v.offending))


@dataclass(frozen=True)
class CRPartition:
    p10: tuple
    p01: tuple
    k: Fraction | None = None


@dataclass(frozen=True)
class PartitionFailure:
    weight: tuple
    rule: str


def build_partition_iv(d: WeightDiagram) -> CRPartition | PartitionFailure:
    """Split P_-1 from the degree -2 weights and check the closure rules."""
    alg = d.algebra
    P = d.weights
    rw = alg.root_weights
    R10 = [rw[r] for r in alg.R10]
    R01 = [rw[r] for r in alg.R01]
    p10, p01 = set(), set()
    for lam in d.P_p(-2):
        p10 |= {_sub(lam, b) for b in R01} & P
        p01 |= {_sub(lam, a) for a in R10} & P
    both = p10 & p01
    if both:
        return PartitionFailure(min(both), "overlap")
    pm1 = set(d.P_p(-1))
    if p10 | p01 != pm1:
        extra = (p10 | p01) ^ pm1
        return PartitionFailure(min(extra), "not exhaustive")
    b0, b10, b01 = alg.base_parts()
    b0, b10, b01 = ([rw[r] for r in x] for x in (b0, b10, b01))
    for w in sorted(p10):
        for b in b0:
            for x in (_add(w, b), _sub(w, b)):
                if x in P and x not in p10:
                    return PartitionFailure(w, "(a) P10 +- B0")
        for b in b10:
            if _add(w, b) in P:
                return PartitionFailure(w, "(b) P10 + B10")
        for b in b01:
            if _sub(w, b) in P:
                return PartitionFailure(w, "(b) P10 - B01")
    for w in sorted(p01):
        for b in b0:
            for x in (_add(w, b), _sub(w, b)):
                if x in P and x not in p01:
                    return PartitionFailure(w, "(a) P01 +- B0")
        for b in b01:
            if _add(w, b) in P:
                return PartitionFailure(w, "(b) P01 + B01")
        for b in b10:
            if _sub(w, b) in P:
                return PartitionFailure(w, "(b) P01 - B10")
    return CRPartition(tuple(sorted(p10)), tuple(sorted(p01)), check_condition_ii(d))


@dataclass(frozen=True, eq=False)
class Structure:
    diagram: WeightDiagram
    partition: CRPartition
    k: Fraction

    @property
    def shift(self):
        return self.diagram.shift


def admissible_structures(alg: GradedCRAlgebra, highest) -> list[Structure]:
    """All graded CR structures on the irreducible module of a highest weight."""
    if alg.J is None:
        raise CRError("algebra has no CR functional")
    ch = weight_system(alg.root_system, highest)
    out = []
    for d in enumerate_shifts(alg, ch, tuple(highest)):
        k = check_condition_ii(d)
        viol = check_condition_iii(d)
        part = build_partition_iv(d)
        ok = [k is not None, not viol, isinstance(part, CRPartition)]
        if len(set(ok)) != 1:
            raise ConsistencyError(
                f"conditions disagree for weight {tuple(highest)} shift {d.shift}: "
                f"(ii)={ok[0]} (iii)={ok[1]} (iv)={ok[2]}"
            )
        if not ok[0]:
            continue
        for w in d.P_p(-1):
            if ch[w] != 1:
                raise ConsistencyError(f"admissible structure has multiplicity {ch[w]} at degree -1 weight {w}")
        for w in part.p10:
            if alg.weight_J(w) - k != 1:
                raise ConsistencyError(f"weight {w} in P10 but lam(J)/i - k = {alg.weight_J(w) - k}")
        for w in part.p01:
            if alg.weight_J(w) - k != -1:
                raise ConsistencyError(f"weight {w} in P01 but lam(J)/i - k = {alg.weight_J(w) - k}")
        out.append(Structure(d, part, k))
    return out


def dominant_weights_by_sum(rank: int, bound: int) -> list[tuple]:
    """Nonzero dominant weights with coordinate sum <= bound, graded-lex order."""
    out = []

    def rec(prefix, left):
        if len(prefix) == rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for a in range(left + 1):
            rec(prefix + [a], left - a)

    rec([], bound)
    out.sort(key=lambda w: (sum(w), tuple(-x for x in w)))
    return out


def classify(alg: GradedCRAlgebra, bound: int, dim_cap: int | None = None) -> list[dict]:
    """Structure counts for every dominant weight with coordinate sum <= bound."""
    rows = []
    for w in dominant_weights_by_sum(alg.root_system.rank, bound):
        dim = alg.root_system.weyl_dimension(w)
        if dim_cap is not None and dim > dim_cap:
            rows.append({"weight": w, "dim": dim, "skipped": True, "structures": []})
            continue
        rows.append({"weight": w, "dim": dim, "skipped": False, "structures": admissible_structures(alg, w)})
    return rows


# ---------------------------------------------------------------------------
# real forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealEntry:
    members: tuple  # complex highest weights
    type: str  # "real" | "complex" | "quaternionic"
    counts: tuple  # structures per member


def real_form_admissible(results: Mapping, involution: Callable, types: Mapping | None = None) -> list[RealEntry]:
    """Merge complex classification results into real irreducibles.

    ``results`` maps highest weight -> number of structures (or the list of
    them); ``involution`` maps weights to weights; ``types`` declares
    ``"real"`` or ``"quaternionic"`` for each self-conjugate weight.
    """
    types = dict(types or {})
    seen = set()
    out = []
    for w in sorted(results, key=lambda w: (sum(w), tuple(-x for x in w))):
        if w in seen:
            continue
        c = tuple(involution(w))
        cnt = results[w] if isinstance(results[w], int) else len(results[w])
        if c == tuple(w):
            if w not in types:
                raise ValueError(f"self-conjugate weight {w} needs a declared type (real or quaternionic)")
            t = types[w]
            if t not in ("real", "quaternionic"):
                raise ValueError(f"type of {w} must be real or quaternionic, got {t!r}")
            out.append(RealEntry((tuple(w),), t, (cnt,)))
            seen.add(w)
        else:
            ccnt = results.get(c, 0)
            ccnt = ccnt if isinstance(ccnt, int) else len(ccnt)
            out.append(RealEntry((tuple(w), c), "complex", (cnt, ccnt)))
            seen.update({w, c})
    return out


def swap_involution(w):
    return tuple(reversed(w))
