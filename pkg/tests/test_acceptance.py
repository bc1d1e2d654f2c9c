"""Acceptance criteria 1-8, one pass/fail line each.

Run standalone with ``python3 tests/test_acceptance.py``.  Every line is also
collected into the pytest terminal summary.
"""

import sys
import time
from fractions import Fraction as F
from functools import cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))
from conftest import ACCEPTANCE_LINES  # noqa: E402

from tanaka_forge.exact import ZERO  # noqa: E402
from tanaka_forge.extension import complex_extension, oracle_admissible  # noqa: E402
from tanaka_forge.graded import (  # noqa: E402
    CRPartition,
    admissible_structures,
    build_partition_iv,
    check_condition_ii,
    check_condition_iii,
    classify,
    dominant_weights_by_sum,
    enumerate_shifts,
)
from tanaka_forge.lie import jacobi_violations  # noqa: E402
from tanaka_forge.modules import realize_module  # noqa: E402
from tanaka_forge.presets import (  # noqa: E402
    chevalley,
    sl2_algebra,
    sl2_anti_hermitian,
    sl2_family,
    sl3_adjoint,
    sl3_algebra,
    sl3_reducible,
    su12_adjoint,
    su12_extension,
)
from tanaka_forge.prolong import assemble_m, check_prolongation, tanaka_prolongation  # noqa: E402
from tanaka_forge.reports import dumps, prolongation_report  # noqa: E402
from tanaka_forge.roots import weight_system  # noqa: E402
from tanaka_forge.structure import structure_report  # noqa: E402


def record(n, ok, detail, elapsed):
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f} s) {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@cache
def prolonged(key):
    """Extension, prolongation and report for a named input, computed once."""
    builders = {
        "su22": lambda: sl2_anti_hermitian(1),
        "two_copies": lambda: sl2_anti_hermitian(2),
        "reducible": sl3_reducible,
        "su12_adjoint_0": lambda: su12_adjoint(0),
        "su12_adjoint_2": lambda: su12_adjoint(2),
        "sl3_adjoint_0": lambda: sl3_adjoint(0),
        "sl3_adjoint_2": lambda: sl3_adjoint(2),
    }
    if key in builders:
        ext = builders[key]()
    elif key.startswith("sl2_l"):
        ext = sl2_family(int(key[5:]))
    else:
        _, a, b, shift = key.split("_")
        ext = su12_extension((int(a), int(b)), int(shift))
    pr = tanaka_prolongation(assemble_m(ext))
    check_prolongation(pr)
    return ext, pr, structure_report(pr, ext)


SU12_GAMMAS = ["su12_1_0_-2", "su12_1_0_-1", "su12_0_1_-2", "su12_0_1_-1", "su12_2_0_-3", "su12_3_0_-4", "su12_0_3_-4"]
ALL_INPUTS = (["su22", "two_copies", "reducible"] + [f"sl2_l{n}" for n in range(2, 6)] + SU12_GAMMAS
              + ["su12_adjoint_0", "su12_adjoint_2", "sl3_adjoint_0", "sl3_adjoint_2"])


# ---------------------------------------------------------------------------


def test_criterion_1_su22():
    t = time.perf_counter()
    _, pr, rep = prolonged("su22")
    dt = time.perf_counter() - t
    degs = [rep.dims[p] for p in sorted(rep.dims)]
    ok = rep.total_dim == 15 and degs == [1, 4, 5, 4, 1] and rep.classification == "semisimple" and dt < 10
    ok = ok and not pr.truncated
    record(1, ok, f"dim {rep.total_dim}, degrees {degs}, {rep.classification}", dt)
    assert ok


def test_criterion_2_sl2_family():
    t = time.perf_counter()
    bad = []
    rows = []
    for n in range(2, 6):
        ext, pr, rep = prolonged(f"sl2_l{n}")
        ldim = ext.dim - ext.s_dim
        k = rep.k_values[0]
        rows.append(f"n={n}: dim {rep.total_dim} {rep.classification} k={k}")
        if n == 2:
            if (rep.total_dim, rep.classification) != (16, "semisimple"):
                bad.append(n)
            continue
        nil_is_l = rep.nilpotent_dim == ldim and rep.shape.get("n_extra") == 0
        want = (rep.total_dim == 2 * n + 8 and rep.classification == "proper"
                and rep.radical_dim == ldim + 2 and rep.shape.get("t") == 2 and nil_is_l and k != 0)
        if not want:
            bad.append(n)
    dt = time.perf_counter() - t
    ok = not bad and dt < 30
    detail = "; ".join(rows) + (f"; mismatch at n in {bad}" if bad else "")
    record(2, ok, detail, dt)
    assert ok, detail


def test_criterion_3_su12_classification():
    t = time.perf_counter()
    alg, _ = sl3_algebra()
    rows = classify(alg, 4)
    counts = {r["weight"]: len(r["structures"]) for r in rows}
    admissible = {w for w, c in counts.items() if c}
    expected = {(n, 0) for n in range(1, 5)} | {(0, n) for n in range(1, 5)} | {(1, 1)}
    problems = []
    if admissible != expected:
        problems.append(f"admissible set {sorted(admissible)}")
    if counts[(1, 1)] != 2:
        problems.append(f"Gamma11 has {counts[(1, 1)]} structures")
    for w in ((1, 0), (2, 0)):
        if counts[w] != 2:
            problems.append(f"Gamma{w} has {counts[w]} structures")
    for r in rows:
        w = r["weight"]
        if (w[0] >= 3 and w[1] == 0) or (w[1] >= 3 and w[0] == 0):
            if counts[w] != 1:
                problems.append(f"Gamma{w} has {counts[w]} structures")
                continue
            d = r["structures"][0].diagram
            top = max(alg.weight_E(v) for v in d.weights)
            extreme = sorted(v for v in d.weights if alg.weight_E(v) == top)
            if sorted(d.P_p(-1)) != extreme:
                problems.append(f"Gamma{w}: degree -1 is not the extreme line")
    dt = time.perf_counter() - t
    ok = not problems and dt < 60
    detail = f"{len(admissible)} admissible weights, Gamma11: {counts[(1, 1)]}, Gamma10/20: {counts[(1, 0)]}/{counts[(2, 0)]}"
    record(3, ok, detail + ("; " + "; ".join(problems) if problems else ""), dt)
    assert ok, problems


def test_criterion_4_reducible_example():
    t = time.perf_counter()
    ext, pr, rep = prolonged("reducible")
    dt = time.perf_counter() - t
    shape = rep.shape
    extra = shape.get("n_extra")
    ok = (rep.total_dim == 38 and rep.classification == "proper" and extra == 6 and shape.get("t") == 4 and dt < 60)
    nil = f"l + {extra}" if extra is not None else "not containing l"
    detail = (f"dim {rep.total_dim} (want 38), {rep.classification}, nilpotent part of dim {rep.nilpotent_dim} {nil} "
              f"(want l + 6), t real dim {shape.get('t')} (want 4), Levi complement a = {shape.get('a')}")
    record(4, ok, detail, dt)
    assert ok, detail


@cache
def universe():
    """(label, algebra, Chevalley data, weight) for A1 and A2 modules of dim <= 50."""
    out = []
    a1, c1 = sl2_algebra()
    out += [("A1", a1, c1, (m,)) for m in range(0, 50)]
    a2, c2 = sl3_algebra()
    out += [("A2", a2, c2, w) for w in [(0, 0)] + dominant_weights_by_sum(2, 12) if a2.root_system.weyl_dimension(w) <= 50]
    return out


def test_criterion_5_condition_equivalence():
    t = time.perf_counter()
    instances = 0
    disagreements = []
    for label, alg, ch, w in universe():
        mod = None
        for d in enumerate_shifts(alg, weight_system(alg.root_system, w), w):
            mod = mod or realize_module(ch, w)
            ii = check_condition_ii(d) is not None
            iii = not check_condition_iii(d)
            iv = isinstance(build_partition_iv(d), CRPartition)
            oracle = oracle_admissible(complex_extension(alg, ch, [(mod, d.shift)])).ok
            instances += 1
            if len({ii, iii, iv, oracle}) != 1:
                disagreements.append((label, w, d.shift, ii, iii, iv, oracle))
    dt = time.perf_counter() - t
    ok = not disagreements and dt < 300
    record(5, ok, f"{instances} instances over {len(universe())} modules, {len(disagreements)} disagreements", dt)
    assert ok, disagreements[:5]


def J_acts_as_cr(pr, J_g):
    """Independent check: ad(J_g) restricted to m_-1 is the CR structure of m."""
    J = pr.m.table.complex_structure
    m1 = pr.m.indices(-1)
    for a, x in enumerate(m1):
        img = {}
        for g, c in enumerate(J_g):
            if c:
                for h, v in pr.act(g, x).items():
                    img[h] = img.get(h, ZERO) + c * v
        for b, h in enumerate(m1):
            if img.get(h, ZERO) != J[b][a]:
                return False
    return True


def test_criterion_6_J_property():
    t = time.perf_counter()
    problems = []
    for key in ALL_INPUTS:
        ext, pr, rep = prolonged(key)
        if rep.J_element is None:
            problems.append(f"{key}: no J element")
            continue
        if not J_acts_as_cr(pr, rep.J_element):
            problems.append(f"{key}: J element does not induce J")
        if len(rep.k_values) != len(ext.components):
            problems.append(f"{key}: {len(rep.k_values)} k values for {len(ext.components)} components")
        if key.startswith(("su12_adjoint", "sl3_adjoint")) and any(k != 0 for k in rep.k_values):
            problems.append(f"{key}: k = {rep.k_values} on the adjoint module")
    dt = time.perf_counter() - t
    ok = not problems
    adj = [prolonged(k)[2].k_values[0] for k in ("su12_adjoint_0", "su12_adjoint_2")]
    record(6, ok, f"{len(ALL_INPUTS)} prolongations, J = J_s - sum i k pi in all; adjoint k = {[str(k) for k in adj]}"
           + ("; " + "; ".join(problems) if problems else ""), dt)
    assert ok, problems


def dominant_up_to_dim(rs, cap):
    out = []
    s = 0
    while True:
        ws = [w for w in dominant_weights_by_sum(rs.rank, s) if sum(w) == s]
        small = [w for w in ws if rs.weyl_dimension(w) <= cap]
        if s and not small:
            return out
        out += small
        s += 1


def test_criterion_7_invariants():
    t = time.perf_counter()
    problems = []
    tables = 0
    for label in ("A1", "A2", "A3", "B2", "C2", "G2"):
        tables += 1
        if jacobi_violations(chevalley(label).table, limit=1):
            problems.append(f"Jacobi fails on {label}")
    for key in ALL_INPUTS:
        ext, pr, rep = prolonged(key)
        for name, tab in (("extension", ext.table), ("m", pr.m.table), ("g", pr.table)):
            tables += 1
            if jacobi_violations(tab, limit=1):
                problems.append(f"Jacobi fails on {key} {name}")
        spec = rep.spectrum
        ldim = ext.dim - ext.s_dim
        if any(int(h) != h or h > 1 for h in spec) or spec.get(1) != ldim:
            problems.append(f"{key}: ad(pi) spectrum {spec}")
    structures = 0
    for label, alg, _, w in universe():
        ch = weight_system(alg.root_system, w)
        for st in admissible_structures(alg, w):
            structures += 1
            if any(ch[v] != 1 for v in st.diagram.P_p(-1)):
                problems.append(f"multiplicity > 1 on P_-1 for {label} {w}")
    modules = 0
    for label in ("A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"):
        rs = chevalley(label).root_system
        for w in dominant_up_to_dim(rs, 200):
            modules += 1
            if sum(weight_system(rs, w).values()) != rs.weyl_dimension(w):
                problems.append(f"Freudenthal and Weyl disagree on {label} {w}")
    dt = time.perf_counter() - t
    ok = not problems and dt < 300
    record(7, ok, f"Jacobi on {tables} tables, spectra on {len(ALL_INPUTS)} prolongations, {structures} structures, "
           f"{modules} modules of dim <= 200" + ("; " + "; ".join(problems[:5]) if problems else ""), dt)
    assert ok, problems[:5]


def test_criterion_8_two_copies():
    t = time.perf_counter()
    _, pr, rep = prolonged("two_copies")
    first = dumps(prolongation_report(rep, pr.truncated))
    ext2 = sl2_anti_hermitian(2)
    pr2 = tanaka_prolongation(assemble_m(ext2))
    second = dumps(prolongation_report(structure_report(pr2, ext2), pr2.truncated))
    dt = time.perf_counter() - t
    stable = first == second
    ok = rep.classification == "proper" and stable
    verdict = "agrees" if rep.total_dim == 16 else "disagrees"
    detail = (f"{rep.classification} (stated proper), stable across runs: {stable}; dimension {rep.total_dim} {verdict} "
              f"with stated 16: Levi complement a = {rep.shape.get('a')} (sl(2,R) mixing the two isomorphic copies), "
              f"t = {rep.shape.get('t')}")
    record(8, ok, detail, dt)
    assert ok, detail


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
