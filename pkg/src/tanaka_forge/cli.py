"""Command line driver: check | classify | prolong | render.

A job is one JSON document::

    {
      "schema": 1,
      "algebra": {"type": "A2", "E": ["1", "1"], "J": ["1", "-1"], "real_form": "su(1,2)"},
      "modules": [{"weight": [1, 0], "shift": "-2"}, {"preset": "adjoint"}],
      "bounds": {"max_weight_sum": 4, "max_module_dim": 200, "max_degree": 6},
      "output": {"dir": "out"}
    }

``algebra`` takes ``type`` (``A2``, ``B2`` ...) or ``cartan`` (a matrix).  ``E``
and ``J`` are the values on the simple roots (``J`` in units of i).  Module
presets are ``standard``, ``dual``, ``adjoint`` and ``adjoint-shifted``.  An
``extension`` entry ``{"preset": "anti-hermitian", "copies": n}`` replaces the
module list for ``prolong``; ``nilpotent`` names a LieTable JSON file to be
prolonged as is.

Exit codes: 0 success, 1 bad input, 2 internal consistency failure, 3 nothing
admissible, 4 prolongation truncated at ``max_degree``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .exact import ExactnessError, as_fraction
from .extension import ExtensionError, complex_extension
from .graded import (
    CRError,
    GradedCRAlgebra,
    GradingError,
    admissible_structures,
    attach_cr,
    dominant_weights_by_sum,
    grade_algebra,
    real_form_admissible,
    swap_involution,
)
from .lie import ConsistencyError, LieTableError, chevalley_constants, from_json, to_json
from .modules import DEFAULT_DIM_CAP, realize_module
from .presets import sl2_anti_hermitian, su12_adjoint, su12_extension
from .prolong import GradedNilpotent, assemble_m, check_prolongation, nilpotent_violations, tanaka_prolongation
from .render import diagram_spec, render_ascii, render_svg
from .reports import admissibility_report, algebra_json, dumps, prolongation_report, structure_json, weight_key
from .roots import CartanError, WeightError, build_root_system, cartan_matrix, weight_system
from .structure import structure_report

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_NONE, EXIT_TRUNCATED = 0, 1, 2, 3, 4
COMMANDS = ("check", "classify", "prolong", "render")
MODULE_PRESETS = ("standard", "dual", "adjoint", "adjoint-shifted")
REAL_FORMS = ("su(1,2)",)


class ConfigError(ValueError):
    pass


class Ambiguous(ValueError):
    pass


class NoneFound(ValueError):
    pass


# ---------------------------------------------------------------------------
# config
# ---------------------------------------------------------------------------

def load_config(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError(f"{path}: top level must be an object")
    if cfg.get("schema") != 1:
        raise ConfigError(f"{path}: field 'schema' must be 1, got {cfg.get('schema')!r}")
    return cfg


def _rationals(values, where: str) -> list[Fraction]:
    if not isinstance(values, list):
        raise ConfigError(f"field '{where}' must be a list of rationals")
    out = []
    for k, v in enumerate(values):
        if isinstance(v, float):
            raise ConfigError(f"field '{where}[{k}]': write {v!r} as an exact rational string")
        try:
            out.append(as_fraction(v))
        except ExactnessError as exc:
            raise ConfigError(f"field '{where}[{k}]': {exc}") from exc
    return out


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"field '{where}' must be an integer, got {v!r}")
    return v


def build_algebra(spec) -> GradedCRAlgebra:
    if not isinstance(spec, dict):
        raise ConfigError("field 'algebra' must be an object")
    try:
        if "cartan" in spec:
            cartan = spec["cartan"]
            label = spec.get("type", "")
        elif "type" in spec:
            cartan = cartan_matrix(str(spec["type"]))
            label = str(spec["type"]).upper()
        else:
            raise ConfigError("field 'algebra' needs 'type' or 'cartan'")
        rs = build_root_system(cartan)
    except CartanError as exc:
        raise ConfigError(f"field 'algebra': {exc}") from exc
    if "E" not in spec:
        raise ConfigError("field 'algebra.E' is required")
    E = _rationals(spec["E"], "algebra.E")
    if len(E) != rs.rank:
        raise ConfigError(f"field 'algebra.E' has {len(E)} entries, rank is {rs.rank}")
    try:
        alg = grade_algebra(rs, E, label)
        if spec.get("J") is not None:
            J = _rationals(spec["J"], "algebra.J")
            if len(J) != rs.rank:
                raise ConfigError(f"field 'algebra.J' has {len(J)} entries, rank is {rs.rank}")
            alg = attach_cr(alg, J)
    except (GradingError, CRError) as exc:
        raise ConfigError(f"field 'algebra': {exc}") from exc
    rf = spec.get("real_form")
    if rf is not None and rf not in REAL_FORMS:
        raise ConfigError(f"field 'algebra.real_form': unknown preset {rf!r} (known: {', '.join(REAL_FORMS)})")
    return alg


def _chevalley(alg: GradedCRAlgebra):
    return chevalley_constants(alg.root_system)


def _highest_root_weight(alg: GradedCRAlgebra) -> tuple:
    rs = alg.root_system
    top = max(rs.positive_roots, key=rs.height)
    return tuple(int(x) for x in rs.root_to_weight(top))


def expand_modules(alg: GradedCRAlgebra, mods) -> list[dict]:
    """Each entry becomes {weight, shift (or None), structure (or None)}."""
    if mods is None:
        return []
    if not isinstance(mods, list):
        raise ConfigError("field 'modules' must be a list")
    rs = alg.root_system
    n = rs.rank
    out = []
    for k, m in enumerate(mods):
        where = f"modules[{k}]"
        if not isinstance(m, dict):
            raise ConfigError(f"field '{where}' must be an object")
        shift = None
        if "preset" in m:
            p = m["preset"]
            if p == "standard":
                w = tuple(1 if i == 0 else 0 for i in range(n))
            elif p == "dual":
                w = tuple(1 if i == n - 1 else 0 for i in range(n))
            elif p == "adjoint":
                w, shift = _highest_root_weight(alg), Fraction(0)
            elif p == "adjoint-shifted":
                w, shift = _highest_root_weight(alg), Fraction(-alg.cokind)
            else:
                raise ConfigError(f"field '{where}.preset': unknown preset {p!r} (known: {', '.join(MODULE_PRESETS)})")
        elif "weight" in m:
            w = m["weight"]
            if not isinstance(w, list) or len(w) != n:
                raise ConfigError(f"field '{where}.weight' must be a list of {n} integers")
            w = tuple(_int(x, f"{where}.weight") for x in w)
            if not rs.is_dominant(w):
                raise ConfigError(f"field '{where}.weight': {w} is not dominant")
        else:
            raise ConfigError(f"field '{where}' needs 'weight' or 'preset'")
        if m.get("shift") is not None:
            shift = _rationals([m["shift"]], f"{where}.shift")[0]
        st = m.get("structure")
        if st is not None:
            st = _int(st, f"{where}.structure")
        out.append({"weight": w, "shift": shift, "structure": st})
    return out


def _bounds(cfg) -> dict:
    b = cfg.get("bounds") or {}
    if not isinstance(b, dict):
        raise ConfigError("field 'bounds' must be an object")
    out = {"max_weight_sum": None, "max_module_dim": DEFAULT_DIM_CAP, "max_degree": None}
    for key in out:
        if b.get(key) is not None:
            out[key] = _int(b[key], f"bounds.{key}")
    return out


def _out_dir(cfg, args) -> Path:
    d = args.out or (cfg.get("output") or {}).get("dir") or "."
    p = Path(d)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _threads() -> int:
    raw = os.environ.get("TANAKA_FORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"TANAKA_FORGE_THREADS must be an integer, got {raw!r}") from None


def _write(path: Path, text: str) -> None:
    path.write_text(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _structures_for(alg, w, cap):
    dim = alg.root_system.weyl_dimension(w)
    if dim > cap:
        raise ConfigError(f"module {w} has dimension {dim}, above max_module_dim {cap}")
    return admissible_structures(alg, w)


def run_check(cfg, args, log) -> int:
    alg = build_algebra(cfg.get("algebra"))
    mods = expand_modules(alg, cfg.get("modules"))
    if not mods:
        raise ConfigError("field 'modules' must name at least one module")
    cap = _bounds(cfg)["max_module_dim"]
    reports = []
    found = True
    for m in mods:
        sts = _structures_for(alg, m["weight"], cap)
        if m["shift"] is not None:
            sts = [s for s in sts if s.shift == m["shift"]]
        reports.append(admissibility_report(alg, m["weight"], sts))
        log(f"{weight_key(m['weight'])}: {len(sts)} structure(s)")
        found = found and bool(sts)
    out = _out_dir(cfg, args)
    doc = reports[0] if len(reports) == 1 else {"algebra": algebra_json(alg), "modules": reports}
    _write(out / "check.json", dumps(doc))
    return EXIT_OK if found else EXIT_NONE


def _classify_row(job):
    alg_spec, w, cap = job
    alg = build_algebra(alg_spec)
    dim = alg.root_system.weyl_dimension(w)
    row = {"weight": list(w), "dim": dim}
    if dim > cap:
        row.update(skipped=True, count=0, structures=[])
        return row
    sts = admissible_structures(alg, w)
    row.update(skipped=False, count=len(sts), structures=[structure_json(s) for s in sts])
    return row


def run_classify(cfg, args, log) -> int:
    alg = build_algebra(cfg.get("algebra"))
    b = _bounds(cfg)
    bound = args.bound if args.bound is not None else b["max_weight_sum"]
    if bound is None:
        raise ConfigError("classify needs --bound or 'bounds.max_weight_sum'")
    weights = dominant_weights_by_sum(alg.root_system.rank, bound)
    jobs = [(cfg["algebra"], w, b["max_module_dim"]) for w in weights]
    threads = _threads()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_classify_row, jobs))
    else:
        rows = [_classify_row(j) for j in jobs]
    doc = {
        "algebra": algebra_json(alg),
        "bound": bound,
        "max_module_dim": b["max_module_dim"],
        "rows": rows,
        "admissible": [r["weight"] for r in rows if r["count"]],
    }
    rf = (cfg.get("algebra") or {}).get("real_form")
    merge = cfg.get("real_form_merge")
    if rf == "su(1,2)" or merge is not None:
        merge = merge or {}
        inv = merge.get("involution", "swap")
        if inv == "swap":
            invol = swap_involution
        elif inv == "identity":
            invol = tuple
        else:
            raise ConfigError(f"field 'real_form_merge.involution': unknown {inv!r}")
        types = {tuple(int(x) for x in k.split(",")): v for k, v in (merge.get("types") or {}).items()}
        counts = {tuple(r["weight"]): r["count"] for r in rows if r["count"]}
        for w in counts:
            if tuple(invol(w)) == w and w not in types:
                types[w] = "real" if w == _highest_root_weight(alg) else None
                if types[w] is None:
                    raise ConfigError(f"field 'real_form_merge.types': self-conjugate weight {weight_key(w)} needs a type")
        entries = real_form_admissible(counts, invol, types)
        doc["real_form"] = [{"members": [list(m) for m in e.members], "type": e.type, "counts": list(e.counts)}
                            for e in entries]
    for r in rows:
        if r["count"] or r["skipped"]:
            log(f"{weight_key(r['weight'])}: dim {r['dim']}, " + ("skipped" if r["skipped"] else f"{r['count']} structure(s)"))
    _write(_out_dir(cfg, args) / "classify.json", dumps(doc))
    return EXIT_OK


def _select(alg, m, cap, index):
    sts = _structures_for(alg, m["weight"], cap)
    if m["shift"] is not None:
        sts = [s for s in sts if s.shift == m["shift"]]
    if not sts:
        raise NoneFound(f"no admissible structure on {weight_key(m['weight'])}"
                        + ("" if m["shift"] is None else f" with shift {m['shift']}"))
    idx = m["structure"] if m["structure"] is not None else index
    if idx is not None:
        if not 0 <= idx < len(sts):
            raise ConfigError(f"structure index {idx} out of range 0..{len(sts) - 1}")
        return sts[idx]
    if len(sts) > 1:
        choices = "; ".join(f"[{k}] shift {s.shift}, k = {s.k}" for k, s in enumerate(sts))
        raise Ambiguous(f"{weight_key(m['weight'])} has {len(sts)} structures, pick one with --structure: {choices}")
    return sts[0]


def build_extension(cfg, args):
    spec = cfg.get("extension")
    if spec is not None:
        if not isinstance(spec, dict) or spec.get("preset") != "anti-hermitian":
            raise ConfigError("field 'extension': only the preset 'anti-hermitian' is known")
        copies = _int(spec.get("copies", 1), "extension.copies")
        if copies < 1:
            raise ConfigError("field 'extension.copies' must be positive")
        return sl2_anti_hermitian(copies)
    alg = build_algebra(cfg.get("algebra"))
    mods = expand_modules(alg, cfg.get("modules"))
    if not mods:
        raise ConfigError("field 'modules' must name at least one module")
    cap = _bounds(cfg)["max_module_dim"]
    if len(mods) > 1 and args.structure is not None:
        raise ConfigError("--structure applies to a single module; use 'structure' in each module entry")
    chosen = [_select(alg, m, cap, args.structure) for m in mods]
    if cfg["algebra"].get("real_form") == "su(1,2)":
        if tuple(alg.E) != (1, 1) or tuple(alg.J) != (1, -1) or alg.root_system.rank != 2:
            raise ConfigError("real form su(1,2) needs type A2 with E = [1, 1] and J = [1, -1]")
        if len(chosen) != 1:
            raise ConfigError("real form su(1,2): one module at a time")
        st = chosen[0]
        w = st.diagram.highest_weight
        if swap_involution(w) == tuple(w):
            if w != _highest_root_weight(alg):
                raise ConfigError(f"real form su(1,2): self-conjugate weight {weight_key(w)} is not supported")
            return su12_adjoint(int(-st.shift))
        return su12_extension(w, st.shift)
    ch = _chevalley(alg)
    comps = [(realize_module(ch, st.diagram.highest_weight, cap), st.shift, st.partition) for st in chosen]
    return complex_extension(alg, ch, comps)


def run_prolong(cfg, args, log) -> int:
    b = _bounds(cfg)
    max_degree = args.max_degree if args.max_degree is not None else b["max_degree"]
    if cfg.get("nilpotent") is not None:
        try:
            t = from_json(Path(cfg["nilpotent"]).read_text())
        except (OSError, LieTableError, ValueError, KeyError) as exc:
            raise ConfigError(f"field 'nilpotent': {exc}") from exc
        m = GradedNilpotent(t, tuple(False for _ in range(t.dim)), t.imaginary_unit, tuple(range(t.dim)))
        bad = nilpotent_violations(m)
        if bad:
            raise ConfigError(f"field 'nilpotent': {bad[0][0]} fails ({bad[0][1]})")
        ext = None
    else:
        ext = build_extension(cfg, args)
        m = assemble_m(ext)
    if max_degree is not None and max_degree < m.kind:
        raise ConfigError(f"field 'bounds.max_degree': {max_degree} is below the kind {m.kind}")
    pr = tanaka_prolongation(m, max_degree)
    check_prolongation(pr)
    rep = structure_report(pr, ext)
    doc = prolongation_report(rep, pr.truncated)
    out = _out_dir(cfg, args)
    _write(out / "prolong.json", dumps(doc))
    _write(out / "prolong_table.json", to_json(pr.table))
    log(f"total_dim {rep.total_dim}, degrees {dict(sorted(rep.dims.items()))}, {rep.classification}")
    if pr.truncated:
        log(f"truncated at degree {pr.top}: raise --max-degree")
        return EXIT_TRUNCATED
    return EXIT_OK


def run_render(cfg, args, log) -> int:
    alg = build_algebra(cfg.get("algebra"))
    if alg.J is None:
        raise ConfigError("render needs 'algebra.J'")
    raw = cfg.get("modules")
    if not isinstance(raw, list) or not raw:
        raise ConfigError("field 'modules' must name at least one module")
    out = _out_dir(cfg, args)
    cap = _bounds(cfg)["max_module_dim"]
    for k, m in enumerate(raw):
        if isinstance(m, dict) and "character" in m:
            try:
                ch = {tuple(int(x) for x in w): _int(c, f"modules[{k}].character") for w, c in m["character"]}
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"field 'modules[{k}].character' must be [[weight, multiplicity], ...]") from exc
            name = f"character{k}"
            title = f"character {k}"
        else:
            (mm,) = expand_modules(alg, [m])
            w = mm["weight"]
            if alg.root_system.weyl_dimension(w) > cap:
                raise ConfigError(f"module {w} has dimension above max_module_dim {cap}")
            ch = dict(weight_system(alg.root_system, w))
            name = "weight_" + "_".join(str(x) for x in w)
            title = "highest weight " + weight_key(w)
        spec = diagram_spec(alg, ch)
        if spec.warning:
            log(f"warning: {spec.warning}")
        else:
            _write(out / f"{name}.svg", render_svg(alg, spec, title))
        text = render_ascii(alg, spec, title)
        _write(out / f"{name}.txt", text)
        log(text.rstrip("\n"))
    return EXIT_OK


RUNNERS = {"check": run_check, "classify": run_classify, "prolong": run_prolong, "render": run_render}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tanaka-forge", description="Levi-Tanaka extensions of graded CR algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", required=True, help="job file (JSON, schema 1)")
    p.add_argument("--out", help="output directory (default: config output.dir or .)")
    p.add_argument("--structure", type=int, help="structure index when a module has several")
    p.add_argument("--bound", type=int, help="classify: maximal coordinate sum of highest weights")
    p.add_argument("--max-degree", type=int, help="prolong: last degree to compute")
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)

    def log(msg):
        print(msg)

    try:
        cfg = load_config(args.config)
        cmd = cfg.get("command")
        if cmd is not None and cmd != args.command:
            raise ConfigError(f"field 'command' is {cmd!r} but {args.command!r} was requested")
        return RUNNERS[args.command](cfg, args, log)
    except (ConfigError, Ambiguous, WeightError, ExtensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoneFound as exc:
        print(f"none: {exc}", file=sys.stderr)
        return EXIT_NONE
    except ConsistencyError as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
