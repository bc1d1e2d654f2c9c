"""JSON reports.  Rationals are "p/q" strings, keys are sorted, output ends in a newline."""

from __future__ import annotations

import json

from .exact import format_rational
from .graded import GradedCRAlgebra, Structure
from .structure import StructureReport


def _q(x) -> str:
    return format_rational(x)


def _w(w) -> list[int]:
    return [int(x) for x in w]


def weight_key(w) -> str:
    return ",".join(str(int(x)) for x in w)


def algebra_json(alg: GradedCRAlgebra) -> dict:
    return {
        "type": alg.label or "cartan",
        "E": [_q(x) for x in alg.E],
        "J": None if alg.J is None else [_q(x) for x in alg.J],
    }


def structure_json(st: Structure) -> dict:
    d = st.diagram
    return {
        "shift": _q(st.shift),
        "degrees": {weight_key(w): p for w, p in d.degrees.items()},
        "partition": {"p10": [_w(w) for w in st.partition.p10], "p01": [_w(w) for w in st.partition.p01]},
        "k": _q(st.k),
    }


def admissibility_report(alg: GradedCRAlgebra, weight, structures) -> dict:
    return {
        "algebra": algebra_json(alg),
        "weight": _w(weight),
        "structures": [structure_json(st) for st in structures],
    }


def prolongation_report(rep: StructureReport, truncated: bool = False, labels=None) -> dict:
    out = {
        "degrees": {str(p): d for p, d in sorted(rep.dims.items())},
        "total_dim": rep.total_dim,
        "field": "Q",
        "pi": [_q(x) for x in rep.pi],
        "J_element": None if rep.J_element is None else [_q(x) for x in rep.J_element],
        "k_values": [_q(x) for x in rep.k_values],
        "radical_dim": rep.radical_dim,
        "nilpotent_dim": rep.nilpotent_dim,
        "semisimple_ideal_dim": rep.semisimple_ideal_dim,
        "classification": rep.classification,
        "complex": rep.complex,
        "complex_dims": None if rep.complex_dims is None else {str(p): d for p, d in sorted(rep.complex_dims.items())},
        "ad_pi_spectrum": {str(h): d for h, d in rep.spectrum.items()},
        "shape": dict(rep.shape),
        "truncated": truncated,
    }
    if labels is not None:
        out["basis"] = list(labels)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
