"""Exact toolkit for Levi-Tanaka extensions of semisimple graded CR algebras.

Layers, bottom up:

- ``exact``: rationals, Gaussian rationals, kernels and spans over Q
- ``roots`` / ``lie`` / ``modules``: root systems, structure-constant tables,
  Chevalley bases, Killing form, radical, explicit irreducible modules
- ``graded``: gradings, CR functionals, weight diagrams and the admissibility
  conditions for a CR structure on a module
- ``extension``: realified abelian extensions and the module-level oracle
- ``prolong`` / ``structure``: Tanaka prolongation and its structure report
- ``render`` / ``reports`` / ``cli``: SVG, JSON and the command line
"""

from .exact import ExactnessError, GaussianRational, format_rational, kernel, parse_rational, solve, span_basis
from .extension import (
    Extension,
    ExtensionError,
    ModulePart,
    abelian_extension,
    complex_extension,
    module_level_validate,
    oracle_admissible,
    solve_cr_structure,
    structure_extension,
    with_cr_matrix,
)
from .graded import (
    CRError,
    CRPartition,
    GradedCRAlgebra,
    GradingError,
    Structure,
    WeightDiagram,
    admissible_structures,
    attach_cr,
    build_partition_iv,
    check_condition_ii,
    check_condition_iii,
    classify,
    diagram_for,
    enumerate_shifts,
    grade_algebra,
    real_form_admissible,
    swap_involution,
)
from .lie import (
    ChevalleyAlgebra,
    ConsistencyError,
    LieTable,
    chevalley_constants,
    derived_subalgebra,
    from_json,
    jacobi_violations,
    killing_form,
    maximal_semisimple_ideal,
    radical,
    real_form_fixed_points,
    realify,
    signature,
    table_from_function,
    to_json,
)
from .modules import ModuleRealization, realize_module, representation_violations
from .prolong import GradedNilpotent, Prolongation, assemble_m, check_prolongation, tanaka_prolongation
from .roots import Character, RootSystem, build_root_system, cartan_matrix, decompose_character, weight_system
from .structure import StructureReport, structure_report

__version__ = "0.1.0"
