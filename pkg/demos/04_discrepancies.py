"""Two examples where the computed prolongation is larger than expected.

Two copies of the anti-Hermitian module: the copies are isomorphic as graded
CR modules, so an sl(2,R) rotating them appears in degree 0.

sl(3,C) + C^3{-3,-2,-1} + (C^3)*{0,-1,-2}: the negative part s_- + C^3 is the
negative part of sl(4,C), which then sits inside the prolongation.
"""

from tanaka_forge import assemble_m, structure_report, tanaka_prolongation
from tanaka_forge.exact import format_rational as q
from tanaka_forge.presets import sl2_anti_hermitian, sl3_reducible

for name, ext in (("two copies", sl2_anti_hermitian(2)), ("reducible sl3", sl3_reducible())):
    pr = tanaka_prolongation(assemble_m(ext))
    rep = structure_report(pr, ext)
    print(name)
    print("   degrees", dict(sorted(rep.dims.items())), "total", rep.total_dim, rep.classification)
    print("   shape", rep.shape, "k", [q(k) for k in rep.k_values])
    print("   Levi factor dim", rep.total_dim - rep.radical_dim, " radical", rep.radical_dim,
          " nilpotent", rep.nilpotent_dim)
