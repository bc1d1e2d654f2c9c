"""Tanaka prolongations of small Levi-Tanaka extensions.

sl(2,C) acting on the anti-Hermitian 2x2 matrices prolongs to su(2,2).
The family sl(2,C) + l^n is semisimple for n = 2, 3 and proper after that.
"""

from tanaka_forge import assemble_m, check_prolongation, structure_report, tanaka_prolongation
from tanaka_forge.exact import format_rational as q
from tanaka_forge.presets import sl2_anti_hermitian, sl2_family


def prolong(ext):
    pr = tanaka_prolongation(assemble_m(ext))
    check_prolongation(pr)
    return pr, structure_report(pr, ext)


pr, rep = prolong(sl2_anti_hermitian())
print("sl(2,C) + anti-Hermitian matrices")
print("   degrees", dict(sorted(rep.dims.items())), "total", rep.total_dim)
print("   ", rep.classification, "; ad(pi) spectrum", rep.spectrum, "; k", [q(k) for k in rep.k_values])

print("\nsl(2,C) + l^n")
for n in range(2, 6):
    pr, rep = prolong(sl2_family(n))
    print(f"   n={n}: dim {rep.total_dim:>2}  {rep.classification:<10} k = {q(rep.k_values[0]):<4} "
          f"radical {rep.radical_dim:>2}  nilpotent {rep.nilpotent_dim:>2}")

# n = 3 is so(5,C): compare with B2 graded by its principal element
print("\nl^3 prolongation degrees:", dict(sorted(prolong(sl2_family(3))[1].dims.items())))
