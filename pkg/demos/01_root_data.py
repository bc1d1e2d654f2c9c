"""Root data, Chevalley tables and module characters.

Builds the Chevalley basis for a few Cartan types, checks Jacobi and the
Killing form, and compares Freudenthal multiplicities with the Weyl formula.
"""

from tanaka_forge import jacobi_violations, killing_form, signature, weight_system
from tanaka_forge.presets import chevalley

for label in ("A1", "A2", "B2", "G2"):
    ch = chevalley(label)
    rs = ch.root_system
    t = ch.table
    print(f"{label}: rank {rs.rank}, {len(rs.positive_roots)} positive roots, dim {t.dim}")
    print(f"   Jacobi violations: {len(jacobi_violations(t))}, Killing signature {signature(killing_form(t))}")

# weight multiplicities of the sl3 module with highest weight (2,1)
rs = chevalley("A2").root_system
chi = weight_system(rs, (2, 1))
print("\nGamma(2,1) of sl3:", rs.weyl_dimension((2, 1)), "dimensional")
for w in sorted(chi, key=lambda w: (-sum(w), w)):
    if chi[w] > 1:
        print(f"   weight {w} has multiplicity {chi[w]}")

# G2: zero weight once in the 7 dimensional module, twice in the adjoint
g2 = chevalley("G2").root_system
for w in ((1, 0), (0, 1)):
    print(f"G2 module {w}: dim {g2.weyl_dimension(w)}, zero weight multiplicity {weight_system(g2, w)[(0, 0)]}")
