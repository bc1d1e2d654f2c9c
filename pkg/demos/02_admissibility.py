"""Which sl(3,C) modules carry a graded CR structure.

The grading is E = diag(1,0,-1) and J = diag(i/3,-2i/3,i/3), written on
simple roots as e = (1,1), j = (1,-1).  For each weight we list every shift
that puts nonzero weights in degrees -1 and -2, and say which conditions hold.
"""

from tanaka_forge import (
    CRPartition,
    admissible_structures,
    build_partition_iv,
    check_condition_ii,
    check_condition_iii,
    classify,
    enumerate_shifts,
    weight_system,
)
from tanaka_forge.exact import format_rational as q
from tanaka_forge.presets import sl3_algebra

alg, _ = sl3_algebra()


def explain(w):
    print(f"Gamma{w}:")
    for d in enumerate_shifts(alg, weight_system(alg.root_system, w), w):
        k = check_condition_ii(d)
        bad = check_condition_iii(d)
        part = build_partition_iv(d)
        if isinstance(part, CRPartition):
            print(f"   shift {q(d.shift)}: admissible, k = {q(k)}, P10 = {list(part.p10)}, P01 = {list(part.p01)}")
        else:
            print(f"   shift {q(d.shift)}: rejected, {len(bad)} forbidden configurations, partition fails at {part.weight}")


for w in ((1, 0), (1, 1), (2, 1), (3, 0)):
    explain(w)

# the scan up to k1 + k2 <= 4
print("\nadmissible weights with k1 + k2 <= 4:")
for row in classify(alg, 4):
    if row["structures"]:
        shifts = [q(s.shift) for s in row["structures"]]
        print(f"   {row['weight']}  dim {row['dim']:>2}  shifts {shifts}")

# Gamma(3,0): the top line is the only one that can sit in degree -1
st, = admissible_structures(alg, (3, 0))
print("\nGamma(3,0) degree -1 weights:", st.diagram.P_p(-1))
