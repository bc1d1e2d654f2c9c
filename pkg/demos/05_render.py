"""Weight diagrams for the sl(3,C) modules of the classification.

Writes SVG and text diagrams into the directory given on the command line
(default ./diagrams).  Marked lines are the ones that can be degree -1;
red segments show forbidden configurations.
"""

import sys
from pathlib import Path

from tanaka_forge.presets import sl3_algebra
from tanaka_forge.render import diagram_spec, render_ascii, render_svg
from tanaka_forge.roots import weight_system

out = Path(sys.argv[1] if len(sys.argv) > 1 else "diagrams")
out.mkdir(parents=True, exist_ok=True)
alg, _ = sl3_algebra()

for w in ((1, 0), (1, 1), (2, 0), (2, 1), (3, 0)):
    spec = diagram_spec(alg, weight_system(alg.root_system, w))
    name = "gamma_" + "_".join(map(str, w))
    (out / f"{name}.svg").write_text(render_svg(alg, spec, name))
    (out / f"{name}.txt").write_text(render_ascii(alg, spec, name))
    print(render_ascii(alg, spec, name))
print("written to", out)
