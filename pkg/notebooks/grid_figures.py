"""Render grid decompositions as Graphviz DOT files.

Run:  python3 notebooks/grid_figures.py [outdir]
Each file colours the edges by part, with 1-based part numbers on the edges.
"""

import sys
from pathlib import Path

from pmdkit.grids import CW, CmCn, PmCn, construct_grid
from pmdkit.io import to_dot

out = Path(sys.argv[1] if len(sys.argv) > 1 else "notebooks/out")
out.mkdir(parents=True, exist_ok=True)

for kind in (PmCn(3, 7), PmCn(3, 8), CW(2, 6), CW(3, 6), CmCn(4, 4), CmCn(5, 4), CmCn(5, 5)):
    d = construct_grid(kind)
    name = f"{type(kind).__name__}_{kind.m}x{kind.n}"
    (out / f"{name}.dot").write_text(to_dot(d.graph, d.parts, name=name))
    print(f"{name}: {d.size} parts -> {out / name}.dot")
