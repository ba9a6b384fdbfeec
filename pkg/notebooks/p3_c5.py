"""A 4-part decomposition of P3 x C5, with exact certificates.

Run:  python3 notebooks/p3_c5.py
Max degree is 4, so 4 parts is optimal.  The certificates give rational
vertex weights that are positive on exactly the edges of each part, taken in
the residual graph where that part is used.
"""

from pmdkit.graphs import cartesian_product, cycle, path
from pmdkit.io import display_labels
from pmdkit.solver import pmd_exact, verify_pmd

g = cartesian_product(path(3), cycle(5))
k, d = pmd_exact(g)
d = d.with_certificates()
lab = display_labels(g)
print(f"pmd = {k}, verified: {verify_pmd(g, d).ok}")
for i, (part, cert) in enumerate(zip(d.parts, d.certificates), 1):
    edges = ", ".join(f"{lab[u]}-{lab[v]}" for u, v in part)
    print(f"part {i}: {edges}")
    print("   weights:", " ".join(str(w) for w in cert.weights))
