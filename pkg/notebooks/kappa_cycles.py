"""kappa of cycles: enumeration next to the closed form.

Run:  python3 notebooks/kappa_cycles.py
(4, 3) has no AFE cover at all, because the only 3-part pmd of C4 keeps an
opposite pair of edges, and that pair induces the whole 4-cycle.
"""

from pmdkit.covers import kappa, kappa_cycle_closed_form
from pmdkit.errors import NoCover
from pmdkit.graphs import cycle

print(" m  p  n  enum  formula")
for m in range(3, 7):
    for p in range(3, m + 1):
        for n in (1, 2, 3):
            try:
                got = kappa(cycle(m), n, p)
            except NoCover:
                got = "inf"
            want = "-" if (m, p) == (4, 3) else kappa_cycle_closed_form(m, n, p)
            print(f"{m:2} {p:2} {n:2} {got!s:>5} {want!s:>8}")
