"""The restricted rho maximum on K3*(K1 u (K3*(5K1 u K3))).

Run:  python3 notebooks/remark_graph.py
Recognise the graph, normalise the family, then print the value at the core
X', at the whole vertex set and at the best X that contains the core.
"""

from pmdkit.covers import normalize_npb, npb_rho_report, recognize_npb, rho
from pmdkit.reproduce import remark_graph

g = remark_graph()
print(f"graph: {g.n} vertices, {g.m} edges")
fam = normalize_npb(recognize_npb(g).family)
print(f"depth {fam.depth}, parts {fam.part_size}")
rep = npb_rho_report(fam)
print(f"core X': {len(rep.core)} vertices, value {rep.at_core}")
print(f"V: value {rep.at_all}")
print(f"max over X containing X': {rep.value} at |X| = {len(rep.argmax)}")
print(f"unrestricted rho: {rho(g)}")
