"""Decompositions of Cartesian products built from decompositions of the factors.

Vertex ``(a, b)`` of ``g1 x g2`` is ``a * |V(g2)| + b``.  A *vertical* edge
``ab x u`` joins ``(a, u)`` and ``(b, u)`` for an edge ``ab`` of ``g1``; a
*horizontal* edge ``u x vw`` joins ``(u, v)`` and ``(u, w)``.  Every function
returns a :class:`Decomposition` that has already been checked with
:func:`verify_pmd`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisViolated, InvalidCover, InvalidInput, NotATree
from .graphs import (
    Coloring,
    Edge,
    Graph,
    box_power,
    cartesian_product,
    forest_edge_coloring,
    norm_edge,
    proper_coloring,
)
from .latin import MultisetPartition, build_glr, cyclic_latin_rectangle, glr_by_edge_coloring
from .solver import Decomposition, pmd_exact, verify_pmd

Parts = list[list[Edge]]


def vertical(n2: int, matching: Sequence[Edge], cls: Sequence[int]) -> list[Edge]:
    """``M x' C``: copies of the ``g1``-edges of ``matching`` at the ``g2``-vertices in ``cls``."""
    return [norm_edge((a * n2 + u, b * n2 + u)) for a, b in matching for u in cls]


def horizontal(n1: int, n2: int, matching: Sequence[Edge]) -> list[Edge]:
    """``V(g1) x M``."""
    return [norm_edge((a * n2 + v, a * n2 + w)) for a in range(n1) for v, w in matching]


def _finish(g: Graph, parts: Parts) -> Decomposition:
    d = Decomposition(g, tuple(tuple(p) for p in parts if p))
    rep = verify_pmd(g, d)
    if not rep.ok:  # pragma: no cover - every construction is proved
        raise AssertionError(f"construction failed verification: {rep.problems[:3]}")
    return d


def _pmd_parts(g: Graph, d: Decomposition | None) -> Parts:
    if d is None:
        return [list(p) for p in pmd_exact(g)[1].parts] if g.m else []
    if not verify_pmd(g, d).ok:
        raise InvalidInput("given decomposition does not verify")
    return [list(p) for p in d.parts]


def _classes(g: Graph, col: Coloring | None) -> list[list[int]]:
    col = col or proper_coloring(g)
    if not col.is_proper(g):
        raise InvalidInput("colouring is not proper")
    return col.classes()


# -------------------------------------------------------------- basic product


def product_pmd_basic(
    g1: Graph,
    g2: Graph,
    pmd1: Decomposition | None = None,
    col2: Coloring | None = None,
    pmd2: Decomposition | None = None,
) -> Decomposition:
    """``p1 * chi2 + p2`` parts: ``M_s x C_t`` for every colour ``t`` and part ``s``, then ``V(g1) x M``."""
    m1 = _pmd_parts(g1, pmd1)
    m2 = _pmd_parts(g2, pmd2)
    classes = _classes(g2, col2)
    parts = [vertical(g2.n, ms, ct) for ct in classes for ms in m1]
    parts += [horizontal(g1.n, g2.n, m) for m in m2]
    return _finish(cartesian_product(g1, g2), parts)


# ------------------------------------------ forest decomposition, first bound


def _forest_vertical_parts(n2: int, forest: Sequence[Edge], classes: list[list[int]]) -> Parts:
    ms = forest_edge_coloring(Graph(0), forest) if forest else []
    if not ms:
        return []
    rect = cyclic_latin_rectangle(len(ms), len(classes))
    size = max(len(ms), len(classes))
    out: Parts = [[] for _ in range(size)]
    for s, ms_s in enumerate(ms):
        for t, ct in enumerate(classes):
            out[rect[s][t] - 1] += vertical(n2, ms_s, ct)
    return out


def tree_box_construction(
    t: Graph, g2: Graph, col2: Coloring | None = None, pmd2: Decomposition | None = None
) -> Decomposition:
    """``max(Delta(t), chi(g2)) + p2`` parts via a cyclic Latin rectangle."""
    if not t.is_tree():
        raise NotATree("first factor must be a tree")
    classes = _classes(g2, col2)
    parts = _forest_vertical_parts(g2.n, t.edges, classes)
    parts += [horizontal(t.n, g2.n, m) for m in _pmd_parts(g2, pmd2)]
    return _finish(cartesian_product(t, g2), parts)


@dataclass(frozen=True)
class ForestDecomposition:
    graph: Graph
    forests: tuple[tuple[Edge, ...], ...]

    def induced(self) -> list[list[Edge]]:
        """``F'_i``: the residual before ``F_i`` induced on ``V(F_i)``."""
        out = []
        residual = set(self.graph.edges)
        for f in self.forests:
            vs = {x for e in f for x in e}
            out.append(sorted(e for e in residual if e[0] in vs and e[1] in vs))
            residual -= set(f)
        return out

    def max_degrees(self) -> list[int]:
        return [_max_degree(f) for f in self.induced()]


def _max_degree(edges: Sequence[Edge]) -> int:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return max(deg.values(), default=0)


def _is_acyclic(edges: Sequence[Edge]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def is_forest_decomposition(fd: ForestDecomposition) -> bool:
    all_edges = [e for f in fd.forests for e in f]
    if sorted(all_edges) != list(fd.graph.edges):
        return False
    return all(_is_acyclic(f) for f in fd.forests) and all(_is_acyclic(f) for f in fd.induced())


def forest_decomposition(g: Graph) -> ForestDecomposition:
    """Greedy peeling of vertex sets whose induced residual subgraph is a forest."""
    residual = set(g.edges)
    forests = []
    while residual:
        first = min(residual)
        chosen = set(first)
        inside = [first]
        for v in range(g.n):
            if v in chosen or not any(v in e for e in residual):
                continue
            extra = [e for e in residual if (e[0] == v and e[1] in chosen) or (e[1] == v and e[0] in chosen)]
            if extra and _is_acyclic(inside + extra):
                chosen.add(v)
                inside += extra
        forests.append(tuple(sorted(inside)))
        residual -= set(inside)
    return ForestDecomposition(g, tuple(forests))


def forest_bound_1(g1: Graph, g2: Graph, col2: Coloring | None = None, pmd2: Decomposition | None = None) -> Decomposition:
    """Vertical rounds per forest, then one horizontal pass.

    Size ``sum max(Delta(F'_i), chi2) + p2``, never more than the bound
    ``n * p2 + sum max(Delta(F'_i), chi2)``.
    """
    classes = _classes(g2, col2)
    fd = forest_decomposition(g1)
    parts: Parts = []
    for f in fd.induced():
        parts += _forest_vertical_parts(g2.n, f, classes)
    parts += [horizontal(g1.n, g2.n, m) for m in _pmd_parts(g2, pmd2)]
    return _finish(cartesian_product(g1, g2), parts)


def forest_bound_1_value(g1: Graph, g2: Graph) -> int:
    """The bound ``n * pmd(g2) + sum max(Delta(F'_i), chi(g2))`` for the greedy forests."""
    fd = forest_decomposition(g1)
    chi = proper_coloring(g2).num_colors
    p2 = pmd_exact(g2)[0] if g2.m else 0
    return len(fd.forests) * p2 + sum(max(d, chi) for d in fd.max_degrees())


# ------------------------------------------------------ acyclic-family covers


def is_afe(g: Graph, family: Sequence[Sequence[Edge]], pmd: Sequence[Sequence[Edge]] | None = None) -> bool:
    """Is the union of the induced subgraphs ``g[V(E)]`` acyclic?

    With ``pmd`` given, each member must be a part of it and is induced in the
    residual graph just before that part instead of in ``g``.
    """
    union: set[Edge] = set()
    residual_of: dict[tuple[Edge, ...], set[Edge]] = {}
    if pmd is not None:
        left = set(g.edges)
        for p in pmd:
            key = tuple(sorted(norm_edge(e) for e in p))
            residual_of[key] = set(left)
            left -= set(key)
    for member in family:
        key = tuple(sorted(norm_edge(e) for e in member))
        if pmd is not None:
            if key not in residual_of:
                raise InvalidInput("family member is not a part of the pmd")
            host = residual_of[key]
        else:
            host = set(g.edges)
        vs = {x for e in key for x in e}
        union |= {e for e in host if e[0] in vs and e[1] in vs}
    return _is_acyclic(sorted(union))


def glr_for_cover(p1: int, n: int, cover: Sequence[Sequence[int]]) -> list[list[int]]:
    """Generalized ``p1 x n`` rectangle; symbol ``k`` sits in the rows ``cover[k-1]`` (0-based indices).

    Uses the Latin-rectangle induction when ``p1 <= n`` and an edge colouring
    otherwise; needs every subfamily to have at most ``n`` members.
    """
    part = MultisetPartition(p1, n, tuple(frozenset(h + 1 for h in c) for c in cover))
    if p1 <= n:
        return build_glr(part)
    if max(len(c) for c in cover) > n:
        raise HypothesisViolated(f"a subfamily has more than {n} members and p1={p1} > {n}")
    return glr_by_edge_coloring(part)


def trim_cover(cover: Sequence[Sequence[int]], p1: int, n: int) -> list[list[int]]:
    """Drop surplus occurrences (latest first) so every index is covered exactly ``n`` times."""
    count = [0] * p1
    for c in cover:
        for h in set(c):
            if not 0 <= h < p1:
                raise InvalidCover(f"index {h} is not a part")
            count[h] += 1
    if min(count, default=n) < n:
        raise InvalidCover(f"part {count.index(min(count)) + 1} is covered fewer than {n} times")
    out = [sorted(set(c)) for c in cover]
    for c in reversed(out):
        for h in list(c):
            if count[h] > n:
                c.remove(h)
                count[h] -= 1
    return [c for c in out if c]


def _afe_parts(n2: int, m1: Parts, classes: list[list[int]], cover: list[list[int]]) -> Parts:
    rect = glr_for_cover(len(m1), len(classes), cover)
    out: Parts = [[] for _ in cover]
    for h, row in enumerate(rect):
        for t, k in enumerate(row):
            out[k - 1] += vertical(n2, m1[h], classes[t])
    return out


def afe_cover_construction(
    g1: Graph,
    g2: Graph,
    pmd1: Decomposition,
    col2: Coloring | None,
    cover: Sequence[Sequence[int]],
    pmd2: Decomposition | None = None,
) -> Decomposition:
    """``U_k`` for every subfamily of an AFE cover of ``chi2 * E(g1)``, then the ``g2`` parts.

    ``cover`` lists subfamilies as 0-based indices into ``pmd1.parts``.  The
    rectangle exists whenever no subfamily has more than ``chi2`` members,
    which ``p1 <= chi2`` guarantees; other inputs raise
    :class:`HypothesisViolated`.
    """
    m1 = _pmd_parts(g1, pmd1)
    classes = _classes(g2, col2)
    chi2 = len(classes)
    for c in cover:
        if not is_afe(g1, [m1[h] for h in c]):
            raise InvalidCover(f"subfamily {sorted(c)} is not acyclic")
    exact = trim_cover(cover, len(m1), chi2)
    if len(m1) > chi2 and max(len(c) for c in exact) > chi2:
        raise HypothesisViolated(f"p1={len(m1)} > chi2={chi2} and a subfamily has more than {chi2} members")
    parts = _afe_parts(g2.n, m1, classes, exact)
    parts += [horizontal(g1.n, g2.n, m) for m in _pmd_parts(g2, pmd2)]
    return _finish(cartesian_product(g1, g2), parts)


# ----------------------------------------- forest decomposition, second bound


def split_coloring(g: Graph, k: int, col: Coloring | None = None) -> list[list[int]]:
    """A proper colouring with exactly ``k`` nonempty classes (split large classes)."""
    classes = _classes(g, col)
    if k < len(classes) or k > g.n:
        raise HypothesisViolated(f"cannot have {k} nonempty colour classes on {g.n} vertices")
    while len(classes) < k:
        big = max(range(len(classes)), key=lambda i: (len(classes[i]), -i))
        cls = classes[big]
        classes[big] = cls[:-1]
        classes.append(cls[-1:])
    return classes


def forest_bound_2(g1: Graph, g2: Graph, col2: Coloring | None = None, pmd2: Decomposition | None = None) -> Decomposition:
    """``n * max(sum Delta(F'_i), chi2) + p2`` parts.

    The pmd of ``g1`` lists the edge colourings of ``F'_1, F'_2, ...`` in
    turn; each round's matchings form one subfamily, repeated ``chi2`` times.
    Those subfamilies are acyclic relative to the residual graphs, and the
    ``U_k`` are emitted round by round so each is positive when it is used.
    """
    fd = forest_decomposition(g1)
    rounds = [forest_edge_coloring(Graph(0), f) for f in fd.induced()]
    total = sum(len(r) for r in rounds)
    base = proper_coloring(g2).num_colors if col2 is None else col2.num_colors
    chi2 = max(total, base)
    if total > g2.n:
        raise HypothesisViolated(f"sum of Delta(F'_i) = {total} exceeds |V(g2)| = {g2.n}")
    classes = split_coloring(g2, chi2, col2)
    m1: Parts = [list(m) for r in rounds for m in r]
    cover: list[list[int]] = []
    start = 0
    for r in rounds:
        cover += [list(range(start, start + len(r)))] * chi2
        start += len(r)
    parts = _afe_parts(g2.n, m1, classes, cover)
    parts += [horizontal(g1.n, g2.n, m) for m in _pmd_parts(g2, pmd2)]
    return _finish(cartesian_product(g1, g2), parts)


def forest_bound_2_value(g1: Graph, g2: Graph) -> int:
    fd = forest_decomposition(g1)
    total = sum(fd.max_degrees())
    chi = proper_coloring(g2).num_colors
    p2 = pmd_exact(g2)[0] if g2.m else 0
    return p2 + len(fd.forests) * max(total, chi)


# -------------------------------------------------------------- tree products


def tree_product_value(trees: Sequence[Graph]) -> int:
    """``Delta(T_1 x ... x T_n) + m - [m != 0]`` with ``m`` the number of ``K_2`` factors."""
    delta = sum(t.max_degree() for t in trees)
    m = sum(1 for t in trees if t.n == 2 and t.m == 1)
    return delta + m - (1 if m else 0)


def construct_tree_product(trees: Sequence[Graph]) -> Decomposition:
    """Decomposition of the box product of trees with ``tree_product_value`` parts.

    Factors are reordered so a ``K_2`` (if any) comes last; then each factor
    in front is added with the Latin-rectangle construction.
    """
    trees = list(trees)
    for t in trees:
        if not t.is_tree():
            raise NotATree("every factor must be a tree")
    if not trees:
        raise InvalidInput("need at least one tree")
    product = box_power(trees)
    order = sorted(range(len(trees)), key=lambda i: (trees[i].n == 2, i))
    sub = [trees[i] for i in order if trees[i].n > 1]
    if not sub:
        return Decomposition(product, ())
    current = Graph(sub[-1].n, sub[-1].edges)
    parts: Parts = forest_edge_coloring(current)
    for t in reversed(sub[:-1]):
        d = Decomposition(current, tuple(tuple(p) for p in parts))
        classes = _classes(current, None)
        new = _forest_vertical_parts(current.n, t.edges, classes)
        new += [horizontal(t.n, current.n, m) for m in d.parts]
        current = cartesian_product(t, current)
        parts = new
    # map vertices from the reordered product back to the given factor order
    sizes = [t.n for t in trees]
    kept = [i for i in order if trees[i].n > 1]

    def back(x: int) -> int:
        coords = {}
        for i in reversed(kept):
            coords[i] = x % trees[i].n
            x //= trees[i].n
        y = 0
        for i, s in enumerate(sizes):
            y = y * s + coords.get(i, 0)
        return y

    mapped = [[norm_edge((back(u), back(v))) for u, v in p] for p in parts]
    return _finish(product, mapped)


# grid constructions live in their own module; re-exported for convenience
from .grids import CW, CmCn, PmCn, TreeProduct, construct_grid  # noqa: E402

__all__ = [
    "CW",
    "CmCn",
    "ForestDecomposition",
    "PmCn",
    "TreeProduct",
    "afe_cover_construction",
    "construct_grid",
    "construct_tree_product",
    "forest_bound_1",
    "forest_bound_1_value",
    "forest_bound_2",
    "forest_bound_2_value",
    "forest_decomposition",
    "glr_for_cover",
    "horizontal",
    "is_afe",
    "is_forest_decomposition",
    "product_pmd_basic",
    "split_coloring",
    "tree_box_construction",
    "tree_product_value",
    "trim_cover",
    "vertical",
]
