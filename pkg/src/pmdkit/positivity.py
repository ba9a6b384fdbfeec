"""Positive matchings: decision, witnesses in both directions, certificates.

A matching ``M`` of ``g`` is positive when some vertex weighting makes exactly
the edges of ``M`` have positive weight sum.  Equivalently the subgraph induced
on ``V(M)`` has no closed walk alternating between ``M`` and non-``M`` edges,
equivalently the edges of ``M`` can be listed so that each one is pendant in the
subgraph induced by itself and its predecessors.  ``check_positive`` returns
one of the two witnesses; ``weight_certificate`` turns a pendant order into
exact rational weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import NotAMatching, NotPositive
from .graphs import Edge, Graph, bits, norm_edge


@dataclass(frozen=True)
class PendantOrder:
    edges: tuple[Edge, ...]

    positive = True


@dataclass(frozen=True)
class AlternatingWalk:
    """Closed walk ``v0, v1, ..., v_2t = v0``; the edge ``v0 v1`` is a matching edge."""

    vertices: tuple[int, ...]

    positive = False

    def edges(self) -> list[Edge]:
        return [norm_edge(p) for p in zip(self.vertices, self.vertices[1:])]


PositivityWitness = PendantOrder | AlternatingWalk


@dataclass(frozen=True)
class WeightCertificate:
    weights: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"weights": {str(v): str(w) for v, w in enumerate(self.weights)}}

    @classmethod
    def from_json(cls, doc: dict) -> "WeightCertificate":
        items = sorted((int(k), Fraction(v)) for k, v in doc["weights"].items())
        return cls(tuple(w for _, w in items))


def as_matching(g: Graph, m: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    """Normalise ``m`` and check it is a matching of ``g``."""
    edges = sorted({norm_edge(e) for e in m})
    used = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise NotAMatching(f"{(u, v)} is not an edge of the graph")
        if u in used or v in used:
            raise NotAMatching(f"edges share vertex in {(u, v)}")
        used.update((u, v))
    return tuple(edges)


def _eliminate(adj: Sequence[int], edges: Sequence[Edge]) -> tuple[list[Edge], list[Edge]]:
    """Peel pendant edges; returns (peeled in removal order, stuck remainder)."""
    left = list(edges)
    mask = 0
    for u, v in left:
        mask |= 1 << u | 1 << v
    peeled = []
    while left:
        pick = -1
        for i in range(len(left) - 1, -1, -1):
            u, v = left[i]
            if (adj[u] & mask).bit_count() == 1 or (adj[v] & mask).bit_count() == 1:
                pick = i
                break
        if pick < 0:
            break
        u, v = left.pop(pick)
        mask &= ~(1 << u | 1 << v)
        peeled.append((u, v))
    return peeled, left


def is_positive_adj(adj: Sequence[int], edges: Sequence[Edge]) -> bool:
    """Fast positivity test against neighbourhood bitmasks ``adj``."""
    mask = 0
    for u, v in edges:
        mask |= 1 << u | 1 << v
    left = list(edges)
    while left:
        for i, (u, v) in enumerate(left):
            if (adj[u] & mask).bit_count() == 1 or (adj[v] & mask).bit_count() == 1:
                mask &= ~(1 << u | 1 << v)
                left[i] = left[-1]
                left.pop()
                break
        else:
            return False
    return True


def is_positive(g: Graph, m: Iterable[Iterable[int]]) -> bool:
    return is_positive_adj(g.adj, as_matching(g, m))


def check_positive(g: Graph, m: Iterable[Iterable[int]]) -> PositivityWitness:
    """Pendant order when ``m`` is positive in ``g``, else an alternating closed walk."""
    edges = as_matching(g, m)
    peeled, stuck = _eliminate(g.adj, edges)
    if not stuck:
        return PendantOrder(tuple(reversed(peeled)))
    return AlternatingWalk(_alternating_walk(g.adj, stuck))


def _alternating_walk(adj: Sequence[int], stuck: Sequence[Edge]) -> tuple[int, ...]:
    # every vertex of the stuck part has induced degree >= 2, so the walk never dead-ends
    partner = {}
    mask = 0
    for u, v in stuck:
        partner[u], partner[v] = v, u
        mask |= 1 << u | 1 << v
    start = min(partner)
    walk = [start]
    seen = {start: 0}
    v = start
    while True:
        w = partner[v]
        others = adj[w] & mask & ~(1 << v)
        x = (others & -others).bit_length() - 1
        walk += [w, x]
        if x in seen:
            return tuple(walk[seen[x]:])
        seen[x] = len(walk) - 1
        v = x


def find_alternating_walk(g: Graph, m: Iterable[Iterable[int]]) -> AlternatingWalk | None:
    """Search ``g[V(m)]`` directly for a closed alternating walk.

    Independent of pendant peeling: a state is ``(vertex, kind of next edge)``
    and a closed walk is a directed cycle of the state graph, found by DFS.
    """
    edges = as_matching(g, m)
    partner = {}
    for u, v in edges:
        partner[u], partner[v] = v, u
    verts = sorted(partner)

    def succ(state):
        v, matched = state
        if matched:
            return [(partner[v], False)]
        return [(w, True) for w in g.neighbors(v) if w in partner and w != partner[v]]

    colour: dict = {}
    for root in ((v, True) for v in verts):
        if root in colour:
            continue
        stack = [(root, iter(succ(root)))]
        path = [root]
        colour[root] = 1
        while stack:
            state, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[state] = 2
                stack.pop()
                path.pop()
                continue
            if colour.get(nxt) == 1:
                cyc = path[path.index(nxt):]
                if not cyc[0][1]:
                    cyc = cyc[1:] + cyc[:1]
                vs = [x for x, _ in cyc]
                return AlternatingWalk(tuple(vs + [vs[0]]))
            if nxt not in colour:
                colour[nxt] = 1
                stack.append((nxt, iter(succ(nxt))))
                path.append(nxt)
    return None


def replay_pendant_order(g: Graph, order: Sequence[Iterable[int]]) -> bool:
    """Check each edge is pendant in the subgraph induced by it and its predecessors."""
    mask = 0
    for e in order:
        u, v = norm_edge(e)
        if not g.has_edge(u, v) or mask >> u & 1 or mask >> v & 1:
            return False
        mask |= 1 << u | 1 << v
        if (g.adj[u] & mask).bit_count() != 1 and (g.adj[v] & mask).bit_count() != 1:
            return False
    return True


def replay_walk(g: Graph, m: Iterable[Iterable[int]], walk: AlternatingWalk) -> bool:
    """Check ``walk`` is a closed alternating walk inside ``g[V(m)]``."""
    edges = set(as_matching(g, m))
    verts = {x for e in edges for x in e}
    vs = walk.vertices
    if len(vs) < 5 or vs[0] != vs[-1] or (len(vs) - 1) % 2:
        return False
    for i, (a, b) in enumerate(zip(vs, vs[1:])):
        if a not in verts or b not in verts or not g.has_edge(a, b):
            return False
        in_m = norm_edge((a, b)) in edges
        if in_m != (i % 2 == 0):
            return False
    return True


def weight_certificate(g: Graph, m: Iterable[Iterable[int]]) -> WeightCertificate:
    """Exact rational weights positive exactly on the edges of ``m``.

    Edges are added in pendant order.  The pendant end of each new edge gets a
    large positive weight and its partner the matching negative weight, large
    enough to make every earlier edge at the partner negative.
    """
    wit = check_positive(g, m)
    if not isinstance(wit, PendantOrder):
        raise NotPositive("matching has an alternating closed walk")
    w: dict[int, Fraction] = {}
    placed = 0
    top = Fraction(0)
    for u, v in wit.edges:
        placed |= 1 << u | 1 << v
        if (g.adj[u] & placed).bit_count() != 1:
            u, v = v, u
        big = top + 1
        w[v] = -big
        w[u] = big + 1
        top = max(top, big + 1)
    outside = -(2 * top + 1)
    cert = WeightCertificate(tuple(w.get(x, outside) for x in range(g.n)))
    assert verify_certificate(g, wit.edges, cert)
    return cert


def verify_certificate(g: Graph, m: Iterable[Iterable[int]], cert: WeightCertificate) -> bool:
    edges = {norm_edge(e) for e in m}
    w = cert.weights
    if len(w) != g.n:
        return False
    return all((Fraction(w[u]) + Fraction(w[v]) > 0) == ((u, v) in edges) for u, v in g.edges)


def enumerate_positive_matchings(g: Graph, min_size: int = 1, max_size: int | None = None) -> Iterator[tuple[Edge, ...]]:
    """Positive matchings of ``g`` with ``min_size <= |M| <= max_size``.

    Emitted in lexicographic order of the sorted edge lists.  Positivity is
    inherited by subsets, so non-positive prefixes are pruned.
    """
    if max_size is None:
        max_size = g.n // 2
    edges = g.edges
    adj = g.adj
    chosen: list[Edge] = []

    def rec(start: int, used: int):
        if len(chosen) >= min_size:
            yield tuple(chosen)
        if len(chosen) == max_size:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            if is_positive_adj(adj, chosen):
                yield from rec(i + 1, used | 1 << u | 1 << v)
            chosen.pop()

    yield from rec(0, 0)


def matchings(g: Graph, size: int) -> Iterator[tuple[Edge, ...]]:
    """All matchings (positive or not) of exactly ``size`` edges."""
    edges = g.edges
    chosen: list[Edge] = []

    def rec(start: int, used: int):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(edges) - (size - len(chosen)) + 1):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, used | 1 << u | 1 << v)
            chosen.pop()

    yield from rec(0, 0)


__all__ = [
    "AlternatingWalk",
    "PendantOrder",
    "WeightCertificate",
    "as_matching",
    "bits",
    "check_positive",
    "enumerate_positive_matchings",
    "find_alternating_walk",
    "is_positive",
    "is_positive_adj",
    "matchings",
    "replay_pendant_order",
    "replay_walk",
    "verify_certificate",
    "weight_certificate",
]
