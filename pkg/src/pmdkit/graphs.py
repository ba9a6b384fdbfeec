"""Simple graphs, multigraphs and generators for the graph families used here.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v``; the edge tuple of a :class:`Graph` is sorted, so the
position of an edge in ``g.edges`` is a stable edge index.

Products use the labeling ``(i, j) -> i * |V2| + j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded, InvalidSpec

Edge = tuple[int, int]


def norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


def norm_edges(edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    return tuple(sorted({norm_edge(e) for e in edges}))


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph."""

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidSpec("vertex count must be non-negative")
        seen = set()
        for e in self.edges:
            u, v = norm_edge(e)
            if u == v:
                raise InvalidSpec(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidSpec(f"edge {e} out of range for n={self.n}")
            if (u, v) in seen:
                raise InvalidSpec(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.n:
                raise InvalidSpec("labels must have one entry per vertex")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], labels=None) -> "Graph":
        return cls(n, tuple(norm_edge(e) for e in edges), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as vertex bitmasks."""
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Indices of the edges at each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_subgraph(self, edges: Iterable[Iterable[int]]) -> "Graph":
        """Spanning subgraph with the given edges (all vertices kept)."""
        return Graph(self.n, norm_edges(edges), self.labels)

    def remove_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        drop = {norm_edge(e) for e in edges}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop), self.labels)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = None if self.labels is None else tuple(self.labels[v] for v in vs)
        return Graph(len(vs), tuple(edges), labels)

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        """Edges of ``self`` with both ends in ``vertices`` (original labels)."""
        vs = set(vertices)
        return [e for e in self.edges if e[0] in vs and e[1] in vs]

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.m == self.n - 1

    def bipartition(self) -> list[int] | None:
        """A 2-colouring (0/1 per vertex) or ``None`` when not bipartite."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in _bits(self.adj[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return side

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, tuple(norm_edge((perm[u], perm[v])) for u, v in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


bits = _bits


@dataclass(frozen=True)
class MultiGraph:
    """Loopless multigraph given by edge multiplicities."""

    n: int
    mult: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, k in dict(self.mult).items():
            u, v = norm_edge(e)
            if u == v:
                raise InvalidSpec("multigraphs here are loopless")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidSpec(f"edge {e} out of range")
            if int(k) < 1:
                raise InvalidSpec("multiplicities must be >= 1")
            clean[(u, v)] = clean.get((u, v), 0) + int(k)
        object.__setattr__(self, "mult", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.mult.items())))

    @property
    def edge_count(self) -> int:
        """Number of edge instances, parallel copies counted."""
        return sum(self.mult.values())

    def underlying(self) -> Graph:
        return Graph(self.n, tuple(self.mult))

    def instances(self) -> list[Edge]:
        return [e for e, k in self.mult.items() for _ in range(k)]


# ---------------------------------------------------------------- generators


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, tuple(norm_edge((i, (i + 1) % n)) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be >= 1")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, tuple((u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    return complete_bipartite(1, k)


def hypercube(n: int) -> Graph:
    """``Q_n`` as the Cayley graph of ``Z_2^n``; vertex ``x`` is a bitmask."""
    _need(n >= 1, "hypercube needs n >= 1")
    return Graph(1 << n, tuple((x, x | 1 << i) for x in range(1 << n) for i in range(n) if not x >> i & 1))


def circular_wall(m: int, n: int) -> Graph:
    """``P_m x C_n`` without the rungs ``(i,j)(i+1,j)`` for odd ``i+j`` (1-based)."""
    if m < 2 or n < 4 or n % 2:
        raise InvalidSpec("CircularWall needs m >= 2 and even n >= 4")
    g = cartesian_product(path(m), cycle(n))
    drop = [(i * n + j, (i + 1) * n + j) for i in range(m - 1) for j in range(n) if ((i + 1) + (j + 1)) % 2]
    return g.remove_edges(drop)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, tuple(edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    base = disjoint_union(g1, g2)
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph(base.n, base.edges + tuple(cross))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Box product with vertex ``(a, b)`` at index ``a * g2.n + b``."""
    n2 = g2.n
    edges = [(a * n2 + u, b * n2 + u) for a, b in g1.edges for u in range(n2)]
    edges += [(a * n2 + u, a * n2 + v) for a in range(g1.n) for u, v in g2.edges]
    l1 = g1.labels or tuple(str(i + 1) for i in range(g1.n))
    l2 = g2.labels or tuple(str(i + 1) for i in range(n2))
    labels = tuple(f"({x},{y})" for x in l1 for y in l2)
    return Graph(g1.n * n2, tuple(edges), labels)


def box_power(factors: Sequence[Graph]) -> Graph:
    out = factors[0]
    for f in factors[1:]:
        out = cartesian_product(out, f)
    return out


def multiply(g: Graph, n: int) -> MultiGraph:
    """The multigraph ``n*g``: every edge repeated ``n`` times."""
    if n < 1:
        raise InvalidSpec("multiplicity must be >= 1")
    return MultiGraph(g.n, {e: n for e in g.edges})


# ----------------------------------------------------------- NPB graphs


@dataclass(frozen=True)
class NPBFamily:
    """Part sizes ``|A_s|`` of a non-prefix binary graph, keyed by binary string."""

    depth: int
    part_size: Mapping[str, int]

    def __post_init__(self):
        if self.depth < 1:
            raise InvalidSpec("NPB depth must be >= 1")
        sizes = {}
        for s, k in dict(self.part_size).items():
            if not s or set(s) - {"0", "1"} or len(s) > self.depth:
                raise InvalidSpec(f"bad NPB index {s!r}")
            if int(k) < 0:
                raise InvalidSpec("part sizes must be >= 0")
            if k:
                sizes[s] = int(k)
        for s in _strings(self.depth - 1) if self.depth > 1 else [""]:
            a, b = sizes.get(s + "0", 0), sizes.get(s + "1", 0)
            if (a == 0) != (b == 0):
                raise InvalidSpec(f"sibling parts {s}0/{s}1 must be empty together")
        object.__setattr__(self, "part_size", dict(sorted(sizes.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def __hash__(self):
        return hash((self.depth, tuple(self.part_size.items())))

    def size(self, s: str) -> int:
        return self.part_size.get(s, 0)

    def strings(self) -> list[str]:
        return [s for k in range(1, self.depth + 1) for s in _strings(k)]


def _strings(k: int) -> list[str]:
    if k == 0:
        return [""]
    return ["".join(t) for t in itertools.product("01", repeat=k)]


def npb_adjacent(s: str, t: str) -> bool:
    """Adjacency rule between parts ``A_s`` and ``A_t``."""
    if len(s) == len(t):
        return s != t
    if len(s) > len(t):
        s, t = t, s
    return not t.startswith(s)


def npb_graph(family: NPBFamily) -> Graph:
    """Vertices are laid out part by part in (length, string) order."""
    owner = [s for s in family.strings() for _ in range(family.size(s))]
    n = len(owner)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if npb_adjacent(owner[u], owner[v])]
    return Graph(n, tuple(edges), tuple(f"A{s}" for s in owner))


def npb_owner(family: NPBFamily) -> list[str]:
    return [s for s in family.strings() for _ in range(family.size(s))]


# ----------------------------------------------------------- family specs


@dataclass(frozen=True)
class FamilySpec:
    """Tagged descriptor of a named family, e.g. ``FamilySpec("cycle", (6,))``."""

    kind: str
    args: tuple = ()


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "bipartite": 2,
    "hypercube": 1,
    "wall": 2,
    "empty": 1,
    "star": 1,
}


def generate_family(spec: FamilySpec) -> Graph:
    kind, args = spec.kind, tuple(spec.args)
    if kind in _ARITY:
        if len(args) != _ARITY[kind] or not all(isinstance(a, int) for a in args):
            raise InvalidSpec(f"{kind} takes {_ARITY[kind]} integer parameter(s)")
        if any(a < 1 for a in args):
            raise InvalidSpec("size parameters must be >= 1")
    if kind == "path":
        return path(*args)
    if kind == "cycle":
        if args[0] < 3:
            raise InvalidSpec("cycle needs n >= 3")
        return cycle(*args)
    if kind == "complete":
        return complete(*args)
    if kind == "bipartite":
        return complete_bipartite(*args)
    if kind == "multipartite":
        return complete_multipartite(args)
    if kind == "hypercube":
        return hypercube(*args)
    if kind == "wall":
        return circular_wall(*args)
    if kind == "empty":
        return empty_graph(*args)
    if kind == "star":
        return star(*args)
    if kind == "npb":
        (family,) = args
        return npb_graph(family)
    if kind == "union":
        return disjoint_union(*(generate_family(a) for a in args))
    if kind == "join":
        a, b = args
        return join(generate_family(a), generate_family(b))
    if kind == "product":
        return box_power([generate_family(a) for a in args])
    raise InvalidSpec(f"unknown family {kind!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse descriptors such as ``cycle:6``, ``bipartite:2,3``,
    ``path:3 x cycle:4`` or ``npb:0=1,1=3,00=1,01=2,10=1,11=1``."""
    text = text.strip()
    for sep in (" x ", "□"):
        if sep in text:
            return FamilySpec("product", tuple(parse_family(t) for t in text.split(sep)))
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    aliases = {"p": "path", "c": "cycle", "k": "complete", "q": "hypercube", "cw": "wall", "kab": "bipartite"}
    kind = aliases.get(kind, kind)
    if kind in ("pmpn", "pmcn", "cmcn"):
        m, n = _ints(rest)
        f1 = FamilySpec("path", (m,)) if kind[0] == "p" else FamilySpec("cycle", (m,))
        f2 = FamilySpec("path", (n,)) if kind[2] == "p" else FamilySpec("cycle", (n,))
        return FamilySpec("product", (f1, f2))
    if kind == "npb":
        sizes = {}
        for item in rest.split(","):
            s, _, k = item.partition("=")
            sizes[s.strip()] = int(k)
        depth = max(len(s) for s in sizes)
        return FamilySpec("npb", (NPBFamily(depth, sizes),))
    try:
        return FamilySpec(kind, _ints(rest))
    except ValueError as exc:
        raise InvalidSpec(f"cannot parse family {text!r}") from exc


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def _need(cond: bool, msg: str):
    if not cond:
        raise InvalidSpec(msg)


# ----------------------------------------------------------------- colouring


@dataclass(frozen=True)
class Coloring:
    """Colours ``1..k`` per vertex."""

    color_of: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.color_of, default=0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.color_of):
            out[c - 1].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        if len(self.color_of) != g.n:
            return False
        if any(c < 1 for c in self.color_of):
            return False
        if any(not cls for cls in self.classes()):
            return False
        return all(self.color_of[u] != self.color_of[v] for u, v in g.edges)


EXACT_COLORING_CAP = 20


def proper_coloring(g: Graph, mode: str = "exact", max_vertices: int = EXACT_COLORING_CAP) -> Coloring:
    """Proper colouring; ``exact`` mode uses ``chi(g)`` colours.

    Graphs with at most two colours are handled directly at any size; other
    graphs above ``max_vertices`` raise :class:`BudgetExceeded` in exact mode.
    """
    if g.n == 0:
        return Coloring(())
    if g.m == 0:
        return Coloring((1,) * g.n)
    side = g.bipartition()
    if side is not None:
        return Coloring(tuple(s + 1 for s in side))
    if mode == "greedy":
        return _dsatur_greedy(g)
    if mode != "exact":
        raise ValueError(f"unknown colouring mode {mode!r}")
    if g.n > max_vertices:
        raise BudgetExceeded(f"exact colouring capped at {max_vertices} vertices", lower=3)
    return _exact_coloring(g)


def chromatic_number(g: Graph) -> int:
    return proper_coloring(g).num_colors


def _dsatur_greedy(g: Graph) -> Coloring:
    color = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not color[u]),
            key=lambda u: (len({color[w] for w in g.neighbors(u)} - {0}), g.degree(u), -u),
        )
        used = {color[w] for w in g.neighbors(v)}
        color[v] = next(c for c in itertools.count(1) if c not in used)
    return Coloring(tuple(color))


def _greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for s in sorted(range(g.n), key=lambda v: -g.degree(v)):
        clique = [s]
        cand = g.adj[s]
        while cand:
            v = max(_bits(cand), key=lambda u: (g.adj[u] & cand).bit_count())
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _exact_coloring(g: Graph) -> Coloring:
    upper = _dsatur_greedy(g)
    best = [upper.num_colors, list(upper.color_of)]
    clique = _greedy_clique(g)
    lower = len(clique)
    if lower == best[0]:
        return upper
    color = [0] * g.n
    for i, v in enumerate(clique):
        color[v] = i + 1

    def pick():
        chosen, key = -1, None
        for u in range(g.n):
            if color[u]:
                continue
            sat = len({color[w] for w in _bits(g.adj[u])} - {0})
            k = (sat, g.degree(u))
            if key is None or k > key:
                chosen, key = u, k
        return chosen

    def search(used: int, left: int) -> bool:
        if used >= best[0]:
            return False
        if left == 0:
            best[0], best[1] = used, list(color)
            return best[0] == lower
        v = pick()
        forbidden = {color[w] for w in _bits(g.adj[v])}
        for c in range(1, min(used + 1, best[0] - 1) + 1):
            if c in forbidden:
                continue
            color[v] = c
            if search(max(used, c), left - 1):
                return True
            color[v] = 0
        return False

    search(len(clique), g.n - len(clique))
    return Coloring(tuple(best[1]))


def graph_stats(g: Graph) -> tuple[int, int, bool, int]:
    """``(max_degree, min_degree, is_regular, component_count)``."""
    degs = g.degrees()
    hi, lo = max(degs, default=0), min(degs, default=0)
    return hi, lo, hi == lo, len(g.components())


def forest_edge_coloring(g: Graph, edges: Iterable[Iterable[int]] | None = None) -> list[list[Edge]]:
    """Split the edges of a forest into ``Delta`` matchings.

    Each tree is rooted at its smallest vertex and coloured breadth first; the
    children of a vertex take the colours not used by its parent edge.
    """
    es = g.edges if edges is None else norm_edges(edges)
    nbr: dict[int, list[int]] = {}
    for u, v in es:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    delta = max((len(x) for x in nbr.values()), default=0)
    classes: list[list[Edge]] = [[] for _ in range(delta)]
    seen: set[int] = set()
    for root in sorted(nbr):
        if root in seen:
            continue
        seen.add(root)
        queue = [(root, -1)]
        while queue:
            v, pc = queue.pop(0)
            free = (c for c in range(delta) if c != pc)
            for w in sorted(nbr[v]):
                if w in seen:
                    continue
                c = next(free)
                classes[c].append(norm_edge((v, w)))
                seen.add(w)
                queue.append((w, c))
    if sum(map(len, classes)) != len(es):
        raise ValueError("edge set is not a forest")
    return [sorted(c) for c in classes]
