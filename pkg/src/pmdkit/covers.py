"""Covers of pmd families by acyclic subfamilies, forest covers and NPB graphs.

A family of edge sets is *acyclic* (AFE) when the union of the induced
subgraphs ``g[V(E)]`` over its members has no cycle.  For a pmd family
``F`` and ``n >= 1``, ``tau_n`` is the least number of AFE subfamilies of
``F`` (repetition allowed) that together use every member at least ``n``
times; ``kappa(g, n, p)`` minimises it over the pmds of ``g`` with ``p``
parts.

The rest of the module supports the closed forms for such numbers:
arboricity of multigraphs (``rho``), epsilon-sets, recognition of
non-prefix binary (NPB) and complete multipartite graphs, ``k``-subset
covers and acyclic families of ordered partitions.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceeded,
    Disconnected,
    InvalidCover,
    InvalidFamily,
    InvalidInput,
    InvalidParams,
    NoCover,
    OutOfDomain,
)
from .graphs import Edge, Graph, MultiGraph, NPBFamily, norm_edge, npb_graph, npb_owner
from .graphs import npb_adjacent as _npb_adjacent
from .positivity import is_positive
from .products import _is_acyclic
from .products import is_afe as _is_afe_in
from .solver import Budget

RHO_FORMULA_CAP = 20


class _Clock:
    def __init__(self, budget: Budget | None):
        self.budget = budget or Budget.default()
        self.start = time.monotonic()
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        b = self.budget
        if b.nodes is not None and self.nodes > b.nodes:
            raise BudgetExceeded("node budget exhausted")
        if b.seconds is not None and self.nodes % 256 == 0 and time.monotonic() - self.start > b.seconds:
            raise BudgetExceeded("time budget exhausted")


# ------------------------------------------------------------------- AFE


def _members(family: Iterable[Iterable[Iterable[int]]]) -> tuple[tuple[Edge, ...], ...]:
    return tuple(tuple(sorted(norm_edge(e) for e in m)) for m in family)


def is_afe(g: Graph, family: Iterable[Iterable[Iterable[int]]]) -> bool:
    """Is the union of ``g[V(E)]`` over the members ``E`` acyclic?"""
    return _is_afe_in(g, _members(family))


@dataclass(frozen=True)
class AFEFamily:
    graph: Graph
    members: tuple[tuple[Edge, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "members", _members(self.members))
        if not is_afe(self.graph, self.members):
            raise InvalidCover("the induced subgraphs of the members contain a cycle")


@dataclass(frozen=True)
class CoverSolution:
    """Subfamilies as tuples of member indices (0-based) into ``family``."""

    graph: Graph
    family: tuple[tuple[Edge, ...], ...]
    n: int
    subfamilies: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "family", _members(self.family))
        object.__setattr__(self, "subfamilies", tuple(tuple(sorted(c)) for c in self.subfamilies))

    @property
    def size(self) -> int:
        return len(self.subfamilies)

    def is_valid(self) -> bool:
        count = [0] * len(self.family)
        for c in self.subfamilies:
            if not is_afe(self.graph, [self.family[i] for i in c]):
                return False
            for i in c:
                count[i] += 1
        return all(k >= self.n for k in count)

    def to_json(self) -> dict:
        """Indices are written 1-based, matching the part numbers ``M_1..M_p``."""
        return {"subfamilies": [[i + 1 for i in c] for c in self.subfamilies]}

    @classmethod
    def from_json(cls, doc: dict, graph: Graph, family, n: int) -> "CoverSolution":
        return cls(graph, _members(family), n, tuple(tuple(i - 1 for i in c) for c in doc["subfamilies"]))


def maximal_afe_subfamilies(g: Graph, family: Sequence[Sequence[Edge]]) -> list[tuple[int, ...]]:
    """Inclusion-maximal index sets whose members form an AFE family."""
    family = _members(family)
    p = len(family)
    ok: dict[int, bool] = {0: True}
    # AFE is closed under subsets, so grow masks by adding the top bit
    for mask in range(1, 1 << p):
        low = mask & ~(1 << (mask.bit_length() - 1))
        if not ok[low]:
            ok[mask] = False
            continue
        ok[mask] = is_afe(g, [family[i] for i in range(p) if mask >> i & 1])
    good = [m for m in range(1, 1 << p) if ok[m]]
    maximal = [m for m in good if not any(ok[m | 1 << i] for i in range(p) if not m >> i & 1)]
    return [tuple(i for i in range(p) if m >> i & 1) for m in maximal]


def min_multicover(
    sets: Sequence[Sequence[int]], demand: Sequence[int], budget: Budget | None = None, clock: _Clock | None = None
) -> list[int]:
    """Fewest sets (repetition allowed) covering element ``i`` at least ``demand[i]`` times.

    Returns indices into ``sets``.  Iterative deepening on the count; each
    level branches on the most demanding element with the fewest options and
    memoises failed ``(demand, slots)`` states.
    """
    clock = clock or _Clock(budget)
    demand = tuple(max(0, d) for d in demand)
    sets = [tuple(sorted(set(s))) for s in sets]
    if any(d and not any(i in s for s in sets) for i, d in enumerate(demand)):
        raise NoCover("an element lies in no set")
    widest = max((len(s) for s in sets), default=1)
    containing = [[k for k, s in enumerate(sets) if i in s] for i in range(len(demand))]
    failed: set[tuple[tuple[int, ...], int]] = set()

    def bound(d: tuple[int, ...]) -> int:
        return max(max(d, default=0), -(-sum(d) // widest))

    def search(d: tuple[int, ...], slots: int, chosen: list[int]) -> bool:
        if not any(d):
            return True
        if bound(d) > slots or (d, slots) in failed:
            return False
        clock.tick()
        i = max((i for i in range(len(d)) if d[i]), key=lambda i: (d[i], -len(containing[i])))
        for k in containing[i]:
            nd = list(d)
            for j in sets[k]:
                if nd[j]:
                    nd[j] -= 1
            chosen.append(k)
            if search(tuple(nd), slots - 1, chosen):
                return True
            chosen.pop()
        failed.add((d, slots))
        return False

    k = bound(demand)
    while True:
        chosen: list[int] = []
        if search(demand, k, chosen):
            return chosen
        k += 1


def tau_n_cover(g: Graph, pmd: Sequence[Sequence[Iterable[int]]], n: int, budget: Budget | None = None) -> CoverSolution:
    """Minimum cover of ``n`` copies of the pmd family by AFE subfamilies."""
    if n < 1:
        raise InvalidParams("n must be >= 1")
    family = _members(pmd)
    if sorted(e for m in family for e in m) != sorted(g.edges):
        raise InvalidInput("the family does not partition the edge set")
    maximal = maximal_afe_subfamilies(g, family)
    chosen = min_multicover(maximal, [n] * len(family), budget)
    return CoverSolution(g, family, n, tuple(maximal[k] for k in sorted(chosen)))


# ----------------------------------------------------------------- kappa


def matching_partitions(g: Graph, p: int, clock: _Clock | None = None) -> Iterator[tuple[tuple[Edge, ...], ...]]:
    """Unordered partitions of ``E(g)`` into exactly ``p`` non-empty matchings."""
    edges = g.edges
    blocks: list[list[Edge]] = []
    used: list[int] = []

    def rec(i: int):
        if clock:
            clock.tick()
        if len(blocks) + (len(edges) - i) < p:
            return
        if i == len(edges):
            if len(blocks) == p:
                yield tuple(tuple(b) for b in blocks)
            return
        u, v = edges[i]
        mask = 1 << u | 1 << v
        for b in range(len(blocks)):
            if not used[b] & mask:
                blocks[b].append(edges[i])
                used[b] |= mask
                yield from rec(i + 1)
                used[b] &= ~mask
                blocks[b].pop()
        if len(blocks) < p:
            blocks.append([edges[i]])
            used.append(mask)
            yield from rec(i + 1)
            blocks.pop()
            used.pop()

    yield from rec(0)


def pmd_order(g: Graph, parts: Sequence[Sequence[Edge]]) -> list[int] | None:
    """An order making ``parts`` a pmd, or ``None``.

    Removing edges never creates an alternating closed walk, so a part that
    is positive now stays positive later and a greedy order is complete.
    """
    left = list(range(len(parts)))
    residual = g
    order = []
    while left:
        for k in left:
            if is_positive(residual, parts[k]):
                order.append(k)
                left.remove(k)
                residual = residual.remove_edges(parts[k])
                break
        else:
            return None
    return order


def pmd_families(g: Graph, p: int, budget: Budget | None = None) -> list[tuple[tuple[Edge, ...], ...]]:
    """All unordered families that are the parts of some ``p``-part pmd of ``g``."""
    clock = _Clock(budget)
    return [f for f in matching_partitions(g, p, clock) if pmd_order(g, f) is not None]


@dataclass(frozen=True)
class KappaResult:
    value: int
    family: tuple[tuple[Edge, ...], ...]
    cover: CoverSolution
    families_checked: int


def kappa_search(g: Graph, n: int, p: int, budget: Budget | None = None) -> KappaResult:
    clock = _Clock(budget)
    best: KappaResult | None = None
    checked = 0
    for fam in matching_partitions(g, p, clock):
        if pmd_order(g, fam) is None:
            continue
        checked += 1
        maximal = maximal_afe_subfamilies(g, fam)
        try:
            chosen = min_multicover(maximal, [n] * p, clock=clock)
        except NoCover:
            continue
        if best is None or len(chosen) < best.value:
            cover = CoverSolution(g, fam, n, tuple(maximal[k] for k in sorted(chosen)))
            best = KappaResult(len(chosen), fam, cover, 0)
    if best is None:
        raise NoCover(f"no {p}-part pmd admits an AFE cover")
    return KappaResult(best.value, best.family, best.cover, checked)


def kappa(g: Graph, n: int, p: int, budget: Budget | None = None) -> int:
    """Least ``tau_n`` over the ``p``-part pmd families of ``g``; ``NoCover`` stands for infinity."""
    if n < 1 or p < 1:
        raise InvalidParams("n and p must be >= 1")
    return kappa_search(g, n, p, budget).value


def kappa_cycle_closed_form(m: int, n: int, p: int) -> int:
    if not (m >= p >= 3) or (m, p) == (4, 3) or n < 1:
        raise OutOfDomain(f"closed form needs m >= p >= 3, (m, p) != (4, 3), n >= 1; got m={m}, p={p}, n={n}")
    if (m, p) == (5, 4):
        return -(-3 * n // 2)
    return -(-p * n // (p - 1))


# ------------------------------------------------------------------- rho


def _edge_count(mult: dict[Edge, int], xs: int) -> int:
    return sum(k for (u, v), k in mult.items() if xs >> u & 1 and xs >> v & 1)


def rho(mg: MultiGraph | Graph, mode: str = "formula", budget: Budget | None = None, prune: bool = True) -> int:
    """Least number of forests covering every edge instance of ``mg``.

    ``formula`` maximises ``ceil(|E(X)| / (|X| - 1))`` over vertex sets.  With
    ``prune`` it skips every ``X`` that has an outside vertex ``u`` with
    ``deg_X(u) >= mu * |X| / 2`` (``mu`` the largest multiplicity), which
    for simple graphs is exactly the half-set rule.  ``oracle`` searches
    forest assignments directly.
    """
    if isinstance(mg, Graph):
        mg = MultiGraph(mg.n, {e: 1 for e in mg.edges})
    if mode == "oracle":
        return _rho_oracle(mg, _Clock(budget))
    if mode != "formula":
        raise InvalidParams(f"unknown mode {mode!r}")
    if mg.n > RHO_FORMULA_CAP:
        raise InvalidParams(f"formula mode is capped at {RHO_FORMULA_CAP} vertices")
    return _rho_formula(mg, prune, _Clock(budget))


def _rho_formula(mg: MultiGraph, prune: bool, clock: _Clock) -> int:
    mult = dict(mg.mult)
    mu = max(mult.values(), default=1)
    nbr = [dict() for _ in range(mg.n)]
    for (u, v), k in mult.items():
        nbr[u][v] = k
        nbr[v][u] = k
    full = (1 << mg.n) - 1
    best = 0
    for xs in range(1, full + 1):
        size = xs.bit_count()
        if size < 2:
            continue
        clock.tick()
        if prune and xs != full:
            outside = [u for u in range(mg.n) if not xs >> u & 1]
            if any(2 * sum(k for v, k in nbr[u].items() if xs >> v & 1) >= mu * size for u in outside):
                continue
        best = max(best, -(-_edge_count(mult, xs) // (size - 1)))
    return best


def _rho_oracle(mg: MultiGraph, clock: _Clock) -> int:
    inst = mg.instances()
    if not inst:
        return 0
    k = max(mg.mult.values())
    while not _forest_cover(mg.n, inst, k, clock):
        k += 1
    return k


def _forest_cover(n: int, inst: Sequence[Edge], k: int, clock: _Clock) -> bool:
    """Can the edge instances be split into ``k`` forests?"""
    parent = [list(range(n)) for _ in range(k)]
    sizes = [0] * k

    def find(f: int, x: int) -> int:
        while parent[f][x] != x:
            x = parent[f][x]
        return x

    def rec(i: int, prev_same: int) -> bool:
        if i == len(inst):
            return True
        clock.tick()
        if len(inst) - i > sum(n - 1 - s for s in sizes):
            return False
        u, v = inst[i]
        same = i > 0 and inst[i - 1] == inst[i]
        opened = max((f for f in range(k) if sizes[f]), default=-1)
        for f in range(k):
            if same and f <= prev_same:
                continue  # parallel copies go to increasing forests
            if f > opened + 1:
                break  # empty forests are interchangeable
            a, b = find(f, u), find(f, v)
            if a == b:
                continue
            parent[f][a] = b
            sizes[f] += 1
            if rec(i + 1, f):
                return True
            parent[f][a] = a
            sizes[f] -= 1
        return False

    return rec(0, -1)


# -------------------------------------------------------------- eps-sets


def is_eps_set(g: Graph, xs: Iterable[int], eps) -> bool:
    """Does some vertex outside ``xs`` have at least ``eps * |xs|`` neighbours in it?"""
    eps = Fraction(eps)
    if not 0 <= eps <= 1:
        raise InvalidParams("eps must lie in [0, 1]")
    xs = set(xs)
    return any(Fraction(sum(1 for w in g.neighbors(u) if w in xs)) >= eps * len(xs) for u in range(g.n) if u not in xs)


eps_predicates = is_eps_set


def is_eps_graph(g: Graph, eps) -> bool:
    """Every proper vertex subset is an ``eps``-set."""
    return non_eps_set(g, eps) is None


def non_eps_set(g: Graph, eps) -> tuple[int, ...] | None:
    """The first proper subset (by size, then lexicographically) that is not an ``eps``-set."""
    for size in range(g.n):
        for xs in itertools.combinations(range(g.n), size):
            if not is_eps_set(g, xs, eps):
                return xs
    return None


# ---------------------------------------------------------- recognition


@dataclass(frozen=True)
class NPBRecognition:
    """Either ``family`` with ``owner[v]`` the part index of ``v``, or a witness edge pair."""

    family: NPBFamily | None
    owner: tuple[str, ...] | None = None
    witness: tuple[Edge, Edge] | None = None

    @property
    def is_npb(self) -> bool:
        return self.family is not None


def _require_connected(g: Graph):
    if g.n < 2:
        raise InvalidInput("recognition needs at least two vertices")
    if not g.is_connected():
        raise Disconnected("graph is not connected")


def npb_violation(g: Graph) -> tuple[Edge, Edge] | None:
    """First pair of disjoint edges whose four ends induce an acyclic subgraph."""
    for e, f in itertools.combinations(g.edges, 2):
        if len(set(e) | set(f)) < 4:
            continue
        if _is_acyclic(g.induced_edges(e + f)):
            return e, f
    return None


def recognize_npb(g: Graph) -> NPBRecognition:
    _require_connected(g)
    bad = npb_violation(g)
    if bad is not None:
        return NPBRecognition(None, witness=bad)
    owner: dict[int, str] = {}
    _npb_split(g, list(range(g.n)), "", owner)
    labels = tuple(owner[v] for v in range(g.n))
    depth = max(len(s) for s in labels)
    sizes: dict[str, int] = {}
    for s in labels:
        sizes[s] = sizes.get(s, 0) + 1
    family = NPBFamily(depth, sizes)
    for u, v in itertools.combinations(range(g.n), 2):
        if _npb_adjacent(labels[u], labels[v]) != g.has_edge(u, v):  # pragma: no cover - guarded by the proof
            raise AssertionError("NPB structure recovery failed")
    return NPBRecognition(family, labels)


def _npb_split(g: Graph, verts: list[int], prefix: str, owner: dict[int, str]):
    """Label ``verts`` (connected, at least two vertices) below ``prefix``."""
    vs = set(verts)
    nb = {v: set(g.neighbors(v)) & vs for v in verts}
    u = min(verts, key=lambda v: (len(nb[v]), v))
    halves = (sorted(nb[u]), sorted(vs - nb[u]))
    for bit, half in zip("01", halves):
        hs = set(half)
        isolated = [v for v in half if not nb[v] & hs]
        rest = [v for v in half if nb[v] & hs]
        for v in isolated:
            owner[v] = prefix + bit
        if rest:
            _npb_split(g, rest, prefix + bit, owner)


@dataclass(frozen=True)
class MultipartiteRecognition:
    sizes: tuple[int, ...] | None
    parts: tuple[tuple[int, ...], ...] | None = None
    witness: tuple[int, Edge] | None = None

    @property
    def is_multipartite(self) -> bool:
        return self.sizes is not None


def recognize_complete_multipartite(g: Graph) -> MultipartiteRecognition:
    """Complete multipartite iff every vertex sees an end of every edge avoiding it."""
    _require_connected(g)
    for v in range(g.n):
        for x, y in g.edges:
            if v not in (x, y) and not g.has_edge(v, x) and not g.has_edge(v, y):
                return MultipartiteRecognition(None, witness=(v, (x, y)))
    comp = Graph(g.n, tuple(e for e in itertools.combinations(range(g.n), 2) if not g.has_edge(*e)))
    parts = sorted((tuple(sorted(c)) for c in comp.components()), key=lambda c: (len(c), c))
    return MultipartiteRecognition(tuple(len(c) for c in parts), tuple(parts))


# --------------------------------------------------------- subset covers


def k_subset_cover(n: int, m: int, k: int) -> list[list[int]]:
    """``ceil(n m / k)`` consecutive blocks of ``1, ..., m, 1, ..., m, ...``."""
    if min(n, m, k) < 1 or k > m:
        raise InvalidParams("need n, m, k >= 1 and k <= m")
    count = -(-n * m // k)
    return [[(b * k + t) % m + 1 for t in range(k)] for b in range(count)]


def k_subset_cover_min(n: int, m: int, k: int, budget: Budget | None = None) -> int:
    """Exact minimum by search over all ``k``-subsets."""
    if min(n, m, k) < 1 or k > m:
        raise InvalidParams("need n, m, k >= 1 and k <= m")
    subsets = list(itertools.combinations(range(m), k))
    return len(min_multicover(subsets, [n] * m, budget))


# ------------------------------------------------ ordered partitions of [b]


def _path_edges(block: Sequence[int]) -> list[Edge]:
    s = sorted(block)
    return list(zip(s, s[1:]))


def is_acyclic_partition_family(b: int, family: Sequence[Sequence[Sequence[int]]]) -> bool:
    """``family[i][j]`` is block ``j`` of the ``i``-th ordered partition of ``[b]`` (1-based)."""
    k = len(family[0]) if family else 0
    for p in family:
        if len(p) != k or sorted(x for blk in p for x in blk) != list(range(1, b + 1)):
            return False
    return all(_is_acyclic([e for p in family for e in _path_edges(p[j])]) for j in range(k))


def min_acyclic_ordered_kpartitions(a: int, b: int, budget: Budget | None = None) -> tuple[int, list[list[list[int]]]]:
    """Least ``k`` such that ``[b]`` has an acyclic family of ``a`` ordered ``k``-partitions."""
    if a < 1 or b < 1 or a > b:
        raise InvalidParams("need 1 <= a <= b")
    clock = _Clock(budget)
    k = 1
    while True:
        found = _kpartition_search(a, b, k, clock)
        if found is not None:
            return k, found
        k += 1


def _kpartition_search(a: int, b: int, k: int, clock: _Clock) -> list[list[list[int]]] | None:
    # forests[j] holds union-find parents for the j-th multigraph
    parent = [list(range(b + 1)) for _ in range(k)]
    assign = [[0] * b for _ in range(a)]

    def find(j: int, x: int) -> int:
        while parent[j][x] != x:
            x = parent[j][x]
        return x

    def rec(i: int, x: int, last: list[int], top: int, undo: list) -> bool:
        # i: partition index, x: element (0-based), last[j]: last element placed in block j
        if i == a:
            return True
        if x == b:
            return rec(i + 1, 0, [0] * k, top, undo)
        clock.tick()
        # blocks are interchangeable until some partition has used them (first partition only)
        limit = min(k, top + 1) if i == 0 else k
        for j in range(limit):
            joined = None
            if last[j]:
                r1, r2 = find(j, last[j]), find(j, x + 1)
                if r1 == r2:
                    continue
                parent[j][r1] = r2
                joined = r1
            assign[i][x] = j
            prev = last[j]
            last[j] = x + 1
            if rec(i, x + 1, last, max(top, j + 1) if i == 0 else top, undo):
                return True
            last[j] = prev
            if joined is not None:
                parent[j][joined] = joined
        return False

    if not rec(0, 0, [0] * k, 0, []):
        return None
    return [[[x + 1 for x in range(b) if assign[i][x] == j] for j in range(k)] for i in range(a)]


# ------------------------------------------------------------- NPB and rho


def _block(owner: Sequence[str], s: str) -> set[int]:
    return {v for v, t in enumerate(owner) if t.startswith(s)}


def normalize_npb(f: NPBFamily) -> NPBFamily:
    """Swap sibling subtrees so that ``|B_{1^i 0}| <= |B_{1^i 1}|`` at every level."""
    sizes = dict(f.part_size)
    for i in range(f.depth):
        a, b = "1" * i + "0", "1" * i + "1"
        na = sum(k for s, k in sizes.items() if s.startswith(a))
        nb = sum(k for s, k in sizes.items() if s.startswith(b))
        if na > nb:
            swapped = {}
            for s, k in sizes.items():
                if s.startswith(a):
                    s = b + s[len(a):]
                elif s.startswith(b):
                    s = a + s[len(b):]
                swapped[s] = k
            sizes = swapped
    return NPBFamily(f.depth, sizes)


@dataclass(frozen=True)
class NPBRhoReport:
    value: int
    argmax: tuple[int, ...]
    core: tuple[int, ...]
    at_core: int
    at_all: int


def npb_rho_report(f: NPBFamily, n: int = 1) -> NPBRhoReport:
    """Evaluate ``ceil(n |E(X)| / (|X| - 1))`` over every ``X`` containing the core ``X'``.

    ``n`` is the edge multiplicity; it is unrelated to the depth of ``f``.
    The core is ``B_0 + B_10 + ... + B_{1^(d-1) 0}`` after :func:`normalize_npb`.
    Among maximisers the largest ``X`` is reported.
    """
    if n < 1:
        raise InvalidFamily("multiplicity must be >= 1")
    f = normalize_npb(f)
    g = npb_graph(f)
    if g.n < 2:
        raise InvalidFamily("the family needs at least two vertices")
    owner = npb_owner(f)
    core: set[int] = set()
    for i in range(f.depth):
        core |= _block(owner, "1" * i + "0")
    if len(core) < 1:
        raise InvalidFamily("empty core")
    free = [v for v in range(g.n) if v not in core]
    mult = {e: 1 for e in g.edges}

    def value(xs: set[int]) -> int:
        mask = sum(1 << v for v in xs)
        return -(-n * _edge_count(mult, mask) // (len(xs) - 1)) if len(xs) >= 2 else 0

    best, arg = -1, ()
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            xs = core | set(extra)
            val = value(xs)
            if val >= best:
                best, arg = val, tuple(sorted(xs))
    return NPBRhoReport(best, arg, tuple(sorted(core)), value(core), value(set(range(g.n))))


def kappa_npb_rho_restricted(f: NPBFamily, n: int = 1) -> int:
    g = npb_graph(f)
    if g.n >= 2 and g.is_connected() and recognize_complete_multipartite(g).is_multipartite:
        return -(-n * g.m // (g.n - 1))
    return npb_rho_report(f, n).value


__all__ = [
    "AFEFamily",
    "CoverSolution",
    "KappaResult",
    "MultipartiteRecognition",
    "NPBRecognition",
    "NPBRhoReport",
    "is_acyclic_partition_family",
    "is_afe",
    "is_eps_graph",
    "is_eps_set",
    "k_subset_cover",
    "k_subset_cover_min",
    "kappa",
    "kappa_cycle_closed_form",
    "kappa_npb_rho_restricted",
    "kappa_search",
    "matching_partitions",
    "maximal_afe_subfamilies",
    "min_acyclic_ordered_kpartitions",
    "min_multicover",
    "non_eps_set",
    "normalize_npb",
    "npb_rho_report",
    "npb_violation",
    "pmd_families",
    "pmd_order",
    "recognize_complete_multipartite",
    "recognize_npb",
    "rho",
    "tau_n_cover",
]
