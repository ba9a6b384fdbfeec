"""Exact positive matching decompositions by branch and bound.

The search works on edge bitmasks of the residual graph.  A node is a pair
``(residual, parts_left)``; its children are the positive matchings of the
residual that cover every vertex whose residual degree equals ``parts_left``
(such a vertex could not be finished otherwise).  Residual forests are closed
off directly: any matching of a forest is positive, so a forest needs exactly
``Delta`` more parts.  Failed nodes are memoised.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InvalidInput
from .graphs import Edge, Graph, bits, forest_edge_coloring, hypercube, norm_edge
from .positivity import (
    AlternatingWalk,
    PendantOrder,
    PositivityWitness,
    WeightCertificate,
    check_positive,
    enumerate_positive_matchings,
    is_positive_adj,
    matchings,
    weight_certificate,
)

BUDGET_ENV = "PMDKIT_BUDGET_SECONDS"


# ------------------------------------------------------------------ types


@dataclass(frozen=True)
class Decomposition:
    graph: Graph
    parts: tuple[tuple[Edge, ...], ...]
    certificates: tuple[WeightCertificate, ...] | None = None

    def __post_init__(self):
        parts = tuple(tuple(sorted(norm_edge(e) for e in p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return len(self.parts)

    def residuals(self) -> Iterator[Graph]:
        """The graph each part has to be positive in, in order."""
        g = self.graph
        for part in self.parts:
            yield g
            g = g.remove_edges(part)

    def with_certificates(self) -> "Decomposition":
        certs = tuple(weight_certificate(r, p) for r, p in zip(self.residuals(), self.parts))
        return Decomposition(self.graph, self.parts, certs)


@dataclass(frozen=True)
class PartReport:
    index: int
    size: int
    witness: PositivityWitness | None
    problem: str | None = None

    @property
    def ok(self) -> bool:
        return self.problem is None


@dataclass(frozen=True)
class PmdReport:
    ok: bool
    partition_ok: bool
    parts: tuple[PartReport, ...]
    problems: tuple[str, ...]

    @property
    def first_failure(self) -> int | None:
        return next((p.index for p in self.parts if not p.ok), None)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Budget:
    """Wall-clock seconds and search-node caps; ``None`` means unlimited."""

    seconds: float | None = None
    nodes: int | None = None

    @classmethod
    def default(cls) -> "Budget":
        raw = os.environ.get(BUDGET_ENV)
        return cls(seconds=float(raw)) if raw else cls()


@dataclass(frozen=True)
class SolveOutcome:
    """``status`` is ``found``, ``impossible``, ``budget`` or ``inconclusive``.

    ``inconclusive`` only comes from the maximal-matching heuristic, which can
    miss decompositions and so never proves impossibility.
    """

    status: str
    p: int
    decomposition: Decomposition | None = None
    lower: int | None = None
    upper: int | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def impossible(self) -> bool:
        return self.status == "impossible"


# ----------------------------------------------------------- verification


def verify_pmd(g: Graph, d: Decomposition | Sequence[Iterable[Iterable[int]]]) -> PmdReport:
    parts = d.parts if isinstance(d, Decomposition) else tuple(tuple(norm_edge(e) for e in p) for p in d)
    certs = d.certificates if isinstance(d, Decomposition) else None
    problems: list[str] = []
    seen: dict[Edge, int] = {}
    for i, part in enumerate(parts):
        if not part:
            problems.append(f"part {i + 1} is empty")
        for e in part:
            if e not in g.edge_index:
                problems.append(f"part {i + 1}: {e} is not an edge")
            elif e in seen:
                problems.append(f"edge {e} in parts {seen[e] + 1} and {i + 1}")
            else:
                seen[e] = i
    missing = [e for e in g.edges if e not in seen]
    if missing:
        problems.append(f"{len(missing)} edges uncovered, first {missing[0]}")
    partition_ok = not problems

    reports = []
    residual = g
    for i, part in enumerate(parts):
        edges = [e for e in part if e in residual.edge_index]
        try:
            wit = check_positive(residual, edges)
        except ValueError as exc:
            reports.append(PartReport(i, len(part), None, str(exc)))
        else:
            problem = None
            if isinstance(wit, AlternatingWalk):
                problem = "alternating closed walk"
            elif certs is not None and i < len(certs):
                from .positivity import verify_certificate

                if not verify_certificate(residual, edges, certs[i]):
                    problem = "certificate does not separate the part"
            reports.append(PartReport(i, len(part), wit, problem))
        residual = residual.remove_edges(edges)
    for r in reports:
        if r.problem:
            problems.append(f"part {r.index + 1}: {r.problem}")
    ok = partition_ok and all(r.ok for r in reports)
    return PmdReport(ok, partition_ok, tuple(reports), tuple(problems))


def pmd_lower_bound(g: Graph) -> int:
    best = 0
    degs = g.degrees()
    for comp in g.components():
        ds = [degs[v] for v in comp]
        hi = max(ds)
        best = max(best, hi)
        if hi >= 2 and min(ds) == hi:
            best = max(best, hi + 1)
    return best


# -------------------------------------------------------------- automorphisms


def automorphisms(g: Graph, limit: int = 20000) -> list[tuple[int, ...]] | None:
    """All automorphisms as vertex permutations, or ``None`` past ``limit``."""
    n = g.n
    adj = g.adj
    deg = g.degrees()
    # BFS order keeps already-mapped neighbours around for early pruning
    order: list[int] = []
    seen = 0
    for s in sorted(range(n), key=lambda v: -deg[v]):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in bits(adj[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    img = [-1] * n
    out: list[tuple[int, ...]] = []

    def rec(k: int, used: int) -> bool:
        if k == n:
            out.append(tuple(img))
            return len(out) <= limit
        v = order[k]
        for t in range(n):
            if used >> t & 1 or deg[t] != deg[v]:
                continue
            if any((adj[v] >> u & 1) != (adj[t] >> img[u] & 1) for u in order[:k]):
                continue
            img[v] = t
            if not rec(k + 1, used | 1 << t):
                return False
            img[v] = -1
        return True

    return out if rec(0, 0) else None


# ------------------------------------------------------------------ search


class _Search:
    def __init__(self, g: Graph, budget: Budget, maximal_only: bool = False, start: float | None = None):
        self.g = g
        self.edges = g.edges
        self.ends = [(1 << u) | (1 << v) for u, v in g.edges]
        self.inc = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            self.inc[u] |= 1 << i
            self.inc[v] |= 1 << i
        self.budget = budget
        self.start = time.monotonic() if start is None else start
        self.nodes = 0
        self.failed: set[tuple[int, int]] = set()
        self.maximal_only = maximal_only

    # residual helpers -------------------------------------------------
    def adjacency(self, r: int) -> list[int]:
        adj = [0] * self.g.n
        for i in bits(r):
            u, v = self.edges[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def tick(self):
        self.nodes += 1
        b = self.budget
        if b.nodes is not None and self.nodes > b.nodes:
            raise BudgetExceeded("node budget exhausted")
        if b.seconds is not None:
            self.clock()

    def clock(self):
        if time.monotonic() - self.start > self.budget.seconds:
            raise BudgetExceeded("time budget exhausted")

    def components(self, adj: list[int], verts: int) -> list[int]:
        comps = []
        while verts:
            comp = verts & -verts
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            verts &= ~comp
            comps.append(comp)
        return comps

    def status(self, r: int, rem: int, adj: list[int]):
        """``True`` (finish as forest), ``False`` (dead) or ``None`` (branch)."""
        if r == 0:
            return True
        if rem == 0:
            return False
        degs = [a.bit_count() for a in adj]
        delta = max(degs)
        if delta > rem:
            return False
        verts = 0
        for v, a in enumerate(adj):
            if a:
                verts |= 1 << v
        comps = self.components(adj, verts)
        nv = verts.bit_count()
        ne = r.bit_count()
        if ne == nv - len(comps):
            return True
        if rem <= 2:
            return False
        for c in comps:
            ds = {degs[v] for v in bits(c)}
            if len(ds) == 1:
                d = ds.pop()
                if d >= 2 and d + 1 > rem:
                    return False
        # the last two parts leave a forest behind, earlier parts are matchings
        if ne > (rem - 2) * (nv // 2) + nv - len(comps):
            return False
        return None

    def candidates(self, r: int, rem: int, adj: list[int]) -> list[tuple[int, ...]]:
        edges = self.edges
        must = 0
        for v, a in enumerate(adj):
            if a.bit_count() == rem:
                must |= 1 << v
        out: list[tuple[int, ...]] = []
        chosen: list[Edge] = []
        idx: list[int] = []
        inc = self.inc
        timed = self.budget.seconds is not None

        def optional(start: int, used: int):
            if idx:
                out.append(tuple(idx))
                if timed and len(out) % 4096 == 0:
                    self.clock()
            for i in bits(r >> start << start):
                u, v = edges[i]
                if used >> u & 1 or used >> v & 1:
                    continue
                chosen.append((u, v))
                idx.append(i)
                if is_positive_adj(adj, chosen):
                    optional(i + 1, used | 1 << u | 1 << v)
                chosen.pop()
                idx.pop()

        def forced(used: int):
            left = must & ~used
            if not left:
                optional(0, used)
                return
            v = (left & -left).bit_length() - 1
            for i in bits(inc[v] & r):
                a, b = edges[i]
                w = b if a == v else a
                if used >> w & 1:
                    continue
                chosen.append((a, b))
                idx.append(i)
                if is_positive_adj(adj, chosen):
                    forced(used | 1 << a | 1 << b)
                chosen.pop()
                idx.pop()

        forced(0)
        uniq = {tuple(sorted(c)) for c in out}
        cands = sorted(uniq, key=lambda c: (-len(c), c))
        if self.maximal_only:
            cands = [c for c in cands if self._maximal(c, adj, r)]
        return cands

    def _maximal(self, cand: tuple[int, ...], adj: list[int], r: int) -> bool:
        used = 0
        for i in cand:
            used |= self.ends[i]
        base = [self.edges[i] for i in cand]
        for i in bits(r):
            if self.ends[i] & used:
                continue
            if is_positive_adj(adj, base + [self.edges[i]]):
                return False
        return True

    def finish(self, r: int) -> list[list[Edge]]:
        return forest_edge_coloring(self.g, [self.edges[i] for i in bits(r)])

    def solve(self, r: int, rem: int) -> list[list[Edge]] | None:
        self.tick()
        adj = self.adjacency(r)
        st = self.status(r, rem, adj)
        if st is True:
            return self.finish(r)
        if st is False or (r, rem) in self.failed:
            return None
        for cand in self.candidates(r, rem, adj):
            mask = 0
            for i in cand:
                mask |= 1 << i
            sub = self.solve(r & ~mask, rem - 1)
            if sub is not None:
                return [[self.edges[i] for i in cand]] + sub
        self.failed.add((r, rem))
        return None


def _root_candidates(s: _Search, p: int, symmetry: bool) -> list[tuple[int, ...]]:
    full = (1 << len(s.edges)) - 1
    cands = s.candidates(full, p, s.adjacency(full))
    if not symmetry:
        return cands
    auts = automorphisms(s.g)
    if not auts or len(auts) == 1:
        return cands
    eidx = s.g.edge_index
    emaps = [[eidx[norm_edge((a[u], a[v]))] for u, v in s.edges] for a in auts]
    seen: set[tuple[int, ...]] = set()
    reps = []
    for c in cands:
        if c in seen:
            continue
        reps.append(c)
        for em in emaps:
            seen.add(tuple(sorted(em[i] for i in c)))
    return reps


def _subtree(args) -> tuple[list[list[Edge]] | None, int]:
    g, p, cand, budget, maximal_only, start = args
    s = _Search(g, budget, maximal_only, start)
    full = (1 << len(g.edges)) - 1
    mask = 0
    for i in cand:
        mask |= 1 << i
    sub = s.solve(full & ~mask, p - 1)
    if sub is None:
        return None, s.nodes
    return [[g.edges[i] for i in cand]] + sub, s.nodes


def _decide_connected(
    g: Graph, p: int, budget: Budget, symmetry: bool, maximal_only: bool, jobs: int, start: float
) -> tuple[list[list[Edge]] | None, int]:
    s = _Search(g, budget, maximal_only, start)
    full = (1 << len(g.edges)) - 1
    s.tick()
    adj = s.adjacency(full)
    st = s.status(full, p, adj)
    if st is True:
        return s.finish(full), s.nodes
    if st is False:
        return None, s.nodes
    roots = _root_candidates(s, p, symmetry)
    if jobs > 1 and len(roots) > 1:
        args = [(g, p, c, budget, maximal_only, start) for c in roots]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_subtree, args))
        nodes = s.nodes + sum(n for _, n in results)
        # first success in branching order, same as the sequential search
        for parts, _ in results:
            if parts is not None:
                return parts, nodes
        return None, nodes
    for cand in roots:
        mask = 0
        for i in cand:
            mask |= 1 << i
        sub = s.solve(full & ~mask, p - 1)
        if sub is not None:
            return [[g.edges[i] for i in cand]] + sub, s.nodes
    return None, s.nodes


def _split_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    out = []
    for comp in g.components():
        if len(comp) > 1:
            out.append((g.induced(comp), comp))
    return out


def merge_parts(pieces: Iterable[tuple[Sequence[Sequence[Edge]], Sequence[int]]]) -> list[list[Edge]]:
    """Merge per-component decompositions index by index (relabelling back)."""
    merged: list[list[Edge]] = []
    for parts, verts in pieces:
        for k, part in enumerate(parts):
            while len(merged) <= k:
                merged.append([])
            merged[k].extend(norm_edge((verts[u], verts[v])) for u, v in part)
    return [sorted(p) for p in merged]


def pmd_decide(
    g: Graph,
    p: int,
    budget: Budget | None = None,
    symmetry: bool = True,
    *,
    maximal_only: bool = False,
    jobs: int = 1,
) -> SolveOutcome:
    """Find a pmd with at most ``p`` parts or prove there is none.

    Components are solved separately and merged part by part.  With
    ``maximal_only`` only inclusion-maximal positive matchings are tried; a
    miss is then reported as ``inconclusive``.
    """
    if p < 1:
        raise InvalidInput("p must be >= 1")
    budget = budget or Budget.default()
    start = time.monotonic()
    lower = pmd_lower_bound(g)
    if g.m == 0:
        return SolveOutcome("found", p, Decomposition(g, ()), lower, 0)
    if lower > p:
        return SolveOutcome("impossible", p, lower=lower)
    pieces = []
    nodes = 0
    for sub, verts in _split_components(g):
        try:
            parts, n = _decide_connected(sub, p, budget, symmetry, maximal_only, jobs, start)
        except BudgetExceeded:
            return SolveOutcome("budget", p, lower=lower, upper=None, nodes=nodes)
        nodes += n
        if parts is None:
            status = "inconclusive" if maximal_only else "impossible"
            return SolveOutcome(status, p, lower=lower if maximal_only else p + 1, nodes=nodes)
        pieces.append((parts, verts))
    d = Decomposition(g, tuple(tuple(x) for x in merge_parts(pieces)))
    if not verify_pmd(g, d).ok:  # pragma: no cover - soundness guard
        raise AssertionError("solver produced an invalid decomposition")
    return SolveOutcome("found", p, d, lower, d.size, nodes)


def greedy_pmd(g: Graph) -> Decomposition:
    """Upper bound: repeatedly remove the first maximal positive matching."""
    parts = []
    residual = g
    while residual.m:
        chosen: list[Edge] = []
        used = 0
        for u, v in residual.edges:
            if used >> u & 1 or used >> v & 1:
                continue
            if is_positive_adj(residual.adj, chosen + [(u, v)]):
                chosen.append((u, v))
                used |= 1 << u | 1 << v
        parts.append(tuple(chosen))
        residual = residual.remove_edges(chosen)
    return Decomposition(g, tuple(parts))


def pmd_exact(g: Graph, budget: Budget | None = None, symmetry: bool = True, jobs: int = 1) -> tuple[int, Decomposition]:
    """Minimum number of parts, with a verified decomposition attaining it."""
    budget = budget or Budget.default()
    if g.m == 0:
        return 0, Decomposition(g, ())
    upper = greedy_pmd(g)
    start = time.monotonic()
    p = pmd_lower_bound(g)
    while p < upper.size:
        left = None if budget.seconds is None else budget.seconds - (time.monotonic() - start)
        if left is not None and left <= 0:
            raise BudgetExceeded("time budget exhausted", lower=p, upper=upper.size)
        out = pmd_decide(g, p, Budget(left, budget.nodes), symmetry, jobs=jobs)
        if out.found:
            return out.decomposition.size, out.decomposition
        if out.status == "budget":
            raise BudgetExceeded("budget exhausted", lower=p, upper=upper.size)
        p += 1
    return upper.size, upper


def naive_pmd(g: Graph) -> int:
    """Reference value by breadth-first search over residual edge sets.

    No pruning and no symmetry; meant for graphs with a handful of edges.
    """
    full = frozenset(g.edges)
    level = {full}
    seen = {full}
    k = 0
    while frozenset() not in level:
        k += 1
        nxt = set()
        for r in level:
            h = Graph(g.n, tuple(r))
            for m in enumerate_positive_matchings(h):
                s = r - set(m)
                if s not in seen:
                    seen.add(s)
                    nxt.add(s)
        level = nxt
    return k


# ------------------------------------------------------- staged Q4 check


Q4_CONFIGURATIONS: tuple[tuple[tuple[tuple[int, ...], int], ...], ...] = (
    # (sum of basis vectors, direction) for each edge x + e_i
    (((), 1), ((2,), 3), ((3,), 4), ((1, 4), 2)),
    (((), 1), ((2,), 3), ((3,), 4), ((1, 2, 4), 3)),
    (((), 1), ((2,), 3), ((3,), 4), ((1, 3, 4), 2)),
    (((), 1), ((2,), 4), ((3,), 4), ((1, 2, 4), 3)),
    (((), 1), ((2,), 4), ((3,), 4), ((1, 3, 4), 2)),
)


def q4_edge(base: Sequence[int], direction: int) -> Edge:
    """The edge ``{x, x + e_direction}`` of ``Q_4`` with ``x`` a sum of basis vectors."""
    x = 0
    for i in base:
        x ^= 1 << (i - 1)
    return norm_edge((x, x ^ 1 << (direction - 1)))


@dataclass(frozen=True)
class StagedConfig:
    m1: tuple[Edge, ...]
    is_positive: bool
    matchings_of_size_7: int
    positive_of_size_7: int


@dataclass(frozen=True)
class StagedReport:
    configs: tuple[StagedConfig, ...]

    @property
    def ok(self) -> bool:
        return all(c.is_positive and len(c.m1) == 4 and c.positive_of_size_7 == 0 for c in self.configs)


def q4_staged_verification(exhaustive: bool = True) -> StagedReport:
    """Check that no first part of the five configurations leaves a positive 7-matching.

    Every size-7 matching of ``Q_4 - M_1`` is tested.  With ``exhaustive=False``
    only matchings all of whose prefixes are positive are generated, which is
    equivalent since positivity passes to subsets.
    """
    g = hypercube(4)
    out = []
    for conf in Q4_CONFIGURATIONS:
        m1 = tuple(sorted(q4_edge(b, d) for b, d in conf))
        pos = check_positive(g, m1).positive
        h = g.remove_edges(m1)
        if exhaustive:
            total = positive = 0
            for m in matchings(h, 7):
                total += 1
                positive += is_positive_adj(h.adj, m)
        else:
            total = sum(1 for _ in matchings(h, 7))
            positive = sum(1 for _ in enumerate_positive_matchings(h, 7, 7))
        out.append(StagedConfig(m1, pos, total, positive))
    return StagedReport(tuple(out))


__all__ = [
    "Budget",
    "Decomposition",
    "PartReport",
    "PmdReport",
    "SolveOutcome",
    "StagedReport",
    "automorphisms",
    "greedy_pmd",
    "merge_parts",
    "naive_pmd",
    "pmd_decide",
    "pmd_exact",
    "pmd_lower_bound",
    "q4_staged_verification",
    "verify_pmd",
]
