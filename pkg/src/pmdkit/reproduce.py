"""Reproduction of the exact values, sweeps and cross-checks behind the library.

:func:`reproduce_tables` runs numbered checks and returns one :class:`Row`
per checked value.  Checks 1, 7 and 10 enumerate graphs from the networkx
graph atlas and need the optional ``networkx`` package.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .covers import (
    k_subset_cover,
    k_subset_cover_min,
    kappa,
    kappa_cycle_closed_form,
    min_acyclic_ordered_kpartitions,
    npb_rho_report,
    npb_violation,
    recognize_complete_multipartite,
    recognize_npb,
    rho,
)
from .errors import BudgetExceeded, OutOfDomain
from .graphs import (
    Graph,
    MultiGraph,
    NPBFamily,
    cartesian_product,
    chromatic_number,
    circular_wall,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    hypercube,
    join,
    npb_adjacent,
    path,
    star,
)
from .grids import CW, CmCn, PmCn, TreeProduct, claimed_parts, construct_grid
from .latin import build_glr, multiset_partitions, random_multiset_partition, verify_glr
from .positivity import (
    check_positive,
    find_alternating_walk,
    matchings,
    replay_pendant_order,
    replay_walk,
    verify_certificate,
    weight_certificate,
)
from .products import (
    construct_tree_product,
    forest_bound_1,
    forest_bound_1_value,
    forest_decomposition,
    product_pmd_basic,
    tree_box_construction,
    tree_product_value,
)
from .solver import Budget, pmd_decide, pmd_exact, q4_staged_verification, verify_pmd

DEFAULT_ROW_SECONDS = 60.0
LONG_ROW_SECONDS = 1800.0


@dataclass
class Row:
    key: str
    criterion: int
    expected: object
    computed: object
    status: str
    seconds: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    rows: list[Row] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def failed(self) -> int:
        return len(self.rows) - self.passed

    def to_json(self) -> dict:
        return {"passed": self.passed, "failed": self.failed, "rows": [asdict(r) for r in self.rows]}

    def for_criterion(self, k: int) -> list[Row]:
        return [r for r in self.rows if r.criterion == k]


def _row(key: str, crit: int, expected, computed, ok: bool, t0: float, note: str = "") -> Row:
    return Row(key, crit, expected, computed, "pass" if ok else "fail", round(time.monotonic() - t0, 3), note)


def _atlas(max_nodes: int, connected: bool = True) -> list[Graph]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_nodes or (connected and not nx.is_connected(h)):
            continue
        out.append(Graph(h.number_of_nodes(), tuple(h.edges())))
    return out


# -------------------------------------------------------------- checks


def check_positivity_equivalence(seconds: float) -> list[Row]:
    t0 = time.monotonic()
    total = disagree = 0
    for g in _atlas(6):
        for k in range(1, g.n // 2 + 1):
            for m in matchings(g, k):
                total += 1
                wit = check_positive(g, m)
                walk = find_alternating_walk(g, m)
                if wit.positive:
                    ok = walk is None and replay_pendant_order(g, wit.edges)
                    ok = ok and verify_certificate(g, m, weight_certificate(g, m))
                else:
                    ok = walk is not None and replay_walk(g, m, walk) and replay_walk(g, m, wit)
                disagree += not ok
    return [_row("three positivity checkers agree (connected, <= 6 vertices)", 1, 0, disagree, disagree == 0, t0, f"{total} matchings")]


def _exact_row(key: str, g: Graph, expected: int, seconds: float, crit: int = 2) -> Row:
    t0 = time.monotonic()
    try:
        value, d = pmd_exact(g, Budget(seconds))
    except BudgetExceeded as exc:
        return Row(key, crit, expected, f"[{exc.lower}, {exc.upper}]", "budget", round(time.monotonic() - t0, 3))
    ok = value == expected and verify_pmd(g, d).ok
    return _row(key, crit, expected, value, ok, t0)


def exact_table(seconds: float = DEFAULT_ROW_SECONDS, long_seconds: float = LONG_ROW_SECONDS) -> list[Row]:
    p2 = path(2)
    rows = [_exact_row(f"pmd(P_{n})", path(n), 2, seconds) for n in range(3, 9)]
    rows += [_exact_row(f"pmd(C_{n})", cycle(n), 3, seconds) for n in range(3, 9)]
    rows += [_exact_row(f"pmd(P_2 x P_{n})", cartesian_product(p2, path(n)), 3, seconds) for n in range(3, 7)]
    rows += [_exact_row(f"pmd(P_2 x C_{n})", cartesian_product(p2, cycle(n)), v, seconds) for n, v in ((4, 5), (5, 4), (6, 4))]
    rows.append(_exact_row("pmd(P_3 x P_3)", cartesian_product(path(3), path(3)), 4, seconds))
    rows.append(_exact_row("pmd(Q_3)", hypercube(3), 5, seconds))
    rows.append(_exact_row("pmd(CW(2,4))", circular_wall(2, 4), 4, seconds))
    rows.append(_exact_row("pmd(CW(2,6))", circular_wall(2, 6), 3, seconds))
    rows += [_exact_row(f"pmd(P_3 x C_{n})", cartesian_product(path(3), cycle(n)), 5, long_seconds) for n in range(3, 7)]
    return rows


def check_c3c3(seconds: float = 7200.0) -> list[Row]:
    t0 = time.monotonic()
    g = cartesian_product(cycle(3), cycle(3))
    out = pmd_decide(g, 5, Budget(seconds))
    d = construct_grid(CmCn(3, 3))
    ok = out.impossible and d.size == 6 and verify_pmd(g, d).ok
    return [_row("pmd(C_3 x C_3)", 3, 6, 6 if ok else out.status, ok, t0, f"p=5: {out.status}")]


def check_q4(seconds: float = 1800.0) -> list[Row]:
    t0 = time.monotonic()
    rep = q4_staged_verification()
    found = [c.positive_of_size_7 for c in rep.configs]
    note = "size-7 matchings per configuration: " + ", ".join(str(c.matchings_of_size_7) for c in rep.configs)
    return [_row("Q_4 staged: positive 7-matchings after each first part", 4, [0] * 5, found, rep.ok, t0, note)]


_SMALL = {
    "P3": path(3),
    "P4": path(4),
    "C3": cycle(3),
    "C4": cycle(4),
    "C5": cycle(5),
    "K2": path(2),
    "K4": complete(4),
    "K13": star(3),
}


def check_constructions() -> list[Row]:
    rows = []
    pmd = {k: pmd_exact(g)[0] for k, g in _SMALL.items()}
    chi = {k: chromatic_number(g) for k, g in _SMALL.items()}

    t0 = time.monotonic()
    bad = []
    for a, b in itertools.product(_SMALL, repeat=2):
        d = product_pmd_basic(_SMALL[a], _SMALL[b])
        if d.size != pmd[a] * chi[b] + pmd[b] or not verify_pmd(d.graph, d).ok:
            bad.append(f"{a}x{b}")
    rows.append(_row("p1*chi2 + p2 construction, all pairs", 5, [], bad, not bad, t0))

    t0 = time.monotonic()
    bad = []
    for a, b in itertools.product(_SMALL, repeat=2):
        g1, g2 = _SMALL[a], _SMALL[b]
        if g1.is_tree():
            d = tree_box_construction(g1, g2)
            want = max(g1.max_degree(), chi[b]) + pmd[b]
            ok = d.size == want
        else:
            d = forest_bound_1(g1, g2)
            want = sum(max(x, chi[b]) for x in forest_decomposition(g1).max_degrees()) + pmd[b]
            ok = d.size == want and d.size <= forest_bound_1_value(g1, g2)
        if not ok or not verify_pmd(d.graph, d).ok:
            bad.append(f"{a}x{b}")
    rows.append(_row("forest / tree Latin-rectangle construction, all pairs", 5, [], bad, not bad, t0))

    t0 = time.monotonic()
    trees = ["K2", "P3", "P4", "K13"]
    bad = []
    for r in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(trees, r):
            ts = [_SMALL[k] for k in combo]
            d = construct_tree_product(ts)
            if d.size != tree_product_value(ts) or not verify_pmd(d.graph, d).ok:
                bad.append("x".join(combo))
    rows.append(_row("tree products up to three factors", 5, [], bad, not bad, t0))

    for name, kind, cases in (
        ("P_m x C_n", PmCn, [(m, n) for m in range(3, 11) for n in range(3, 11)]),
        ("C_m x C_n", CmCn, [(m, n) for m in range(3, 11) for n in range(3, 11)]),
        ("CW(m,n)", CW, [(m, n) for m in range(3, 11) for n in range(4, 11, 2)]),
    ):
        t0 = time.monotonic()
        bad = []
        for m, n in cases:
            k = kind(m, n)
            d = construct_grid(k)
            if d.size != claimed_parts(k) or not verify_pmd(d.graph, d).ok:
                bad.append(f"({m},{n})")
        rows.append(_row(f"grid constructions {name}, m, n in 3..10", 5, [], bad, not bad, t0, f"{len(cases)} cases"))
    return rows


def check_kappa_cycles(seconds: float = 1800.0) -> list[Row]:
    t0 = time.monotonic()
    bad = []
    count = 0
    for m in range(3, 7):
        for p in range(3, m + 1):
            if (m, p) == (4, 3):
                continue
            for n in range(1, 4):
                count += 1
                got = kappa(cycle(m), n, p, Budget(seconds))
                want = kappa_cycle_closed_form(m, n, p)
                if got != want:
                    bad.append(f"(m={m},p={p},n={n}): {got} != {want}")
    return [_row("kappa of cycles by enumeration vs closed form", 6, [], bad, not bad, t0, f"{count} triples")]


def check_rho() -> list[Row]:
    t0 = time.monotonic()
    bad_oracle = bad_prune = count = 0
    for g in _atlas(5, connected=False):
        if not g.m:
            continue
        for mult in itertools.product((1, 2), repeat=g.m):
            mg = MultiGraph(g.n, dict(zip(g.edges, mult)))
            count += 1
            f = rho(mg)
            bad_oracle += f != rho(mg, "oracle")
            bad_prune += f != rho(mg, prune=False)
    return [
        _row("rho formula vs forest-cover oracle", 7, 0, bad_oracle, bad_oracle == 0, t0, f"{count} multigraphs"),
        _row("rho with and without half-set pruning", 7, 0, bad_prune, bad_prune == 0, t0, f"{count} multigraphs"),
    ]


def check_subset_covers() -> list[Row]:
    t0 = time.monotonic()
    bad = []
    for n, m, k in itertools.product(range(1, 6), repeat=3):
        if k > m:
            continue
        sets = k_subset_cover(n, m, k)
        want = -(-n * m // k)
        covered = all(sum(x in s for s in sets) >= n for x in range(1, m + 1))
        if len(sets) != want or not covered or k_subset_cover_min(n, m, k) != want:
            bad.append((n, m, k))
    return [_row("k-subset covers: size and brute-force minimum", 8, [], bad, not bad, t0)]


def check_glr(samples: int = 500, seed: int = 2024) -> list[Row]:
    t0 = time.monotonic()
    count = bad = 0
    for n in range(1, 5):
        for m in range(1, n + 1):
            for part in multiset_partitions(m, n):
                count += 1
                bad += not verify_glr(build_glr(part), part)
    rows = [_row("generalized Latin rectangles, m <= n <= 4 exhaustive", 9, 0, bad, bad == 0, t0, f"{count} partitions")]
    t0 = time.monotonic()
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        n = rng.randint(1, 8)
        part = random_multiset_partition(rng.randint(1, n), n, rng)
        bad += not verify_glr(build_glr(part), part)
    rows.append(_row("generalized Latin rectangles, random n <= 8", 9, 0, bad, bad == 0, t0, f"{samples} samples, seed {seed}"))
    return rows


def _disjoint_pairs_induce_cycles(g: Graph) -> bool:
    for e, f in itertools.combinations(g.edges, 2):
        vs = set(e) | set(f)
        if len(vs) < 4:
            continue
        sub = g.induced(sorted(vs))
        if sub.m == 4 - len(sub.components()):
            return False
    return True


def check_recognition() -> list[Row]:
    t0 = time.monotonic()
    bad = count = 0
    for g in _atlas(7):
        if g.n < 2:
            continue
        count += 1
        r = recognize_npb(g)
        direct = _disjoint_pairs_induce_cycles(g)
        if r.is_npb != direct:
            bad += 1
        elif r.is_npb:
            lab = r.owner
            bad += any(npb_adjacent(lab[u], lab[v]) != g.has_edge(u, v) for u, v in itertools.combinations(range(g.n), 2))
        else:
            e, f = r.witness
            bad += npb_violation(g) != (e, f)
    rows = [_row("NPB recognition vs disjoint-edge predicate", 10, 0, bad, bad == 0, t0, f"{count} connected graphs")]
    t0 = time.monotonic()
    bad = count = 0
    for total in range(2, 9):
        for sizes in _partitions(total):
            if len(sizes) < 2:
                continue
            count += 1
            rec = recognize_complete_multipartite(complete_multipartite(sizes))
            bad += rec.sizes != tuple(sorted(sizes))
    rows.append(_row("complete multipartite roundtrip", 10, 0, bad, bad == 0, t0, f"{count} profiles"))
    return rows


def _partitions(n: int, top: int | None = None) -> Iterable[tuple[int, ...]]:
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for k in range(min(n, top), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def check_kab(seconds: float = 600.0) -> list[Row]:
    rows = []
    for a in range(1, 4):
        for b in range(a, 4):
            t0 = time.monotonic()
            k, fam = min_acyclic_ordered_kpartitions(a, b, Budget(seconds))
            g = complete_bipartite(a, b)
            kap = kappa(g, 1, a * b, Budget(seconds))
            r = rho(g)
            rows.append(_row(f"K_{a},{b}: ordered partitions = kappa = rho", 11, k, [k, kap, r], k == kap == r, t0))
    return rows


def remark_graph() -> Graph:
    inner = join(complete(3), disjoint_union(empty_graph(5), complete(3)))
    return join(complete(3), disjoint_union(complete(1), inner))


def check_npb_remark() -> list[Row]:
    t0 = time.monotonic()
    fam = recognize_npb(remark_graph()).family
    rep = npb_rho_report(fam, 1)
    got = {"max": rep.value, "|X| at max": len(rep.argmax), "|X'|": len(rep.core), "X'": rep.at_core, "V": rep.at_all}
    want = {"max": 6, "|X| at max": 14, "|X'|": 9, "X'": 5, "V": 5}
    return [_row("restricted maximum on K3*(K1+(K3*(5K1+K3)))", 12, want, got, got == want, t0)]


CHECKS: dict[int, Callable[[float], list[Row]]] = {
    1: check_positivity_equivalence,
    2: lambda s: exact_table(s, max(s, LONG_ROW_SECONDS)),
    3: lambda s: check_c3c3(max(s, 7200.0)),
    4: check_q4,
    5: lambda s: check_constructions(),
    6: check_kappa_cycles,
    7: lambda s: check_rho(),
    8: lambda s: check_subset_covers(),
    9: lambda s: check_glr(),
    10: lambda s: check_recognition(),
    11: check_kab,
    12: lambda s: check_npb_remark(),
}

NEEDS_ATLAS = (1, 7, 10)


def reproduce_tables(seconds: float = DEFAULT_ROW_SECONDS, criteria: Iterable[int] | None = None) -> Report:
    report = Report()
    for k in criteria or sorted(CHECKS):
        if k not in CHECKS:
            raise OutOfDomain(f"no check numbered {k}")
        try:
            report.rows.extend(CHECKS[k](seconds))
        except BudgetExceeded as exc:
            report.rows.append(Row(f"check {k}", k, None, None, "budget", 0.0, str(exc)))
        except ImportError as exc:
            report.rows.append(Row(f"check {k}", k, None, None, "fail", 0.0, f"needs networkx: {exc}"))
    return report


__all__ = ["CHECKS", "Report", "Row", "remark_graph", "reproduce_tables"]
