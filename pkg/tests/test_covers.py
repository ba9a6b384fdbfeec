import itertools
from fractions import Fraction

import networkx as nx
import pytest
from conftest import atlas, to_nx
from hypothesis import given, settings
from hypothesis import strategies as st

from pmdkit.errors import Disconnected, InvalidInput, InvalidParams, NoCover, OutOfDomain
from pmdkit.graphs import (
    Graph,
    MultiGraph,
    NPBFamily,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    multiply,
    npb_graph,
    path,
    star,
)
from pmdkit.covers import (
    CoverSolution,
    is_acyclic_partition_family,
    is_afe,
    is_eps_graph,
    is_eps_set,
    k_subset_cover,
    k_subset_cover_min,
    kappa,
    kappa_cycle_closed_form,
    kappa_npb_rho_restricted,
    maximal_afe_subfamilies,
    min_acyclic_ordered_kpartitions,
    non_eps_set,
    npb_rho_report,
    recognize_complete_multipartite,
    recognize_npb,
    rho,
    tau_n_cover,
)

C5_PMD = [[(0, 1), (2, 3)], [(1, 2)], [(3, 4)], [(0, 4)]]


def test_afe_examples():
    assert is_afe(path(5), [[(0, 1), (2, 3)]])
    assert not is_afe(cycle(3), [[(0, 1)], [(1, 2)], [(0, 2)]])
    assert not is_afe(cycle(4), [[(0, 1), (2, 3)]])
    assert is_afe(cycle(4), [[(0, 1)], [(2, 3)]])


def test_maximal_subfamilies_of_c3():
    fam = [[(0, 1)], [(1, 2)], [(0, 2)]]
    assert sorted(maximal_afe_subfamilies(cycle(3), fam)) == [(0, 1), (0, 2), (1, 2)]


def test_tau_examples():
    assert tau_n_cover(cycle(3), [[(0, 1)], [(1, 2)], [(0, 2)]], 1).size == 2
    c = tau_n_cover(cycle(5), C5_PMD, 2)
    assert c.size == 3 and c.is_valid()
    assert tau_n_cover(path(3), [[(0, 1)], [(1, 2)]], 1).size == 1


def test_cover_json_is_one_based():
    c = tau_n_cover(cycle(5), C5_PMD, 2)
    doc = c.to_json()
    assert min(i for s in doc["subfamilies"] for i in s) == 1
    back = CoverSolution.from_json(doc, cycle(5), C5_PMD, 2)
    assert back == c


def test_kappa_examples():
    assert kappa(cycle(6), 1, 3) == 2
    assert kappa(cycle(5), 2, 4) == 3
    assert kappa(cycle(5), 2, 5) == 3


def test_kappa_c4_three_parts_has_no_cover():
    with pytest.raises(NoCover):
        kappa(cycle(4), 1, 3)


def test_kappa_matches_closed_form():
    for m in range(3, 7):
        for p in range(3, m + 1):
            if (m, p) == (4, 3):
                continue
            for n in (1, 2, 3):
                assert kappa(cycle(m), n, p) == kappa_cycle_closed_form(m, n, p), (m, n, p)


def test_closed_form():
    assert kappa_cycle_closed_form(6, 2, 3) == 3
    assert kappa_cycle_closed_form(5, 2, 4) == 3
    with pytest.raises(OutOfDomain):
        kappa_cycle_closed_form(4, 1, 3)


def test_rho_examples():
    assert rho(complete(4)) == 2
    assert rho(multiply(cycle(3), 2)) == 3 == rho(multiply(cycle(3), 2), mode="oracle")
    assert rho(star(5)) == 1 and rho(path(6)) == 1


def test_rho_formula_vs_oracle():
    for g in atlas(5, connected=False):
        if g.m == 0:
            continue
        for k in (1, 2):
            mg = multiply(g, k)
            val = rho(mg, mode="oracle")
            assert rho(mg) == val == rho(mg, prune=False)


def test_rho_mixed_multiplicities():
    mg = MultiGraph(4, {(0, 1): 3, (1, 2): 1, (2, 3): 2, (0, 3): 1})
    assert rho(mg) == rho(mg, mode="oracle")


def test_eps_sets():
    k5 = complete(5)
    for r in range(1, 5):
        assert is_eps_set(k5, range(r), Fraction(1, 2))
    assert is_eps_set(star(3), [1, 2, 3], Fraction(1, 2))
    # removing one vertex of C5 leaves a set its two neighbours dominate at 1/2
    assert is_eps_set(cycle(5), [1, 2, 3, 4], Fraction(1, 2))
    assert not is_eps_graph(cycle(5), Fraction(1, 2))
    assert non_eps_set(cycle(5), Fraction(1, 2)) == (0, 1, 2)
    assert is_eps_graph(complete(4), Fraction(1, 2))
    with pytest.raises(InvalidParams):
        is_eps_set(k5, [0], 2)


def test_npb_examples():
    r = recognize_npb(path(4))
    assert not r.is_npb and r.witness == ((0, 1), (2, 3))
    r = recognize_npb(complete(4))
    assert r.is_npb
    assert nx.is_isomorphic(to_nx(npb_graph(r.family)), to_nx(complete(4)))
    with pytest.raises(Disconnected):
        recognize_npb(disjoint_union(path(2), path(2)))
    with pytest.raises(InvalidInput):
        recognize_npb(Graph(1, ()))


def _direct_npb(g):
    for e, f in itertools.combinations(g.edges, 2):
        if len(set(e) | set(f)) == 4:
            h = nx.Graph(to_nx(g).subgraph(e + f))
            if nx.is_forest(h):
                return False
    return True


def test_npb_matches_predicate_on_atlas():
    for g in atlas(6):
        if g.n >= 2:
            assert recognize_npb(g).is_npb == _direct_npb(g)


@st.composite
def npb_families(draw):
    depth = draw(st.integers(1, 3))
    sizes = {}
    for k in range(1, depth + 1):
        for t in itertools.product("01", repeat=k - 1):
            if draw(st.booleans()) or k == 1:
                a, b = draw(st.integers(1, 2)), draw(st.integers(1, 2))
                sizes["".join(t) + "0"], sizes["".join(t) + "1"] = a, b
    return NPBFamily(depth, sizes)


@settings(max_examples=120, deadline=None)
@given(npb_families())
def test_npb_roundtrip(f):
    g = npb_graph(f)
    if g.n > 8 or g.n < 2 or not g.is_connected():
        return
    r = recognize_npb(g)
    assert r.is_npb
    assert nx.is_isomorphic(to_nx(npb_graph(r.family)), to_nx(g))


def test_multipartite_examples():
    assert recognize_complete_multipartite(cycle(4)).sizes == (2, 2)
    r = recognize_complete_multipartite(cycle(5))
    assert not r.is_multipartite and r.witness == (0, (2, 3))
    assert recognize_complete_multipartite(complete_multipartite([3, 1, 2])).sizes == (1, 2, 3)


def test_subset_covers():
    assert len(k_subset_cover(2, 3, 2)) == 3
    assert k_subset_cover(1, 4, 4) == [[1, 2, 3, 4]]
    cov = k_subset_cover(3, 4, 2)
    assert len(cov) == 6
    assert all(sum(i in s for s in cov) >= 3 for i in range(1, 5))
    assert k_subset_cover_min(3, 4, 2) == 6


def test_acyclic_partitions():
    assert min_acyclic_ordered_kpartitions(1, 4)[0] == 1
    for a, b in [(2, 2), (2, 3)]:
        k, fam = min_acyclic_ordered_kpartitions(a, b)
        assert k == 2 == rho(complete_bipartite(a, b))
        assert is_acyclic_partition_family(b, fam)


def test_npb_rho_restricted():
    k4 = NPBFamily(1, {"0": 2, "1": 2})
    assert kappa_npb_rho_restricted(NPBFamily(2, {"0": 1, "1": 1, "10": 1, "11": 1})) >= 1
    assert kappa_npb_rho_restricted(k4, 2) == 3 == rho(multiply(complete_bipartite(2, 2), 2), mode="oracle")


def test_remark_graph_values():
    from pmdkit.reproduce import remark_graph

    r = recognize_npb(remark_graph())
    rep = npb_rho_report(r.family)
    assert rep.value == 6 and len(rep.argmax) == 14
    assert rep.at_all == 5
    assert rho(remark_graph()) == 6
