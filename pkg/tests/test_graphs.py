import networkx as nx
import pytest
from conftest import to_nx

from pmdkit.errors import InvalidSpec
from pmdkit.graphs import (
    FamilySpec,
    Graph,
    NPBFamily,
    box_power,
    cartesian_product,
    circular_wall,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty_graph,
    generate_family,
    graph_stats,
    hypercube,
    join,
    multiply,
    npb_graph,
    parse_family,
    path,
    proper_coloring,
    star,
)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InvalidSpec):
        Graph(2, ((0, 0),))
    with pytest.raises(InvalidSpec):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(InvalidSpec):
        Graph(2, ((0, 2),))


def test_path_four():
    g = generate_family(FamilySpec("path", (4,)))
    assert (g.n, g.m, g.max_degree()) == (4, 3, 2)


def test_circular_wall_counts():
    g = generate_family(FamilySpec("wall", (2, 4)))
    assert (g.n, g.m) == (8, 10)
    for m in range(2, 6):
        for n in range(4, 12, 2):
            w = circular_wall(m, n)
            assert (w.n, w.m) == (m * n, m * n + (m - 1) * n // 2)
    with pytest.raises(InvalidSpec):
        circular_wall(2, 5)


def test_npb_figure_family():
    f = NPBFamily(2, {"0": 1, "00": 1, "10": 1, "11": 1, "01": 2, "1": 3})
    g = npb_graph(f)
    assert (g.n, g.m) == (9, 23)


def test_npb_sibling_rule():
    with pytest.raises(InvalidSpec):
        NPBFamily(2, {"0": 1, "1": 1, "00": 1})


def test_products():
    assert nx.is_isomorphic(to_nx(cartesian_product(path(2), path(2))), to_nx(cycle(4)))
    g = cartesian_product(path(3), path(3))
    assert (g.n, g.m) == (9, 12)
    t = cartesian_product(cycle(3), cycle(3))
    assert (t.n, t.m) == (9, 18) and set(t.degrees()) == {4}


@pytest.mark.parametrize("g1,g2", [(path(3), cycle(4)), (star(3), complete(3)), (cycle(5), path(2))])
def test_product_degrees(g1, g2):
    g = cartesian_product(g1, g2)
    assert g.m == g1.m * g2.n + g1.n * g2.m
    for a in range(g1.n):
        for b in range(g2.n):
            assert g.degree(a * g2.n + b) == g1.degree(a) + g2.degree(b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hypercube_is_power_of_k2(n):
    assert nx.is_isomorphic(to_nx(hypercube(n)), to_nx(box_power([path(2)] * n)))


def test_join():
    k1 = complete(1)
    assert join(k1, k1).edges == ((0, 1),)
    assert nx.is_isomorphic(to_nx(join(empty_graph(2), empty_graph(2))), to_nx(complete_bipartite(2, 2)))
    assert join(complete(3), disjoint_union(complete(1), complete(3))).m == 18


def test_multiply():
    assert multiply(path(2), 3).mult == {(0, 1): 3}
    assert multiply(cycle(3), 1).edge_count == 3
    assert multiply(cycle(4), 2).edge_count == 8
    with pytest.raises(InvalidSpec):
        multiply(path(2), 0)


@pytest.mark.parametrize(
    "g,chi", [(cycle(5), 3), (complete(4), 4), (cartesian_product(path(3), cycle(6)), 2), (cartesian_product(cycle(3), cycle(3)), 3)]
)
def test_exact_coloring(g, chi):
    col = proper_coloring(g)
    assert col.is_proper(g) and col.num_colors == chi


def test_greedy_coloring_is_proper():
    g = cartesian_product(cycle(5), cycle(7))
    assert proper_coloring(g, "greedy").is_proper(g)


def test_graph_stats():
    assert graph_stats(cycle(6)) == (2, 2, True, 1)
    assert graph_stats(star(3)) == (3, 1, False, 1)
    assert graph_stats(cartesian_product(cycle(3), cycle(3))) == (4, 4, True, 1)


def test_parse_family():
    assert parse_family("cycle:6") == FamilySpec("cycle", (6,))
    g = generate_family(parse_family("pmcn:3,7"))
    assert (g.n, g.m) == (21, 21 + 14)
    g = generate_family(parse_family("path:3 x cycle:4"))
    assert g.n == 12
    f = parse_family("npb:0=1,1=3,00=1,01=2,10=1,11=1")
    assert generate_family(f).n == 9
    with pytest.raises(InvalidSpec):
        generate_family(parse_family("cycle:2"))
