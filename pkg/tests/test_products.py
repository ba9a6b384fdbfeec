import pytest

from pmdkit.errors import HypothesisViolated, InvalidCover, NotATree
from pmdkit.graphs import (
    Graph,
    cartesian_product,
    complete,
    cycle,
    hypercube,
    path,
    proper_coloring,
    star,
)
from pmdkit.products import (
    afe_cover_construction,
    construct_tree_product,
    forest_bound_1,
    forest_bound_1_value,
    forest_bound_2,
    forest_bound_2_value,
    forest_decomposition,
    is_afe,
    is_forest_decomposition,
    product_pmd_basic,
    tree_box_construction,
    tree_product_value,
)
from pmdkit.solver import Decomposition, pmd_exact, verify_pmd


def ok(d: Decomposition) -> bool:
    return verify_pmd(d.graph, d).ok


@pytest.mark.parametrize("g,k", [(path(5), 1), (star(4), 1), (cycle(4), 2), (complete(4), 3)])
def test_forest_decomposition(g, k):
    fd = forest_decomposition(g)
    assert len(fd.forests) == k and is_forest_decomposition(fd)


def test_basic_product_on_k2_k2():
    d = product_pmd_basic(path(2), path(2))
    assert d.size == 3 == pmd_exact(cycle(4))[0] and ok(d)


@pytest.mark.parametrize("g1,g2", [(cycle(5), cycle(4)), (complete(3), path(3)), (path(3), complete(4))])
def test_basic_product_size(g1, g2):
    d = product_pmd_basic(g1, g2)
    p1, p2 = pmd_exact(g1)[0], pmd_exact(g2)[0]
    assert ok(d) and d.size == p1 * proper_coloring(g2).num_colors + p2


def test_tree_box():
    t = star(3)
    d = tree_box_construction(t, cycle(5))
    assert ok(d) and d.size == max(3, 3) + 3
    with pytest.raises(NotATree):
        tree_box_construction(cycle(4), path(2))


def test_forest_bound_1():
    d = forest_bound_1(path(4), cycle(4))
    assert ok(d) and d.size == tree_box_construction(path(4), cycle(4)).size
    d = forest_bound_1(cycle(4), path(2))
    assert ok(d) and d.size <= 6 and d.size <= forest_bound_1_value(cycle(4), path(2))


def test_afe_cover_trivial():
    g2 = cycle(6)
    pmd1 = Decomposition(path(2), (((0, 1),),))
    d = afe_cover_construction(path(2), g2, pmd1, None, [[0], [0]])
    assert ok(d) and d.size == 2 + 3


def test_afe_cover_c5():
    c5 = cycle(5)
    pmd1 = Decomposition(c5, (((0, 1), (2, 3)), ((1, 2),), ((3, 4),), ((0, 4),)))
    assert verify_pmd(c5, pmd1).ok
    cover = [[0, 1], [2, 3], [0, 1, 2, 3]]
    assert all(is_afe(c5, [pmd1.parts[i] for i in c]) for c in cover[:2])
    with pytest.raises(InvalidCover):
        afe_cover_construction(c5, cycle(4), pmd1, None, [[0, 1, 2, 3], [0, 1, 2, 3]])


def test_afe_cover_c6():
    from pmdkit.covers import kappa_search, pmd_order, tau_n_cover

    c6 = cycle(6)
    fam = kappa_search(c6, 2, 3).family
    pmd1 = Decomposition(c6, tuple(fam[i] for i in pmd_order(c6, fam)))
    cover = tau_n_cover(c6, pmd1.parts, 2)
    assert cover.size == 3 and cover.is_valid
    d = afe_cover_construction(c6, cycle(4), pmd1, None, [list(c) for c in cover.subfamilies])
    assert ok(d) and d.size == 6


def test_no_cover_when_a_part_is_not_acyclic():
    from pmdkit.covers import tau_n_cover
    from pmdkit.errors import NoCover

    c6 = cycle(6)
    with pytest.raises(NoCover):
        tau_n_cover(c6, [[(0, 1), (2, 3)], [(0, 5), (1, 2), (3, 4)], [(4, 5)]], 1)


def test_forest_bound_2():
    t = path(4)
    g2 = cycle(6)
    d = forest_bound_2(t, g2)
    assert ok(d) and d.size <= pmd_exact(g2)[0] + max(t.max_degree(), 2)
    assert d.size <= forest_bound_2_value(t, g2)
    with pytest.raises(HypothesisViolated):
        forest_bound_2(complete(6), path(2))


@pytest.mark.parametrize(
    "trees,val",
    [((path(3), path(4)), 4), ((path(2),) * 3, 5), ((path(5), path(2)), 3), ((star(3), path(2), path(3)), 6)],
)
def test_tree_products(trees, val):
    assert tree_product_value(list(trees)) == val
    d = construct_tree_product(list(trees))
    assert ok(d) and d.size == val


def test_hypercube_upper_bound():
    d = construct_tree_product([path(2)] * 4)
    assert d.size == 7 and ok(d)
    assert sorted(d.graph.degrees()) == sorted(hypercube(4).degrees())


def test_rejects_non_tree_factor():
    with pytest.raises(NotATree):
        construct_tree_product([cycle(3)])
    assert isinstance(Graph(1, ()), Graph)
