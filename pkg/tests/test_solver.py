import pytest
from conftest import atlas

from pmdkit.graphs import cartesian_product, cycle, disjoint_union, path, star
from pmdkit.solver import (
    Budget,
    Decomposition,
    greedy_pmd,
    naive_pmd,
    pmd_decide,
    pmd_exact,
    pmd_lower_bound,
    q4_staged_verification,
    verify_pmd,
)

C4 = cycle(4)
C3C3 = cartesian_product(cycle(3), cycle(3))


def test_verify_examples():
    assert verify_pmd(cycle(3), [[(0, 1)], [(1, 2)], [(0, 2)]]).ok
    bad = verify_pmd(C4, [[(0, 1), (2, 3)], [(1, 2)], [(0, 3)]])
    assert not bad.ok and bad.first_failure == 0
    assert verify_pmd(C4, [[(0, 1)], [(1, 2), (0, 3)], [(2, 3)]]).ok


def test_verify_rejects_non_partition():
    rep = verify_pmd(C4, [[(0, 1)], [(1, 2)]])
    assert not rep.ok and not rep.partition_ok


@pytest.mark.parametrize("g,lb", [(cycle(5), 3), (C3C3, 5), (path(4), 2), (star(4), 4)])
def test_lower_bound(g, lb):
    assert pmd_lower_bound(g) == lb


def test_decide_examples():
    assert pmd_decide(C4, 2).impossible
    out = pmd_decide(path(4), 2)
    assert out.found and sorted(map(len, out.decomposition.parts)) == [1, 2]
    assert pmd_decide(C3C3, 5).impossible


@pytest.mark.parametrize(
    "g,val",
    [(cartesian_product(path(2), cycle(4)), 5), (cartesian_product(path(2), path(5)), 3), (cycle(6), 3)],
)
def test_exact_values(g, val):
    k, d = pmd_exact(g)
    assert k == val and d.size == val and verify_pmd(g, d).ok


def test_exact_matches_naive_on_small_graphs():
    for g in atlas(6):
        if g.m > 8:
            continue
        assert pmd_exact(g)[0] == naive_pmd(g)


def test_symmetry_does_not_change_answers():
    for g in atlas(5):
        for p in range(1, 5):
            assert pmd_decide(g, p, symmetry=True).status == pmd_decide(g, p, symmetry=False).status


def test_disjoint_union_is_max():
    g = disjoint_union(cycle(5), path(4))
    assert pmd_exact(g)[0] == 3


def test_greedy_is_valid_upper_bound():
    for g in atlas(5):
        d = greedy_pmd(g)
        assert verify_pmd(g, d).ok and d.size >= pmd_exact(g)[0]


def test_budget_exhaustion():
    out = pmd_decide(cartesian_product(cycle(4), cycle(4)), 5, Budget(nodes=10))
    assert out.status == "budget"


def test_certificates_attach():
    d = pmd_exact(cycle(5))[1].with_certificates()
    assert isinstance(d, Decomposition) and verify_pmd(cycle(5), d).ok


def test_q4_staged():
    rep = q4_staged_verification(exhaustive=False)
    assert rep.ok and len(rep.configs) == 5
