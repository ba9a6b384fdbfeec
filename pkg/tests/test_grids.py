import pytest

from pmdkit.errors import OutOfRange
from pmdkit.graphs import path, star
from pmdkit.grids import (
    CW,
    CmCn,
    PmCn,
    TreeProduct,
    claimed_parts,
    construct_grid,
    insert_rows,
    prism_parts,
)
from pmdkit.solver import verify_pmd


@pytest.mark.parametrize(
    "kind,val", [(PmCn(3, 7), 4), (CW(2, 6), 3), (CW(3, 6), 4), (CmCn(4, 4), 6), (CmCn(3, 3), 6), (CmCn(3, 4), 6)]
)
def test_examples(kind, val):
    d = construct_grid(kind)
    assert d.size == val and verify_pmd(d.graph, d).ok


def _sweep(kinds):
    for k in kinds:
        d = construct_grid(k)
        assert d.size == claimed_parts(k), k
        assert verify_pmd(d.graph, d).ok, k


def test_pmcn_sweep():
    _sweep(PmCn(m, n) for m in range(3, 7) for n in range(3, 20))


def test_cmcn_sweep():
    _sweep(CmCn(m, n) for m in range(3, 11) for n in range(3, 11))


def test_cw_sweep():
    _sweep(CW(m, n) for m in range(2, 6) for n in range(4, 20, 2))


def test_tree_kind():
    d = construct_grid(TreeProduct((star(3), path(3))))
    assert d.size == 5


@pytest.mark.parametrize("kind", [PmCn(2, 5), CmCn(3, 2), CW(2, 5), CW(1, 4), TreeProduct(())])
def test_out_of_range(kind):
    with pytest.raises(OutOfRange):
        construct_grid(kind)


def test_prism_pattern():
    with pytest.raises(OutOfRange):
        prism_parts(5)
    assert len(prism_parts(6)) >= 1


def test_insert_rows_keeps_edges():
    base = construct_grid(CmCn(4, 4))
    parts = insert_rows([list(p) for p in base.parts], 4, 4, 0)
    assert sum(map(len, parts)) == 6 * 4 * 2
