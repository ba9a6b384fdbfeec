import random

import pytest

from pmdkit.errors import AlreadySquare, Infeasible, InvalidPartition
from pmdkit.latin import (
    MultisetPartition,
    build_glr,
    complete_partial_latin_rectangle,
    cyclic_latin_rectangle,
    extend_latin_rectangle,
    glr_by_edge_coloring,
    multiset_partitions,
    random_multiset_partition,
    verify_glr,
)


def test_verify_glr_basic():
    assert verify_glr([[1, 2], [2, 1]])
    assert not verify_glr([[1, 1]])
    assert not verify_glr([[1], [1]])


@pytest.mark.parametrize(
    "m,n,parts",
    [(1, 2, [{1}, {1}]), (2, 2, [{1, 2}, {1, 2}]), (2, 3, [{1, 2}] * 3), (2, 3, [{1}, {2}, {1, 2}, {1, 2}])],
)
def test_build_glr(m, n, parts):
    part = MultisetPartition.of(m, n, parts)
    rows = build_glr(part)
    assert len(rows) == m and all(len(r) == n for r in rows)
    assert verify_glr(rows, part)
    assert verify_glr(glr_by_edge_coloring(part), part)


def test_build_glr_needs_m_at_most_n():
    with pytest.raises(InvalidPartition):
        build_glr(MultisetPartition.of(2, 1, [{1}, {2}]))


def test_invalid_partition():
    with pytest.raises(InvalidPartition):
        MultisetPartition.of(2, 2, [{1}, {1, 2}])
    with pytest.raises(InvalidPartition):
        MultisetPartition.of(2, 1, [{1, 2}, set()])


def test_partition_counts_and_exhaustive_small():
    for m in range(1, 4):
        for n in range(m, 4):
            for part in multiset_partitions(m, n):
                assert verify_glr(build_glr(part), part)


def test_random_partitions():
    rng = random.Random(7)
    for _ in range(30):
        part = random_multiset_partition(4, 5, rng)
        assert verify_glr(build_glr(part), part)


def test_complete_partial():
    assert verify_glr(complete_partial_latin_rectangle([[0, 0, 0], [0, 0, 0]], 3))
    assert complete_partial_latin_rectangle([[1, 0]], 2) == [[1, 2]]
    assert complete_partial_latin_rectangle([[1, 0], [0, 1]], 2) == [[1, 2], [2, 1]]
    with pytest.raises(Infeasible):
        complete_partial_latin_rectangle([[1, 0], [0, 2]], 2)


def test_extend():
    assert extend_latin_rectangle([[1, 2]]) == [[1, 2], [2, 1]]
    rows = extend_latin_rectangle([[1, 2, 3]])
    assert verify_glr(rows) and len(rows) == 2
    with pytest.raises(AlreadySquare):
        extend_latin_rectangle([[1, 2, 3], [2, 3, 1], [3, 1, 2]])


def test_cyclic():
    assert verify_glr(cyclic_latin_rectangle(3, 5))
