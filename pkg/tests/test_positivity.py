from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmdkit.errors import NotAMatching
from pmdkit.graphs import Graph, complete, cycle, path
from pmdkit.positivity import (
    AlternatingWalk,
    PendantOrder,
    WeightCertificate,
    check_positive,
    enumerate_positive_matchings,
    find_alternating_walk,
    is_positive,
    matchings,
    replay_pendant_order,
    replay_walk,
    verify_certificate,
    weight_certificate,
)

C4 = cycle(4)
P4 = path(4)


def test_opposite_pair_of_c4_has_walk():
    m = [(0, 1), (2, 3)]
    w = check_positive(C4, m)
    assert isinstance(w, AlternatingWalk)
    assert len(w.vertices) == 5 and w.vertices[0] == w.vertices[-1]
    assert set(w.edges()) == set(C4.edges)
    assert replay_walk(C4, m, w)


def test_p4_pendant_order():
    w = check_positive(P4, [(0, 1), (2, 3)])
    assert isinstance(w, PendantOrder)
    assert set(w.edges) == {(0, 1), (2, 3)}
    assert replay_pendant_order(P4, w.edges)


def test_c6_alternating_matching():
    m = [(0, 1), (2, 3), (4, 5)]
    w = check_positive(cycle(6), m)
    assert isinstance(w, AlternatingWalk) and len(w.vertices) == 7
    assert replay_walk(cycle(6), m, w)


def test_not_a_matching():
    with pytest.raises(NotAMatching):
        check_positive(P4, [(0, 1), (1, 2)])
    with pytest.raises(NotAMatching):
        check_positive(P4, [(0, 2)])


def test_certificates():
    k2 = path(2)
    assert verify_certificate(k2, [(0, 1)], weight_certificate(k2, [(0, 1)]))
    assert verify_certificate(k2, [(0, 1)], WeightCertificate((Fraction(1), Fraction(1))))
    assert not verify_certificate(k2, [(0, 1)], WeightCertificate((Fraction(-1), Fraction(-1))))
    p3 = path(3)
    assert verify_certificate(p3, [(0, 1)], WeightCertificate((Fraction(2), Fraction(-1), Fraction(-2))))
    assert verify_certificate(C4, [(0, 1)], weight_certificate(C4, [(0, 1)]))


def test_certificate_json_roundtrip():
    c = weight_certificate(C4, [(0, 1)])
    assert WeightCertificate.from_json(c.to_json()) == c


def test_enumeration_examples():
    assert list(enumerate_positive_matchings(C4, 2, 2)) == []
    assert len(list(enumerate_positive_matchings(C4, 1, 1))) == 4
    assert list(enumerate_positive_matchings(P4, 2, 2)) == [((0, 1), (2, 3))]


def test_walk_iff_not_positive_on_k4():
    k4 = complete(4)
    for size in (1, 2):
        for m in matchings(k4, size):
            w = find_alternating_walk(k4, m)
            assert (w is None) == is_positive(k4, m)
            if w is not None:
                assert replay_walk(k4, m, w)


@st.composite
def graph_and_matching(draw):
    n = draw(st.integers(2, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    g = Graph(n, tuple(sorted(edges)))
    used, m = set(), []
    for e in draw(st.permutations(list(g.edges))):
        if not used & set(e):
            m.append(e)
            used |= set(e)
    return g, m


@settings(max_examples=150, deadline=None)
@given(graph_and_matching())
def test_positivity_closed_under_subsets(data):
    g, m = data
    w = check_positive(g, m)
    if w.positive:
        assert verify_certificate(g, m, weight_certificate(g, m))
        for i in range(len(m)):
            assert is_positive(g, m[:i] + m[i + 1 :])
    else:
        assert replay_walk(g, m, w)
