import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlspec.graph import (
    Graph,
    GraphFormatError,
    complement,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    is_connected,
    join,
    path_graph,
    star_graph,
    to_graph6,
)
from dlspec.canonical import canonical_form
from dlspec.enumerate import enumerate_connected
from dlspec.families import is_isomorphic


@st.composite
def graphs(draw, max_order=8):
    n = draw(st.integers(1, max_order))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph(n, bits)


def test_invariants_of_representation():
    g = Graph.from_edges(5, [(0, 1), (3, 1), (4, 2)])
    for v in range(5):
        assert not g.has_edge(v, v)
        for u in range(5):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert g.size == 3
    with pytest.raises(ValueError):
        Graph(0)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, 1 << 3)


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    c = complement(cycle_graph(4))
    assert c.size == 6 - 4
    assert sorted(map(len, components(c))) == [2, 2]
    co = complement(disjoint_union([complete_graph(3), complete_graph(2), complete_graph(1)]))
    assert canonical_form(co) == canonical_form(complete_multipartite([3, 2, 1]))


def test_disjoint_union_examples():
    assert disjoint_union([complete_graph(1), complete_graph(1)]) == empty_graph(2)
    g = disjoint_union([complete_graph(2)] * 3)
    assert (g.order, g.size) == (6, 3)
    g = disjoint_union([star_graph(3), complete_graph(2), complete_graph(1)])
    assert g.order == 6 and sorted(map(len, components(g))) == [1, 2, 3]
    with pytest.raises(ValueError):
        disjoint_union([])


def test_join_examples():
    assert is_isomorphic(join(complete_graph(1), empty_graph(5)), star_graph(6))
    g = join(star_graph(3), disjoint_union([complete_graph(2), complete_graph(2)]))
    assert g.order == 7
    assert g.size == 2 + 2 + 3 * 4


def test_join_matches_complement_construction_on_random_graphs():
    rng = random.Random(50)
    for _ in range(50):
        a = Graph(rng.randint(1, 4), 0)
        a = Graph(a.order, rng.getrandbits(a.order * (a.order - 1) // 2) if a.order > 1 else 0)
        nb = rng.randint(1, 8 - a.order)
        b = Graph(nb, rng.getrandbits(nb * (nb - 1) // 2) if nb > 1 else 0)
        direct = join(a, b)
        via = complement(disjoint_union([complement(a), complement(b)]))
        assert direct == via


def test_components_examples():
    g = disjoint_union([complete_graph(3), complete_graph(2), complete_graph(1)])
    assert sorted(map(len, components(g))) == [1, 2, 3]
    assert is_connected(path_graph(5))
    sk = complement(disjoint_union([complete_graph(3)] + [complete_graph(1)] * 3))
    assert sorted(map(len, components(complement(sk)))) == [1, 1, 1, 3]


def test_graph6_hand_encoded():
    # K_3: bits 1,1,1 -> 111000 = 56 -> chr(119)
    assert from_graph6("Bw") == complete_graph(3)
    assert to_graph6(complete_graph(3)) == "Bw"
    # P_3 with edges {0,1},{1,2}: bits a01=1, a02=0, a12=1 -> 101000 = 40 -> chr(103)
    assert from_graph6("Bg") == Graph.from_edges(3, [(0, 1), (1, 2)])
    assert to_graph6(Graph(1)) == "@"


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B!", "Bx", "~??", "A\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)


def test_graph6_order_four_connected_round_trip():
    strings = {to_graph6(g) for g in enumerate_connected(4)}
    assert len(strings) == 6
    assert all(to_graph6(from_graph6(s)) == s for s in strings)


@given(graphs())
def test_complement_involution_and_edge_count(g):
    c = complement(g)
    assert complement(c) == g
    assert c.size == comb(g.order, 2) - g.size


@settings(max_examples=200)
@given(graphs(max_order=6), graphs(max_order=6))
def test_join_union_duality(a, b):
    assert complement(join(a, b)) == disjoint_union([complement(a), complement(b)])


@given(graphs(max_order=20))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_round_trip_all_enumerated():
    for n in range(1, 9):
        for g in enumerate_connected(n):
            assert from_graph6(to_graph6(g)) == g


def test_rows_and_bits_agree():
    g = Graph.from_edges(4, [(0, 3), (1, 2)])
    assert Graph.from_rows(g.rows) == g
    assert g.neighbors(3) == [0]
    assert g.degrees == (1, 1, 1, 1)
