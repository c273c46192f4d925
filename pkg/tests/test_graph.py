from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from f2rank.gf2 import BitMatrix
from f2rank.graph import (
    Graph,
    Graph6FormatError,
    NonzeroDiagonalError,
    NotSymmetricError,
    from_graph6,
    is_negation_free,
    is_twin_free,
    line_graph,
    to_graph6,
)
from f2rank.constructions import complete_graph, g2

from conftest import random_graph


def test_graph_validation():
    with pytest.raises(NonzeroDiagonalError):
        Graph(BitMatrix.identity(2))
    with pytest.raises(NotSymmetricError):
        Graph(BitMatrix.from_strings(["010", "000", "000"]))
    with pytest.raises(NotSymmetricError):
        Graph(BitMatrix.zeros(2, 3))
    g = Graph(BitMatrix.zeros(3, 3))
    assert g.order == 3 and g.edge_count() == 0
    Graph(g2().adj)  # the triangle-plus-isolated matrix is valid


def test_validation_large_graph_path():
    # n >= 64 takes the vectorized validation route
    g = complete_graph(70)
    assert Graph(g.adj).degree(0) == 69
    bad = g.adj.set_bit(0, 0, 1)
    with pytest.raises(NonzeroDiagonalError):
        Graph(bad)
    bad2 = g.adj.set_bit(0, 1, 0)
    with pytest.raises(NotSymmetricError):
        Graph(bad2)


def test_twin_free_examples():
    assert not is_twin_free(Graph.empty(2))  # two isolated vertices are twins
    assert is_twin_free(g2())
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not is_twin_free(path3)  # endpoints share the middle vertex


def test_twin_free_matches_naive():
    rng = random.Random(9)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 9))
        sets = [frozenset(g.neighbors(v)) for v in range(g.order)]
        assert is_twin_free(g) == (len(set(sets)) == g.order)


def test_negation_free_examples():
    k2 = Graph.from_edges(2, [(0, 1)])
    assert not is_negation_free(k2)
    assert is_negation_free(g2())
    assert is_negation_free(Graph.empty(2))


def test_negation_free_matches_naive():
    rng = random.Random(10)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 9))
        n = g.order
        naive = True
        for u in range(n):
            for v in range(n):
                if u != v and set(g.neighbors(v)) == set(range(n)) - set(g.neighbors(u)):
                    naive = False
        assert is_negation_free(g) == naive


def test_plumbing():
    g = g2()
    assert g.degree(3) == 0
    assert g.common_neighbors(0, 1) == 1  # adjacent pair in the triangle
    assert g.isolated_vertices() == [3]
    assert g.neighbors(0) == [1, 2]
    assert g.edge_count() == 3
    bigger = g.add_isolated_vertex()
    assert bigger.order == 5 and bigger.degree(4) == 0
    assert bigger.rank() == g.rank()
    assert g.remove_vertex(3).order == 3


def test_add_isolated_vertex_twin_behaviour():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 8))
        grown = g.add_isolated_vertex()
        assert grown.rank() == g.rank()
        expected = is_twin_free(g) and not g.isolated_vertices()
        assert is_twin_free(grown) == expected


# ---------------------------------------------------------------------------
# line graphs
# ---------------------------------------------------------------------------


def test_line_graph_examples():
    c3 = complete_graph(3)
    lg = line_graph(c3)
    assert lg.order == 3 and lg.edge_count() == 3  # triangle again
    lk4 = line_graph(complete_graph(4))
    assert lk4.order == 6
    assert all(lk4.degree(v) == 4 for v in range(6))
    assert line_graph(complete_graph(6)).order == 15
    with pytest.raises(ValueError):
        line_graph(Graph.empty(3))


def test_line_graph_twin_free_for_min_degree_above_three():
    rng = random.Random(12)
    produced = 0
    while produced < 15:
        n = rng.randrange(6, 13)
        g = random_graph(rng, n, 0.7)
        if min(g.degree(v) for v in range(n)) <= 3:
            continue
        produced += 1
        assert is_twin_free(line_graph(g))


def test_line_graph_matching_dependency():
    # in L(K_k) for even k, the rows of the perfect matching XOR to zero
    for k in (6, 8, 10, 12):
        g = complete_graph(k)
        lg = line_graph(g)
        idx = {e: i for i, e in enumerate(g.edges())}
        acc = 0
        for i in range(k // 2):
            acc ^= lg.adj.row_int(idx[(2 * i, 2 * i + 1)])
        assert acc == 0


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def test_graph6_manual_oracle():
    # 4 vertices -> chr(67) = 'C'; triangle bits 111000 -> chr(56+63) = 'w'
    assert to_graph6(g2()) == "Cw"
    assert from_graph6("Cw") == g2()
    assert from_graph6(">>graph6<<Cw") == g2()


def test_graph6_against_networkx():
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randrange(0, 75)
        g = random_graph(rng, n, rng.choice([0.1, 0.5, 0.9]))
        mine = to_graph6(g)
        gx = nx.Graph()
        gx.add_nodes_from(range(n))
        gx.add_edges_from(g.edges())
        assert mine == nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert from_graph6(mine) == g


@settings(max_examples=60)
@given(st.integers(0, 40), st.integers(0, 2**64 - 1))
def test_graph6_round_trip_property(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, 0.5)
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("text", ["", "C", "Cww", "C\x00", "~??"])
def test_graph6_malformed(text):
    with pytest.raises(Graph6FormatError):
        from_graph6(text)
