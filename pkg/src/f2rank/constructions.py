"""Builders for the concrete graph families of minimal GF(2)-rank."""

from __future__ import annotations

from itertools import combinations

from .gf2 import BitMatrix
from .graph import Graph, line_graph
from .products import parity_product_graph


def g2() -> Graph:
    """Triangle plus one isolated vertex: order 4, GF(2)-rank 2.

    The isolated vertex is last, so the adjacency rows are
    0110 / 1010 / 1100 / 0000.
    """
    return Graph(BitMatrix.from_strings(["0110", "1010", "1100", "0000"]))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def g2_power(m: int) -> Graph:
    """Left-associated parity-product power of g2: order 4^m, rank 2m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    base = g2()
    g = base
    for _ in range(m - 1):
        g = parity_product_graph(g, base)
    return g


def linegraph_clique_plus_isolated(k: int) -> Graph:
    """Line graph of the complete graph K_k with one isolated vertex appended.

    Order is C(k,2)+1; for k=6 this is a 16-vertex graph of rank 4.
    """
    if k < 5:
        raise ValueError("k must be >= 5")
    return line_graph(complete_graph(k)).add_isolated_vertex()


def extremal_odd_plus_one(n: int) -> Graph:
    """Twin-free graph of order 2^n and rank n+1, for odd n >= 3.

    The adjacency matrix is the block form [A | ~A ; ~A | A] with A the
    adjacency of g2_power((n-1)/2), i.e. the parity product of a single
    edge with that power.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    k2 = Graph.from_edges(2, [(0, 1)])
    return parity_product_graph(k2, g2_power((n - 1) // 2))
