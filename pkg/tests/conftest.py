from __future__ import annotations

import random

from f2rank.gf2 import BitMatrix
from f2rank.graph import Graph


def random_bitmatrix(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols, [rng.getrandbits(cols) for _ in range(rows)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def xor_combinations(rows: list[int]) -> set[int]:
    """All 2^len(rows) XOR combinations, enumerated explicitly."""
    out = set()
    for mask in range(1 << len(rows)):
        acc = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                acc ^= rows[i]
            m >>= 1
            i += 1
        out.add(acc)
    return out
