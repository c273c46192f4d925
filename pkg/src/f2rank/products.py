"""Kronecker and parity products on GF(2) matrices, plus the +/-1 sign map.

Both products use the same left-major block layout: block (i, j) of the
result covers rows i*rows(B)..(i+1)*rows(B) and the composite row index
of (i, k) is i*rows(B)+k.  The sign map sends 0 to +1 and 1 to -1, turning
XOR of bits into multiplication of signs; under this bijection the parity
product is exactly the real Kronecker product of the signed matrices.
"""

from __future__ import annotations

import numpy as np

from .gf2 import BitMatrix, _mask
from .graph import Graph


class SignMatrix:
    """Dense matrix whose entries are all +1 or -1 (exact integers)."""

    __slots__ = ("array",)

    def __init__(self, array: np.ndarray):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        if not np.isin(arr, (-1, 1)).all():
            raise ValueError("entries must be +1 or -1")
        self.array = arr

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def kronecker(self, other: SignMatrix) -> SignMatrix:
        """Real Kronecker product, exact integer arithmetic."""
        return SignMatrix(np.kron(self.array, other.array))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignMatrix) and np.array_equal(self.array, other.array)

    def __repr__(self) -> str:
        return f"SignMatrix({self.rows}x{self.cols})"


def sign_map(m: BitMatrix) -> SignMatrix:
    """Entrywise 0 -> +1, 1 -> -1."""
    return SignMatrix(1 - 2 * m.to_bool_array().astype(np.int64))


def unsign_map(s: SignMatrix) -> BitMatrix:
    """Inverse of sign_map: +1 -> 0, -1 -> 1."""
    return BitMatrix.from_bool_array((1 - s.array) // 2)


def kronecker(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) Kronecker product: block (i, j) is b when a[i][j]=1, else zero."""
    out = []
    for i in range(a.rows):
        arow = a.row_int(i)
        for k in range(b.rows):
            brow = b.row_int(k)
            bits = 0
            j = 0
            rest = arow
            while rest:
                if rest & 1:
                    bits |= brow << (j * b.cols)
                rest >>= 1
                j += 1
            out.append(bits)
    return BitMatrix(a.rows * b.rows, a.cols * b.cols, out)


def parity_product(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Blockwise XOR product: block (i, j) is b with every entry XOR a[i][j]."""
    mc, mr = b.cols, b.rows
    block_mask = _mask(mc)
    # spread row of a: bit j becomes an mc-wide run of that bit
    spreads = []
    for i in range(a.rows):
        arow = a.row_int(i)
        s = 0
        j = 0
        while arow:
            if arow & 1:
                s |= block_mask << (j * mc)
            arow >>= 1
            j += 1
        spreads.append(s)
    # replicate each row of b across all a-columns
    reps = []
    for k in range(mr):
        brow = b.row_int(k)
        r = 0
        for j in range(a.cols):
            r |= brow << (j * mc)
        reps.append(r)
    out = []
    for i in range(a.rows):
        s = spreads[i]
        for k in range(mr):
            out.append(reps[k] ^ s)
    return BitMatrix(a.rows * mr, a.cols * mc, out)


def parity_product_graph(g: Graph, h: Graph) -> Graph:
    """Graph on V(g) x V(h); (a,x) ~ (b,y) iff exactly one of a~b, x~y."""
    return Graph(parity_product(g.adj, h.adj))


def swap_operands_permutation(n: int, m: int) -> list[int]:
    """Index map from the (n,m)-major composite order to the (m,n)-major one.

    perm[i*m + k] = k*n + i, so conjugating the B-major product by it
    reproduces the A-major product; states commutativity of the parity
    product up to operand swap.
    """
    perm = [0] * (n * m)
    for i in range(n):
        for k in range(m):
            perm[i * m + k] = k * n + i
    return perm
