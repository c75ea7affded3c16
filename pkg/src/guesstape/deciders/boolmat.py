"""Square Boolean matrices over (or, and), rows stored as int bitsets."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class BoolMatrix:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int] = None):
        self.n = n
        self.rows = tuple(rows) if rows is not None else (0,) * n
        if len(self.rows) != n:
            raise ValueError("row count does not match dimension")

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def from_map(cls, n: int, f: Sequence[int]) -> "BoolMatrix":
        """Matrix of a function on ``range(n)``: entry (i, f[i]) is set."""
        return cls(n, [1 << f[i] for i in range(n)])

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable) -> "BoolMatrix":
        rows = [0] * n
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(n, rows)

    @classmethod
    def from_array(cls, a) -> "BoolMatrix":
        a = np.asarray(a, dtype=bool)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("need a square matrix")
        return cls(n, [sum(1 << j for j in np.flatnonzero(a[i])) for i in range(n)])

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=bool)
        for i, r in enumerate(self.rows):
            for j in range(self.n):
                out[i, j] = (r >> j) & 1
        return out

    def __getitem__(self, ij) -> bool:
        i, j = ij
        return bool((self.rows[i] >> j) & 1)

    def row_set(self, i: int) -> list:
        r, out, j = self.rows[i], [], 0
        while r:
            if r & 1:
                out.append(j)
            r >>= 1
            j += 1
        return out

    def vec_mul(self, v: int) -> int:
        """Image of the state set ``v`` (a bitset) under one step."""
        out, rows, j = 0, self.rows, 0
        while v:
            if v & 1:
                out |= rows[j]
            v >>= 1
            j += 1
        return out

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return BoolMatrix(self.n, [other.vec_mul(r) for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, BoolMatrix) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join("".join("1" if (r >> j) & 1 else "0" for j in range(self.n))
                         for r in self.rows)
        return f"BoolMatrix([{body}])"


def bool_matrix_power(m: BoolMatrix, n: int) -> BoolMatrix:
    """``m**n`` by repeated squaring; ``n`` may be arbitrarily large."""
    if n < 0:
        raise ValueError("negative exponent")
    result = BoolMatrix.identity(m.n)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result
