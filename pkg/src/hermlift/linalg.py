"""Exact Gaussian elimination over GF(q^2)."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .field import GF2m


class RowEchelon:
    """Incrementally maintained reduced row echelon basis.

    Rows are int64 vectors of field elements.  Every stored row has a 1 in
    its pivot column and zeros in all other pivot columns, so reducing a new
    vector needs one product per pivot it touches.
    """

    def __init__(self, F: GF2m, ncols: int):
        self.F = F
        self.ncols = ncols
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []
        self._pivot_row: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        v = np.array(v, dtype=np.int64)
        if not self.pivots:
            return v
        cols = np.array(self.pivots)
        coef = v[cols]
        hit = np.flatnonzero(coef)
        if hit.size:
            contrib = self.F.mul_vec(coef[hit, None], self.basis[hit])
            v ^= np.bitwise_xor.reduce(contrib, axis=0)
        return v

    def add(self, v) -> bool:
        """Insert ``v``; returns True when it raised the rank."""
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        col = int(nz[0])
        v = self.F.mul_vec(self.F.inv(int(v[col])), v)
        if self.pivots:
            factors = self.basis[:, col]
            rows = np.flatnonzero(factors)
            if rows.size:
                self.basis[rows] ^= self.F.mul_vec(factors[rows, None], v[None, :])
        self._pivot_row[col] = len(self.pivots)
        self.pivots.append(col)
        self.basis = np.vstack([self.basis, v[None, :]])
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v).any()


def rank(F: GF2m, rows: Iterable, ncols: int) -> int:
    ech = RowEchelon(F, ncols)
    for row in rows:
        ech.add(row)
        if ech.rank == ncols:
            break
    return ech.rank


def matmul(F: GF2m, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over GF(q^2)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out ^= F.mul_vec(A[:, t, None], B[t][None, :])
    return out
