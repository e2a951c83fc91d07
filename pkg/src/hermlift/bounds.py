"""Dimension lower bounds, rate estimates and the parity-check dimension.

All bound formulas are evaluated in exact rationals; flooring happens only
when a report is produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Iterator, Optional

import numpy as np

from .curve import hermitian_lines, hermitian_points, line_points, point_index
from .errors import InvalidParameterError
from .field import GF2m
from .linalg import RowEchelon

RATE_TABLE_MAX_K = 24
DIM_MAX_K = 3
DIM_GATED_K = 4


def _binom2(n) -> int:
    return comb(int(n), 2) if n >= 2 else 0


def bound_old(k: int) -> Fraction:
    """sum_{r=0}^{k-1} (4^r - 3^r) 4^(k-r-2) 2^(k-r-1)."""
    if k < 1:
        raise InvalidParameterError("k must be >= 1")
    return sum(
        ((4**r - 3**r) * Fraction(4) ** (k - r - 2) * Fraction(2) ** (k - r - 1)
         for r in range(k)),
        Fraction(0),
    )


def bound_old_cleared(k: int) -> Fraction:
    # times 32 every term is an integer
    total = sum((4**r - 3**r) * 4 ** (k - r) * 2 ** (k - r) for r in range(k))
    return Fraction(total, 32)


def bound_new(k: int) -> Fraction:
    """sum_{r=1}^{k} q/2^(r+1) (C(q/2^r, 2)(4^r - 3^r) + q/2^r C(2^r+1, 2))."""
    if k < 1:
        raise InvalidParameterError("k must be >= 1")
    q = 2**k
    total = Fraction(0)
    for r in range(1, k + 1):
        blocks = Fraction(q, 2**r)
        total += Fraction(q, 2 ** (r + 1)) * (
            _binom2(blocks) * (4**r - 3**r) + blocks * comb(2**r + 1, 2))
    return total


def bound_new_cleared(k: int) -> Fraction:
    q = 2**k
    total = 0
    for r in range(1, k + 1):
        blocks = q >> r
        total += blocks * (_binom2(blocks) * (4**r - 3**r) + blocks * comb(2**r + 1, 2))
    return Fraction(total, 2)


def bound_new_closed_form(k: int) -> Fraction:
    """Geometric-series form of :func:`bound_new`.

    1/4 (q^3 (1 - 2^-k) - 3/5 q^3 (1 - (3/8)^k) + 3 q^2 (1 - (3/4)^k) + q^2 (1 - 2^-k))
    """
    q = Fraction(2**k)
    half, three_eighths, three_quarters = Fraction(1, 2), Fraction(3, 8), Fraction(3, 4)
    return Fraction(1, 4) * (
        q**3 * (1 - half**k)
        - Fraction(3, 5) * q**3 * (1 - three_eighths**k)
        + 3 * q**2 * (1 - three_quarters**k)
        + q**2 * (1 - half**k)
    )


def rate_limit_new() -> Fraction:
    """Limit of bound_new(k)/q^3: only the q^3 terms of the closed form survive."""
    return Fraction(1, 4) * (1 - Fraction(3, 5))


def rate_limit_old() -> Fraction:
    """Limit of bound_old(k)/q^3 = 1/32 * sum_r ((1/2)^r - (3/8)^r)."""
    return Fraction(1, 32) * (2 - Fraction(8, 5))


@dataclass
class BoundsReport:
    k: int
    q: int
    bound_old: Fraction
    bound_new: Fraction
    exact_good_count: Optional[int] = None
    exact_dimension: Optional[int] = None

    @property
    def bound_old_floor(self) -> int:
        return floor(self.bound_old)

    @property
    def bound_new_floor(self) -> int:
        return floor(self.bound_new)

    @property
    def rate_old(self) -> Fraction:
        return self.bound_old / self.q**3

    @property
    def rate_new(self) -> Fraction:
        return self.bound_new / self.q**3


def rate_table(k_max: int) -> list[BoundsReport]:
    if not 1 <= k_max <= RATE_TABLE_MAX_K:
        raise InvalidParameterError(f"k_max must be in 1..{RATE_TABLE_MAX_K}")
    return [BoundsReport(k, 2**k, bound_old(k), bound_new(k)) for k in range(1, k_max + 1)]


# -- parity-check view ---------------------------------------------------------


def parity_entries(F: GF2m, line) -> list[tuple[int, int]]:
    """(coordinate, coefficient) pairs of the check row of ``line``.

    The coefficient at a point with x-coordinate x is 1/(x - a^q)^q, i.e.
    1/P'(x): the dual of degree-<q evaluation on the roots of P.
    """
    idx = point_index(F)
    a_q = F.frob(line.a)
    return [(idx[p], F.inv(F.frob(p.alpha ^ a_q))) for p in line_points(F, line)]


def parity_rows(F: GF2m) -> Iterator[np.ndarray]:
    n = len(hermitian_points(F))
    for line in hermitian_lines(F):
        row = np.zeros(n, dtype=np.int64)
        for pos, c in parity_entries(F, line):
            row[pos] = c
        yield row


def parity_matrix(F: GF2m) -> np.ndarray:
    return np.array(list(parity_rows(F)), dtype=np.int64)


def parity_rank(F: GF2m) -> int:
    n = F.q**3
    ech = RowEchelon(F, n)
    for row in parity_rows(F):
        ech.add(row)
    return ech.rank


def exact_dimension(F: GF2m, allow_long: bool = False) -> int:
    """q^3 minus the rank of the line parity checks."""
    if F.k > DIM_GATED_K or (F.k > DIM_MAX_K and not allow_long):
        raise InvalidParameterError(
            f"exact_dimension runs at k <= {DIM_MAX_K} (k = {DIM_GATED_K} with allow_long)")
    return F.q**3 - parity_rank(F)
