"""Good and bad monomials of the footprint.

A monomial X^i Y^j is *good* when, on every secant line, its restriction
reduces modulo the line's vanishing polynomial to something of degree < q.
Two classifiers live here: the combinatorial certificate (sufficient only)
and an exhaustive oracle that reduces against every line.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .curve import Line, hermitian_lines
from .errors import InvalidMonomialError, InvalidParameterError
from .field import GF2m

EXACT_MAX_K = 3
EXACT_GATED_K = 4
LINE_CHUNK = 2048


class Monomial(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class ExponentDecomposition:
    i1: int
    r: int
    i2: int
    i3: int
    j2: int
    j3: int


@dataclass
class GoodnessReport:
    monomial: Monomial
    certified: bool
    exact: Optional[bool] = None
    witness_line: Optional[Line] = None


# -- Lucas / 2-shadows ---------------------------------------------------------


def shadow_le2(i: int, j: int) -> bool:
    """True iff every binary digit of ``i`` is <= the matching digit of ``j``."""
    return i & ~j == 0


def binom_parity(j: int, i: int) -> int:
    """C(j, i) mod 2, via Lucas' theorem."""
    if i < 0 or i > j:
        return 0
    return 1 if shadow_le2(i, j) else 0


def nonshadow_pair_count(r: int, mode: str = "formula") -> int:
    """Number of pairs (i, j) in [0, 2^r)^2 with i not in the 2-shadow of j."""
    if mode == "formula":
        return 4**r - 3**r
    if mode == "brute":
        if r > 16:
            raise InvalidParameterError("brute mode supports r <= 16")
        n = 1 << r
        return sum(1 for i in range(n) for j in range(n) if not shadow_le2(i, j))
    raise InvalidParameterError(f"unknown mode {mode!r}")


# -- certificate -----------------------------------------------------------------


def _check_monomial(i: int, j: int, q: int) -> None:
    if not (0 <= i < q * q and 0 <= j < q):
        raise InvalidMonomialError(f"(i, j) = ({i}, {j}) outside 0<=i<{q * q}, 0<=j<{q}")


def decompose_exponent(i: int, j: int, q: int) -> Optional[ExponentDecomposition]:
    """Split i = i1*q + i2*2^r + i3 and j = j2*2^r + j3 with 2^r || i1.

    Returns None for the trivial stratum i1 == 0, where r is undefined.
    """
    _check_monomial(i, j, q)
    i1, low = divmod(i, q)
    if i1 == 0:
        return None
    r = (i1 & -i1).bit_length() - 1
    i2, i3 = divmod(low, 1 << r)
    j2, j3 = divmod(j, 1 << r)
    return ExponentDecomposition(i1, r, i2, i3, j2, j3)


def is_good_certified(m: tuple[int, int], q: int) -> bool:
    i, j = m
    d = decompose_exponent(i, j, q)
    if d is None:
        return i + j < q
    if d.r == 0:
        return False
    p = 1 << d.r
    return (d.i2 * p + d.i3 + d.j2 * p + d.j3 < q
            and not shadow_le2(p - 1 - d.i3, d.j3))


# -- exhaustive oracle ---------------------------------------------------------


class LineTables:
    """Residues of T^i and (aT+b)^j modulo P_{a,gamma} for a batch of lines.

    Row ``L`` of every array belongs to ``lines[L]``; the last axis holds
    coefficients of degree 0..q.
    """

    def __init__(self, F: GF2m, lines: Sequence[Line]):
        self.F = F
        q = F.q
        self.lines = list(lines)
        n = len(self.lines)
        a = np.array([ln.a for ln in self.lines], dtype=np.int64)
        b = np.array([ln.b for ln in self.lines], dtype=np.int64)
        gamma = np.array([ln.gamma for ln in self.lines], dtype=np.int64)
        # low q+1 coefficients of the monic P = T^(q+1) + a^q T^q + a T + (a^(q+1) + gamma)
        a_q = np.array([F.frob(int(x)) for x in a], dtype=np.int64)
        self.low = np.zeros((n, q + 1), dtype=np.int64)
        self.low[:, q] = a_q
        self.low[:, 1] ^= a
        self.low[:, 0] = F.mul_vec(a_q, a) ^ gamma

        tpow = np.zeros((n, q * q, q + 1), dtype=np.int64)
        tpow[:, 0, 0] = 1
        for e in range(1, q * q):
            tpow[:, e] = self.times_t(tpow[:, e - 1])
        lpow = np.zeros((n, q, q + 1), dtype=np.int64)
        lpow[:, 0, 0] = 1
        for e in range(1, q):
            prev = lpow[:, e - 1]
            lpow[:, e] = F.mul_vec(b[:, None], prev) ^ self.times_t(F.mul_vec(a[:, None], prev))
        self.tpow = tpow
        self.lpow = lpow

    def times_t(self, p: np.ndarray) -> np.ndarray:
        out = np.zeros_like(p)
        out[:, 1:] = p[:, :-1]
        out ^= self.F.mul_vec(p[:, -1:], self.low)
        return out

    def reduce(self, prod: np.ndarray) -> np.ndarray:
        """Reduce rows of degree <= 2q modulo each line's P."""
        q = self.F.q
        prod = prod.copy()
        for d in range(prod.shape[1] - 1, q, -1):
            top = prod[:, d]
            if top.any():
                prod[:, d - q - 1:d] ^= self.F.mul_vec(top[:, None], self.low)
        return prod[:, :q + 1]

    def restrict(self, i: int, j: int) -> np.ndarray:
        q = self.F.q
        u = self.tpow[:, i]
        v = self.lpow[:, j]
        outer = self.F.mul_vec(u[:, :, None], v[:, None, :])
        prod = np.zeros((len(self.lines), 2 * q + 1), dtype=np.int64)
        for s in range(q + 1):
            prod[:, s:s + q + 1] ^= outer[:, s]
        return self.reduce(prod)

    def top_coefficients(self, i: int, j: int) -> np.ndarray:
        """Coefficient of T^q in the reduced restriction, per line."""
        return self.restrict(i, j)[:, self.F.q]


def _chunks(seq: Sequence, size: int) -> Iterable[tuple[int, Sequence]]:
    for start in range(0, len(seq), size):
        yield start, seq[start:start + size]


def _check_exact_allowed(F: GF2m, allow_long: bool) -> None:
    if F.k > EXACT_GATED_K:
        raise InvalidParameterError(f"exact classification supports k <= {EXACT_GATED_K}")
    if F.k > EXACT_MAX_K and not allow_long:
        raise InvalidParameterError(
            f"exact classification at k={F.k} is long-running; pass allow_long=True")


def classify_exact(
    F: GF2m,
    monomials: Iterable[tuple[int, int]],
    *,
    lines: Optional[Sequence[Line]] = None,
    threads: int = 1,
    allow_long: bool = False,
) -> list[GoodnessReport]:
    """Run the all-lines oracle on ``monomials``.

    Lines are scanned in enumeration order, chunk by chunk; a monomial is
    dropped at its first bad chunk, so ``witness_line`` is the minimum-index
    bad line regardless of ``threads``.
    """
    if lines is None:
        _check_exact_allowed(F, allow_long)
        lines = hermitian_lines(F)
    q = F.q
    reports = []
    for i, j in monomials:
        _check_monomial(i, j, q)
        m = Monomial(i, j)
        reports.append(GoodnessReport(m, is_good_certified(m, q), exact=True))
    pending = list(range(len(reports)))

    for start, chunk in _chunks(lines, LINE_CHUNK):
        if not pending:
            break
        tables = LineTables(F, chunk)

        def first_bad(idx: int) -> int:
            m = reports[idx].monomial
            bad = np.flatnonzero(tables.top_coefficients(m.i, m.j))
            return int(bad[0]) if bad.size else -1

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                hits = list(pool.map(first_bad, pending))
        else:
            hits = [first_bad(idx) for idx in pending]
        still = []
        for idx, hit in zip(pending, hits):
            if hit < 0:
                still.append(idx)
            else:
                reports[idx].exact = False
                reports[idx].witness_line = chunk[hit]
        pending = still
    return reports


def is_good_exact(F: GF2m, m: tuple[int, int], allow_long: bool = False) -> GoodnessReport:
    return classify_exact(F, [m], allow_long=allow_long)[0]


def probe_good(F: GF2m, m: tuple[int, int], n_lines: int = 1000, seed: int = 0) -> bool:
    """Heuristic: test ``m`` on a random sample of lines only.

    A False answer is definitive; True only means no bad line was sampled.
    """
    lines = hermitian_lines(F)
    rng = random.Random(seed)
    sample = sorted(rng.sample(range(len(lines)), min(n_lines, len(lines))))
    report = classify_exact(F, [m], lines=[lines[s] for s in sample])[0]
    return bool(report.exact)


def all_monomials(q: int) -> list[Monomial]:
    return [Monomial(i, j) for i in range(q * q) for j in range(q)]


def classify(F: GF2m, mode: str = "exact", *, threads: int = 1,
             allow_long: bool = False) -> list[GoodnessReport]:
    """One report per footprint monomial, in (i, j) order."""
    q = F.q
    if mode == "exact":
        return classify_exact(F, all_monomials(q), threads=threads, allow_long=allow_long)
    if mode == "certified":
        return [GoodnessReport(m, is_good_certified(m, q)) for m in all_monomials(q)]
    raise InvalidParameterError(f"unknown mode {mode!r}")


def enumerate_good(F: GF2m, mode: str = "exact", *, threads: int = 1,
                   allow_long: bool = False) -> tuple[int, list[Monomial]]:
    reports = classify(F, mode, threads=threads, allow_long=allow_long)
    flag = "exact" if mode == "exact" else "certified"
    good = [r.monomial for r in reports if getattr(r, flag)]
    return len(good), good
