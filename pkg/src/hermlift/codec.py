"""Encoding and local erasure repair for the Hermitian lifted code.

Codewords are lists indexed like :func:`hermitian_points`; an erased symbol
is ``None`` (0 is a legitimate symbol).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional, Sequence

import numpy as np

from .bounds import parity_entries
from .curve import (
    Line,
    Point,
    hermitian_lines,
    hermitian_points,
    line_points,
    lines_through,
    point_index,
)
from .errors import InsufficientDataError, InvalidLayoutError, InvalidParameterError, WrongLineError
from .field import GF2m
from .goodness import Monomial, enumerate_good
from .linalg import matmul, rank
from .poly import evaluate, interpolate

Codeword = list  # list[Optional[int]]


@dataclass
class CodeSpec:
    field: GF2m
    points: list[Point]
    basis: list[Monomial]
    mode: str = "exact"

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def locality(self) -> int:
        return self.field.q


def build_code(F: GF2m, mode: str = "exact", *, threads: int = 1,
               allow_long: bool = False) -> CodeSpec:
    _, basis = enumerate_good(F, mode, threads=threads, allow_long=allow_long)
    return CodeSpec(F, hermitian_points(F), basis, mode)


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    F = spec.field
    xs = np.array([p.alpha for p in spec.points], dtype=np.int64)
    ys = np.array([p.beta for p in spec.points], dtype=np.int64)
    G = np.zeros((spec.dimension, spec.n), dtype=np.int64)
    for t, (i, j) in enumerate(spec.basis):
        G[t] = F.mul_vec(F.pow_vec(xs, i), F.pow_vec(ys, j))
    return G


def generator_rank(spec: CodeSpec) -> int:
    return rank(spec.field, generator_matrix(spec), spec.n)


def encode(spec: CodeSpec, message: Sequence[int]) -> list[int]:
    if len(message) != spec.dimension:
        raise InvalidParameterError(
            f"message has {len(message)} symbols, code dimension is {spec.dimension}")
    if spec.dimension == 0:
        return [0] * spec.n
    msg = np.array([list(message)], dtype=np.int64)
    return [int(c) for c in matmul(spec.field, msg, generator_matrix(spec))[0]]


def random_message(spec: CodeSpec, rng: random.Random) -> list[int]:
    return [rng.randrange(spec.field.order) for _ in range(spec.dimension)]


def satisfies_parity(spec: CodeSpec, word: Sequence[int]) -> bool:
    F = spec.field
    for line in hermitian_lines(F):
        acc = 0
        for pos, c in parity_entries(F, line):
            acc ^= F.mul(c, word[pos])
        if acc:
            return False
    return True


# -- local repair ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _line_positions(F: GF2m, a: int, b: int) -> tuple[int, ...]:
    idx = point_index(F)
    gamma = F.norm(a) ^ F.trace(b)
    return tuple(idx[p] for p in line_points(F, Line(a, b, gamma)))


def line_positions(F: GF2m, line: Line) -> tuple[int, ...]:
    return _line_positions(F, line.a, line.b)


def recover_erasure(spec: CodeSpec, word: Sequence[Optional[int]], pos: int, line: Line) -> int:
    """Value at ``pos`` from the other q symbols on ``line``."""
    F = spec.field
    positions = line_positions(F, line)
    if pos not in positions:
        raise WrongLineError(f"line {(line.a, line.b)} does not contain position {pos}")
    pairs = []
    for other in positions:
        if other == pos:
            continue
        if word[other] is None:
            raise InsufficientDataError(f"position {other} on the repair line is also erased")
        pairs.append((spec.points[other].alpha, word[other]))
    return evaluate(F, interpolate(F, pairs), spec.points[pos].alpha)


def recovery_lines(spec: CodeSpec, pos: int) -> list[Line]:
    return lines_through(spec.field, spec.points[pos])


def availability_sets(spec: CodeSpec, pos: int) -> list[frozenset[int]]:
    """One repair set per line through ``pos``: the line's other q positions."""
    F = spec.field
    return [frozenset(line_positions(F, ln)) - {pos} for ln in recovery_lines(spec, pos)]


@dataclass
class PeelResult:
    word: list
    repaired: list[int] = field(default_factory=list)
    stuck: list[int] = field(default_factory=list)
    reads: int = 0
    max_reads: int = 0

    @property
    def success(self) -> bool:
        return not self.stuck


def peel_decode(spec: CodeSpec, word: Sequence[Optional[int]]) -> PeelResult:
    """Repair erasures one line at a time until done or stuck.

    Positions are visited in ascending order and, per position, lines in
    ascending (a, b) order; a repair is usable by later steps immediately.
    """
    F = spec.field
    out = list(word)
    result = PeelResult(out)
    erased = sorted(p for p, s in enumerate(out) if s is None)
    while erased:
        remaining = []
        for pos in erased:
            for ln in recovery_lines(spec, pos):
                if all(out[o] is not None for o in line_positions(F, ln) if o != pos):
                    out[pos] = recover_erasure(spec, out, pos, ln)
                    result.repaired.append(pos)
                    result.reads += F.q
                    result.max_reads = max(result.max_reads, F.q)
                    break
            else:
                remaining.append(pos)
        if len(remaining) == len(erased):
            break
        erased = remaining
    result.stuck = erased
    return result


@dataclass
class RepairReport:
    repaired: int
    stuck: int
    total_reads: int
    max_reads: int
    erased: int
    correct: bool
    stuck_positions: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "erased": self.erased,
            "repaired": self.repaired,
            "stuck": self.stuck,
            "total_reads": self.total_reads,
            "max_reads": self.max_reads,
            "correct": self.correct,
            "stuck_positions": self.stuck_positions,
        }


def round_robin_layout(n: int, nodes: int) -> dict[int, int]:
    if nodes < 1:
        raise InvalidLayoutError("need at least one node")
    return {pos: pos % nodes for pos in range(n)}


def simulate_repair(spec: CodeSpec, layout: Mapping[int, int], failures, seed: int = 0) -> RepairReport:
    """Encode a random message, lose every symbol on ``failures``, peel."""
    if set(layout) != set(range(spec.n)):
        raise InvalidLayoutError("layout must assign every position to a node")
    rng = random.Random(seed)
    original = encode(spec, random_message(spec, rng))
    failed = set(failures)
    word = [None if layout[p] in failed else s for p, s in enumerate(original)]
    erased = sum(s is None for s in word)
    res = peel_decode(spec, word)
    correct = all(res.word[p] == original[p] for p in res.repaired)
    return RepairReport(
        repaired=len(res.repaired),
        stuck=len(res.stuck),
        total_reads=res.reads,
        max_reads=res.max_reads,
        erased=erased,
        correct=correct,
        stuck_positions=list(res.stuck),
    )

