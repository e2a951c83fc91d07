"""Affine points and secant lines of the Hermitian curve X^(q+1) = Y^q + Y."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidPointError, TangentLineError
from .field import GF2m
from .poly import Poly, normalize


class Point(NamedTuple):
    alpha: int
    beta: int


class Line(NamedTuple):
    """The line y = a*x + b; ``gamma = a^(q+1) + b^q + b``."""

    a: int
    b: int
    gamma: int


def make_line(F: GF2m, a: int, b: int) -> Line:
    return Line(a, b, F.norm(a) ^ F.trace(b))


def on_curve(F: GF2m, p: Point) -> bool:
    return F.norm(p.alpha) == F.trace(p.beta)


@lru_cache(maxsize=None)
def _norm_fibers(F: GF2m) -> dict[int, tuple[int, ...]]:
    fibers: dict[int, list[int]] = {}
    for x in F.elements():
        fibers.setdefault(F.norm(x), []).append(x)
    return {v: tuple(xs) for v, xs in fibers.items()}


@lru_cache(maxsize=None)
def _trace_fibers(F: GF2m) -> dict[int, tuple[int, ...]]:
    fibers: dict[int, list[int]] = {}
    for y in F.elements():
        fibers.setdefault(F.trace(y), []).append(y)
    return {v: tuple(ys) for v, ys in fibers.items()}


@lru_cache(maxsize=None)
def _hermitian_points(F: GF2m) -> tuple[Point, ...]:
    traces = _trace_fibers(F)
    return tuple(
        Point(alpha, beta)
        for alpha in F.elements()
        for beta in traces.get(F.norm(alpha), ())
    )


def hermitian_points(F: GF2m) -> list[Point]:
    """All q^3 affine points, sorted by (alpha, beta)."""
    return list(_hermitian_points(F))


@lru_cache(maxsize=None)
def point_index(F: GF2m) -> dict[Point, int]:
    return {p: idx for idx, p in enumerate(_hermitian_points(F))}


@lru_cache(maxsize=None)
def _hermitian_lines(F: GF2m) -> tuple[Line, ...]:
    traces = [F.trace(b) for b in F.elements()]
    lines = []
    for a in F.elements():
        na = F.norm(a)
        for b in F.elements():
            if na != traces[b]:
                lines.append(Line(a, b, na ^ traces[b]))
    return tuple(lines)


def hermitian_lines(F: GF2m) -> list[Line]:
    """All q^4 - q^3 secant lines (a, b), sorted by (a, b)."""
    return list(_hermitian_lines(F))


@lru_cache(maxsize=None)
def line_index(F: GF2m) -> dict[tuple[int, int], int]:
    return {(ln.a, ln.b): idx for idx, ln in enumerate(_hermitian_lines(F))}


def line_points(F: GF2m, line: Line) -> list[Point]:
    """The q+1 curve points on ``line``, sorted by x-coordinate."""
    if line.gamma == 0:
        raise TangentLineError(f"line {line} is tangent")
    shift = F.frob(line.a)
    xs = sorted(s ^ shift for s in _norm_fibers(F)[line.gamma])
    return [Point(x, F.mul(line.a, x) ^ line.b) for x in xs]


def vanishing_poly(F: GF2m, line: Line) -> Poly:
    """(T - a^q)^(q+1) - gamma, expanded.

    In characteristic 2, (T + c)^(q+1) = (T^q + c^q)(T + c), and with
    c = a^q we have c^q = a, c^(q+1) = a^(q+1).
    """
    if line.gamma == 0:
        raise TangentLineError(f"line {line} is tangent")
    q = F.q
    c = F.frob(line.a)
    coeffs = [0] * (q + 2)
    coeffs[q + 1] = 1
    coeffs[q] ^= c
    coeffs[1] ^= line.a
    coeffs[0] ^= F.norm(line.a) ^ line.gamma
    return normalize(coeffs)


def lines_through(F: GF2m, p: Point) -> list[Line]:
    """The q^2 - 1 secant lines through ``p``, sorted by slope."""
    if not on_curve(F, p):
        raise InvalidPointError(f"{p} is not on the curve")
    tangent_slope = F.frob(p.alpha)
    out = []
    for a in F.elements():
        if a == tangent_slope:
            continue
        b = p.beta ^ F.mul(a, p.alpha)
        out.append(make_line(F, a, b))
    return out
