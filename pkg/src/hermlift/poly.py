"""Polynomials over GF(q^2).

Univariate polynomials are tuples of field elements indexed by degree, with
trailing zeros stripped; the zero polynomial is ``()``.  Bivariate
polynomials are dicts ``{(i, j): coeff}`` with no zero coefficients.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DuplicateNodeError,
    InvalidModulusError,
    InvalidMonomialError,
    TangentLineError,
)
from .field import GF2m

Poly = tuple
BivarPoly = dict

ZERO: Poly = ()
ONE: Poly = (1,)
T: Poly = (0, 1)


def normalize(coeffs: Iterable[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return len(p) - 1


def add(p: Poly, r: Poly) -> Poly:
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for d, c in enumerate(r):
        out[d] ^= c
    return normalize(out)


sub = add


def scale(F: GF2m, c: int, p: Poly) -> Poly:
    if c == 0:
        return ZERO
    return tuple(F.mul(c, x) for x in p)


def mul(F: GF2m, p: Poly, r: Poly) -> Poly:
    if not p or not r:
        return ZERO
    out = [0] * (len(p) + len(r) - 1)
    for s, u in enumerate(p):
        if u == 0:
            continue
        for t, v in enumerate(r):
            if v:
                out[s + t] ^= F.mul(u, v)
    return normalize(out)


def _check_modulus(modulus: Poly) -> None:
    if len(modulus) < 2 or modulus[-1] != 1:
        raise InvalidModulusError("modulus must be monic of degree >= 1")


def divmod_poly(F: GF2m, f: Poly, modulus: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of ``f`` by a monic ``modulus``."""
    _check_modulus(modulus)
    dm = len(modulus) - 1
    rem = list(f)
    if len(rem) <= dm:
        return ZERO, normalize(rem)
    quot = [0] * (len(rem) - dm)
    for d in range(len(rem) - 1, dm - 1, -1):
        c = rem[d]
        if c == 0:
            continue
        quot[d - dm] = c
        for t in range(dm + 1):
            if modulus[t]:
                rem[d - dm + t] ^= F.mul(c, modulus[t])
    return normalize(quot), normalize(rem[:dm])


def poly_mod_reduce(F: GF2m, f: Poly, modulus: Poly) -> Poly:
    return divmod_poly(F, f, modulus)[1]


def pow_mod(F: GF2m, base: Poly, e: int, modulus: Poly) -> Poly:
    result = poly_mod_reduce(F, ONE, modulus)
    base = poly_mod_reduce(F, base, modulus)
    while e:
        if e & 1:
            result = poly_mod_reduce(F, mul(F, result, base), modulus)
        e >>= 1
        if e:
            base = poly_mod_reduce(F, mul(F, base, base), modulus)
    return result


def evaluate(F: GF2m, p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = F.mul(acc, x) ^ c
    return acc


def from_roots(F: GF2m, roots: Iterable[int]) -> Poly:
    """The monic polynomial prod (T - x) over ``roots``."""
    p = ONE
    for x in roots:
        p = mul(F, p, (x, 1))
    return p


def restrict_and_reduce(F: GF2m, i: int, j: int, line) -> Poly:
    """``T^i (aT+b)^j mod P_{a,gamma}`` for the line ``y = a x + b``.

    Both factors are reduced by square-and-multiply before they meet, so the
    degree-(i+j) product is never formed.
    """
    from .curve import vanishing_poly

    q = F.q
    if not (0 <= i < q * q and 0 <= j < q):
        raise InvalidMonomialError(f"(i, j) = ({i}, {j}) outside 0<=i<{q * q}, 0<=j<{q}")
    if line.gamma == 0:
        raise TangentLineError(f"line {line} is tangent")
    P = vanishing_poly(F, line)
    left = pow_mod(F, T, i, P)
    right = pow_mod(F, normalize((line.b, line.a)), j, P)
    return poly_mod_reduce(F, mul(F, left, right), P)


def interpolate(F: GF2m, pairs: Sequence[tuple[int, int]]) -> Poly:
    """Lagrange interpolation through ``(x, y)`` pairs with distinct ``x``."""
    xs = [x for x, _ in pairs]
    if not xs:
        raise DuplicateNodeError("need at least one node")
    if len(set(xs)) != len(xs):
        raise DuplicateNodeError("interpolation nodes must be distinct")
    master = from_roots(F, xs)
    acc = [0] * len(xs)
    for x, y in pairs:
        if y == 0:
            continue
        # master / (T - x) by synthetic division
        basis = [0] * len(xs)
        carry = 0
        for d in range(len(master) - 1, 0, -1):
            carry = master[d] ^ F.mul(carry, x)
            basis[d - 1] = carry
        denom = evaluate(F, normalize(basis), x)
        c = F.div(y, denom)
        for d, b in enumerate(basis):
            if b:
                acc[d] ^= F.mul(c, b)
    return normalize(acc)


# -- bivariate ----------------------------------------------------------------


def bivar_add_term(f: BivarPoly, key: tuple[int, int], c: int) -> None:
    v = f.get(key, 0) ^ c
    if v:
        f[key] = v
    else:
        f.pop(key, None)


def bivar_evaluate(F: GF2m, f: BivarPoly, x: int, y: int) -> int:
    acc = 0
    for (i, j), c in f.items():
        acc ^= F.mul(c, F.mul(F.pow(x, i), F.pow(y, j)))
    return acc


def normal_form(F: GF2m, f: BivarPoly) -> BivarPoly:
    """Rewrite ``f`` onto the footprint {X^i Y^j : i < q^2, j < q}.

    Uses Y^q -> X^(q+1) + Y and X^(q^2) -> X, which hold on every affine
    point of the curve.
    """
    q, n = F.q, F.order
    current = {key: c for key, c in f.items() if c}
    while True:
        nxt: BivarPoly = {}
        changed = False
        for (i, j), c in current.items():
            if j >= q:
                bivar_add_term(nxt, (i + q + 1, j - q), c)
                bivar_add_term(nxt, (i, j - q + 1), c)
                changed = True
            elif i >= n:
                bivar_add_term(nxt, (i - (n - 1), j), c)
                changed = True
            else:
                bivar_add_term(nxt, (i, j), c)
        current = nxt
        if not changed:
            return current
