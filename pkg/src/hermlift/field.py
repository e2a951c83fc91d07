"""Arithmetic in GF(2^m), m = 2k, viewed as GF(q^2) over its subfield GF(q).

Elements are plain Python ints whose bit ``i`` is the coefficient of ``x^i``
in the polynomial basis.  Addition is XOR.  Scalar multiplication is a
carry-less product followed by reduction; the numpy helpers at the bottom of
:class:`GF2m` go through log/exp tables and are used by the batch routines.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import InvalidModulusError, InvalidParameterError

# degree-2k moduli over GF(2), bit i = coefficient of x^i
MODULI = {
    1: 0b111,                   # x^2 + x + 1
    2: 0b10011,                 # x^4 + x + 1
    3: 0b1000011,               # x^6 + x + 1
    4: 0b100011011,             # x^8 + x^4 + x^3 + x + 1
    5: (1 << 10) | 0b1001,      # x^10 + x^3 + 1
    6: (1 << 12) | 0b1010011,   # x^12 + x^6 + x^4 + x + 1
    7: (1 << 14) | (1 << 10) | 0b1000011,  # x^14 + x^10 + x^6 + x + 1
    8: (1 << 16) | (1 << 12) | 0b1011,     # x^16 + x^12 + x^3 + x + 1
}

MAX_K = 8


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two bit-vectors."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test for a binary polynomial of degree >= 1."""
    m = f.bit_length() - 1
    if m < 1:
        return False

    def x_pow_2_pow(e: int) -> int:
        # x^(2^e) mod f by repeated squaring
        t = gf2_mod(0b10, f)
        for _ in range(e):
            t = gf2_mod(clmul(t, t), f)
        return t

    if x_pow_2_pow(m) != gf2_mod(0b10, f):
        return False
    for p in _prime_factors(m):
        if gf2_gcd(x_pow_2_pow(m // p) ^ 0b10, f) != 1:
            return False
    return True


class GF2m:
    """The field GF(q^2) with q = 2^k, together with its subfield GF(q).

    Instances are immutable; construct them through :func:`field_new` or
    ``GF2m(k)`` directly.
    """

    def __init__(self, k: int, modulus: int | None = None):
        if not isinstance(k, int) or k < 1 or k > MAX_K:
            raise InvalidParameterError(f"k must be in 1..{MAX_K}, got {k!r}")
        self.k = k
        self.q = 1 << k
        self.m = 2 * k
        self.order = self.q * self.q
        self.modulus = MODULI[k] if modulus is None else modulus
        if self.modulus.bit_length() - 1 != self.m or not is_irreducible(self.modulus):
            raise InvalidModulusError(f"{self.modulus:#x} is not an irreducible of degree {self.m}")
        self.hex_width = (self.m + 3) // 4

    def __repr__(self) -> str:
        return f"GF2m(k={self.k}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2m) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def describe(self) -> dict:
        return {"k": self.k, "q": self.q, "modulus": format(self.modulus, "x")}

    def elements(self) -> range:
        return range(self.order)

    # -- scalar arithmetic --------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return gf2_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, x: int) -> int:
        """x^q, by k squarings."""
        for _ in range(self.k):
            x = self.mul(x, x)
        return x

    def trace(self, x: int) -> int:
        """Relative trace x^q + x onto GF(q)."""
        return self.frob(x) ^ x

    def norm(self, x: int) -> int:
        """Relative norm x^(q+1) onto GF(q)."""
        return self.mul(self.frob(x), x)

    def subfield_maps(self, x: int) -> tuple[int, int, int]:
        fx = self.frob(x)
        return fx, fx ^ x, self.mul(fx, x)

    def in_subfield(self, y: int) -> bool:
        return self.frob(y) == y

    def subfield(self) -> list[int]:
        return [y for y in self.elements() if self.in_subfield(y)]

    # -- serialization ------------------------------------------------------

    def to_hex(self, x: int) -> str:
        return format(x, f"0{self.hex_width}x")

    def from_hex(self, s: str) -> int:
        x = int(s, 16)
        if not 0 <= x < self.order:
            raise InvalidParameterError(f"{s!r} is not an element of GF(2^{self.m})")
        return x

    # -- table-driven vector arithmetic ------------------------------------

    @cached_property
    def generator(self) -> int:
        """Smallest primitive element (the moduli are not all primitive)."""
        n = self.order - 1
        factors = _prime_factors(n)
        for g in range(2, self.order):
            if all(self.pow(g, n // p) != 1 for p in factors):
                return g
        return 1  # GF(2^m) with order-1 == 1 never happens for m >= 2

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        g, x = self.generator, 1
        for e in range(n):
            exp[e] = x
            log[x] = e
            x = self.mul(x, g)
        exp[n:] = exp[:n]
        exp.setflags(write=False)
        log.setflags(write=False)
        return exp, log

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays."""
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_vec(self, a, e: int) -> np.ndarray:
        """Elementwise a**e for a fixed exponent e >= 0 (0**0 == 1)."""
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = exp[(log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def inv_vec(self, a) -> np.ndarray:
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        n = self.order - 1
        return exp[(n - log[a]) % n]


def field_new(k: int) -> GF2m:
    return GF2m(k)
