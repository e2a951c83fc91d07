"""Hermitian lifted codes over GF(q^2), q = 2^k.

Locally recoverable codes on the affine Hermitian curve: good-monomial
classification, dimension bounds, and line-based erasure repair.
"""

from .field import GF2m, field_new

__version__ = "0.1.0"

__all__ = ["GF2m", "field_new", "__version__"]
