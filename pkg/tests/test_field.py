import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hermlift.errors import InvalidModulusError, InvalidParameterError
from hermlift.field import MODULI, GF2m, field_new, is_irreducible

# GF(4) = {0, 1, w, w^2} with w = 0b10, w^2 = w + 1 = 0b11
W, W2 = 0b10, 0b11
GF4_MUL = {
    (W, W): W2, (W, W2): 1, (W2, W2): W,
}


def test_smallest_field():
    F = field_new(1)
    assert F.q == 2 and F.order == 4
    assert list(F.elements()) == [0, 1, 2, 3]


@pytest.mark.parametrize("k", [0, 9, -1])
def test_k_out_of_range(k):
    with pytest.raises(InvalidParameterError):
        field_new(k)


def test_reducible_modulus_rejected():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    with pytest.raises(InvalidModulusError):
        GF2m(2, modulus=0b10101)


@pytest.mark.parametrize("k", sorted(MODULI))
def test_moduli_irreducible(k):
    assert is_irreducible(MODULI[k])
    assert MODULI[k].bit_length() - 1 == 2 * k


def test_gf4_table(gf):
    F = gf(1)
    for (a, b), c in GF4_MUL.items():
        assert F.mul(a, b) == c
        assert F.mul(b, a) == c
    assert F.inv(W) == W2
    assert F.inv(1) == 1


def test_identity_and_zero(gf):
    F = gf(2)
    for x in F.elements():
        assert F.mul(1, x) == x
        assert F.mul(0, x) == 0


def test_inv_zero(gf):
    with pytest.raises(ZeroDivisionError):
        gf(2).inv(0)


def test_gf16_has_order_15_generator(gf):
    F = gf(2)

    def order(x):
        e, y = 1, x
        while y != 1:
            y = F.mul(y, x)
            e += 1
        return e

    orders = {x: order(x) for x in range(1, 16)}
    assert max(orders.values()) == 15
    assert orders[F.generator] == 15


def test_subfield_maps_gf4(gf):
    F = gf(1)
    assert F.subfield_maps(W) == (W2, 1, 1)
    assert F.subfield_maps(0) == (0, 0, 0)
    assert F.subfield_maps(1) == (1, 0, 1)


@pytest.mark.parametrize("k", [1, 2])
def test_axioms_exhaustive(gf, k):
    F = gf(k)
    el = list(F.elements())
    for a, b, c in itertools.product(el, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)


@pytest.mark.parametrize("k", [3, 4])
def test_axioms_pairs_exhaustive(gf, k):
    F = gf(k)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == F.mul(b, a)


@settings(max_examples=300, deadline=None)
@given(k=st.integers(1, 8), data=st.data())
def test_axioms_sampled(k, data):
    F = GF2m(k)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.frob(a ^ b) == F.frob(a) ^ F.frob(b)
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    if a:
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fermat(gf, k):
    F = gf(k)
    for x in F.elements():
        assert F.pow(x, F.order) == x
        if x:
            assert F.pow(x, F.order - 1) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_trace_norm_fibers(gf, k):
    F = gf(k)
    sub = {y for y in F.elements() if F.pow(y, F.q) == y}
    assert len(sub) == F.q
    traces, norms = {}, {}
    for x in F.elements():
        fx, tr, nm = F.subfield_maps(x)
        assert fx == F.pow(x, F.q)
        traces.setdefault(tr, []).append(x)
        if x:
            norms.setdefault(nm, []).append(x)
    assert set(traces) == sub
    assert all(len(v) == F.q for v in traces.values())
    assert set(norms) == sub - {0}
    assert all(len(v) == F.q + 1 for v in norms.values())


def test_trace_is_subfield_linear(gf):
    F = gf(2)
    for c in F.subfield():
        for x in F.elements():
            assert F.trace(F.mul(c, x)) == F.mul(c, F.trace(x))


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_vector_ops_match_scalar(gf, k):
    F = gf(k)
    rng = np.random.default_rng(k)
    a = rng.integers(0, F.order, 500)
    b = rng.integers(0, F.order, 500)
    got = F.mul_vec(a, b)
    assert [int(x) for x in got] == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert [int(x) for x in F.pow_vec(a, 7)] == [F.pow(int(x), 7) for x in a]
    nz = a[a != 0]
    assert [int(x) for x in F.inv_vec(nz)] == [F.inv(int(x)) for x in nz]


def test_hex_round_trip(gf):
    F = gf(3)
    assert F.to_hex(5) == "05"
    for x in F.elements():
        assert F.from_hex(F.to_hex(x)) == x
    with pytest.raises(InvalidParameterError):
        F.from_hex("ff")
