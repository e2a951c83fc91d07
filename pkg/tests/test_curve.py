import pytest

from hermlift.curve import (
    Line,
    Point,
    hermitian_lines,
    hermitian_points,
    line_points,
    lines_through,
    make_line,
    on_curve,
    vanishing_poly,
)
from hermlift.errors import InvalidPointError, TangentLineError
from hermlift.poly import from_roots


def brute_points(F):
    q = F.q
    return [(x, y) for x in F.elements() for y in F.elements()
            if F.pow(x, q + 1) == F.pow(y, q) ^ y]


@pytest.mark.parametrize("k, count", [(1, 8), (2, 64)])
def test_point_count_matches_scan(gf, k, count):
    F = gf(k)
    pts = hermitian_points(F)
    assert len(pts) == count
    assert [tuple(p) for p in pts] == brute_points(F)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_points_sorted_and_on_curve(gf, k):
    F = gf(k)
    pts = hermitian_points(F)
    assert pts == sorted(pts)
    assert Point(0, 0) in pts
    assert all(on_curve(F, p) for p in pts)


@pytest.mark.parametrize("k, count", [(1, 8), (2, 192)])
def test_line_count_matches_scan(gf, k, count):
    F = gf(k)
    q = F.q
    brute = [(a, b) for a in F.elements() for b in F.elements()
             if F.pow(a, q + 1) ^ F.pow(b, q) ^ b]
    lines = hermitian_lines(F)
    assert len(lines) == count
    assert [(ln.a, ln.b) for ln in lines] == brute
    assert all(ln.gamma and F.in_subfield(ln.gamma) for ln in lines)


def test_tangent_origin_excluded(gf):
    F = gf(2)
    assert all((ln.a, ln.b) != (0, 0) for ln in hermitian_lines(F))
    with pytest.raises(TangentLineError):
        line_points(F, make_line(F, 0, 0))
    with pytest.raises(TangentLineError):
        vanishing_poly(F, Line(0, 0, 0))


def test_q2_horizontal_line(gf):
    F = gf(1)
    for b in F.elements():
        line = make_line(F, 0, b)
        if line.gamma == 0:
            continue
        xs = sorted(p.alpha for p in line_points(F, line))
        assert xs == sorted(x for x in F.elements() if F.pow(x, 3) == line.gamma)
        assert vanishing_poly(F, line) == (line.gamma, 0, 0, 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_line_points(gf, k):
    F = gf(k)
    for line in hermitian_lines(F):
        pts = line_points(F, line)
        assert len(pts) == F.q + 1
        assert len({p.alpha for p in pts}) == F.q + 1
        for p in pts:
            assert on_curve(F, p)
            assert p.beta == F.mul(line.a, p.alpha) ^ line.b


@pytest.mark.parametrize("k", [1, 2])
def test_vanishing_poly_is_product_of_roots(gf, k):
    F = gf(k)
    for line in hermitian_lines(F):
        P = vanishing_poly(F, line)
        assert len(P) == F.q + 2 and P[-1] == 1
        assert from_roots(F, [p.alpha for p in line_points(F, line)]) == P


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pencil(gf, k):
    F = gf(k)
    q = F.q
    total = 0
    for p in hermitian_points(F):
        through = lines_through(F, p)
        assert len(through) == q * q - 1
        sets = [set(line_points(F, ln)) for ln in through]
        for s in sets:
            assert p in s
        for s1, s2 in zip(sets, sets[1:]):
            assert s1 & s2 == {p}
        total += len(through)
    assert total == (q**4 - q**3) * (q + 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_excluded_slope_is_tangent(gf, k):
    F = gf(k)
    for p in hermitian_points(F):
        for a in F.elements():
            gamma = make_line(F, a, p.beta ^ F.mul(a, p.alpha)).gamma
            assert (gamma == 0) == (a == F.frob(p.alpha))


def test_lines_through_off_curve(gf):
    F = gf(2)
    bad = next(Point(x, y) for x in F.elements() for y in F.elements()
               if not on_curve(F, Point(x, y)))
    with pytest.raises(InvalidPointError):
        lines_through(F, bad)
