from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersingular.algebra import INF, RATIONAL, FieldDescriptor, FieldElement
from supersingular.errors import InexactDivision, UnsupportedField
from supersingular.poly import (
    NewtonPolygon,
    Poly,
    Series,
    lower_hull,
    newton_polygon,
    newton_polygon_from_valuations,
    poly_exact_div,
    reciprocal_eisenstein,
)

Q = RATIONAL


def P(*coeffs):
    return Poly(Q, coeffs)


def test_exact_division_examples():
    assert poly_exact_div(P(-1, 0, 1), P(-1, 1)) == P(1, 1)
    with pytest.raises(InexactDivision):
        poly_exact_div(P(1, 0, 1), P(-1, 1))


def test_degree_and_trim():
    assert P(0, 0).degree == -1
    assert P(1, 2, 0, 0).degree == 1
    assert P(3).leading == 3


def test_monomial_polygon_is_a_point():
    f = Poly(Q, [0, 0, 0, 25])
    poly = newton_polygon(f, 5)
    assert poly.vertices == ((3, Fraction(2)),)
    assert poly.segments == ()


def test_zero_coefficients_are_skipped():
    poly = newton_polygon_from_valuations([Fraction(2), INF, Fraction(0)])
    assert poly.vertices == ((0, 2), (2, 0))
    assert poly.root_valuations() == [(Fraction(1), 2)]


def test_hull_drops_collinear_points():
    hull = lower_hull([(0, Fraction(0)), (1, Fraction(1)), (2, Fraction(2)), (3, Fraction(5))])
    assert hull == [(0, 0), (2, 2), (3, 5)]


def test_reciprocal_eisenstein_examples():
    assert reciprocal_eisenstein(P(1, 5), 5)
    assert not reciprocal_eisenstein(P(1, 1), 5)
    assert not reciprocal_eisenstein(P(1, 25), 5)
    with pytest.raises(UnsupportedField):
        reciprocal_eisenstein(Poly(FieldDescriptor.radical(2, 2), [1, 2]), 2)


coeff = st.integers(min_value=-60, max_value=60)
polys = st.lists(coeff, min_size=1, max_size=6).map(lambda c: P(*c)).filter(lambda f: not f.is_zero())


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_exact_division_roundtrip(f, g):
    assert poly_exact_div(f * g, g) == f


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_divmod_identity(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def _minkowski(a: NewtonPolygon, b: NewtonPolygon):
    segs = sorted(a.segments + b.segments)
    merged = []
    for s, length in segs:
        if merged and merged[-1][0] == s:
            merged[-1] = (s, merged[-1][1] + length)
        else:
            merged.append((s, length))
    return tuple(merged)


nonzero_const = st.integers(min_value=1, max_value=40).map(lambda k: k * 1)
polys_nz0 = st.lists(coeff, min_size=2, max_size=5).filter(lambda c: c[0] != 0 and c[-1] != 0).map(lambda c: P(*c))


@settings(max_examples=80, deadline=None)
@given(polys_nz0, polys_nz0, st.sampled_from([2, 3, 5]))
def test_polygon_of_product_is_minkowski_sum(f, g, p):
    a, b = newton_polygon(f, p), newton_polygon(g, p)
    assert newton_polygon(f * g, p).segments == _minkowski(a, b)


@settings(max_examples=80, deadline=None)
@given(polys, st.sampled_from([2, 3, 5, 7]))
def test_slopes_telescope(f, p):
    poly = newton_polygon(f, p)
    total = sum((s * length for s, length in poly.segments), Fraction(0))
    (i0, v0), (i1, v1) = poly.vertices[0], poly.vertices[-1]
    assert total == v1 - v0
    assert sum(length for _, length in poly.segments) == i1 - i0


# -- series ---------------------------------------------------------------------


def S(coeffs, prec):
    return Series(Q, coeffs, prec)


def test_series_inverse():
    one_minus_t = S([1, -1], 8)
    inv = one_minus_t.inverse()
    assert [inv[k] for k in range(8)] == [1] * 8
    assert inv.precision == 8


def test_series_precision_tracking():
    a = S([0, 1], 5)  # T + O(T^5)
    b = S([1, 1], 3)
    assert (a * b).precision == 4
    assert (a + b).precision == 3


def test_reversion_of_log1p():
    # log(1+T) has reversion exp(T) - 1
    n = 9
    log1p = S([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n)], n)
    rev = log1p.reversion()
    fact = 1
    for k in range(1, n):
        fact *= k
        assert rev[k] == Fraction(1, fact)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=6, max_size=6))
def test_reversion_composes_to_identity(tail):
    n = 8
    f = S([0, 1] + tail, n)
    g = f.reversion()
    ident = f.compose(g)
    assert [ident[k] for k in range(n)] == [0, 1] + [0] * (n - 2)


def test_series_over_radical_field():
    K = FieldDescriptor.radical(3, 5)
    pi = FieldElement.generator(K)
    f = Series(K, [0, pi, 1], 6)
    g = f * f
    assert g[2] == pi * pi
    assert g[3] == 2 * pi
