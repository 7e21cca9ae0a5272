"""The formal group of E as an independent route to torsion valuations.

w(z) comes from the usual fixed-point recursion, the formal logarithm from
integrating the invariant differential, and [m]T = exp(m log T) with exp the
compositional inverse of log.  Torsion valuations are then read off Newton
polygons of [p]T - beta, one fiber at a time, with no root finding.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import INF, ExtRational, FieldElement, as_rational, field_valuation
from .curve import CurveModel
from .errors import InvalidInput, PrecisionTooLow
from .poly import NewtonPolygon, Series, lower_hull

__all__ = [
    "formal_expansion",
    "multiplication_series",
    "default_precision",
    "fiber_valuations",
    "fiber_from_valuations",
    "iterate_fibers",
    "oracle_spectrum",
    "slot_hull_dominates",
    "model_valuations",
]


def default_precision(p: int) -> int:
    return p * p + 2


def _w_series(curve: CurveModel, precision: int) -> Series:
    """w(z) = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.

    Coefficient k of the right side needs only w_j with j < k, so the
    coefficients and those of w^2, w^3 are filled in one pass.
    """
    a1, a2, a3, a4, a6 = curve.a_invariants
    zero = FieldElement.from_rational(curve.descriptor, 0)
    n = precision
    w, w2, w3 = [zero] * n, [zero] * n, [zero] * n

    def conv(a, b, k):
        acc = zero
        for i in range(3, k - 2):
            if not a[i].is_zero() and not b[k - i].is_zero():
                acc = acc + a[i] * b[k - i]
        return acc

    for k in range(3, n):
        w2[k] = conv(w, w, k)
        w3[k] = conv(w, w2, k)
        val = a3 * w2[k] + a6 * w3[k] + a1 * w[k - 1] + a2 * w[k - 2] + a4 * w2[k - 1]
        if k == 3:
            val = val + 1
        w[k] = val
    return Series(curve.descriptor, w, n)


@lru_cache(maxsize=64)
def formal_expansion(curve: CurveModel, precision: int):
    """(w(z), log(z)), both known to O(z^precision)."""
    if precision < 4:
        raise PrecisionTooLow("formal expansion needs precision >= 4")
    a1, a3 = curve.a1, curve.a3
    w = _w_series(curve, precision + 3)
    u = w.shift_down(3)  # w = z^3 u, u(0) = 1
    z = Series.variable(curve.descriptor, precision)
    # omega/dz = (2 + z u'/u) / (2 - a1 z - a3 z^3 u)
    numer = (u.derivative() * u.inverse()).shift_up(1) + 2
    denom = 2 - z * a1 - (u.shift_up(3) * a3)
    omega = (numer * denom.truncate(precision).inverse()).truncate(precision)
    log = omega.integral().truncate(precision)
    return w.truncate(precision), log


@lru_cache(maxsize=64)
def _exp_series(curve: CurveModel, precision: int) -> Series:
    return formal_expansion(curve, precision)[1].reversion()


def multiplication_series(curve: CurveModel, m: int, precision: int) -> Series:
    """[m]T = exp(m log T) to O(T^precision)."""
    if precision < 2:
        raise PrecisionTooLow("multiplication series needs precision >= 2")
    if m == 0:
        return Series(curve.descriptor, [], precision)
    log = formal_expansion(curve, max(precision, 4))[1]
    exp = _exp_series(curve, max(precision, 4))
    return exp.compose(log * m).truncate(precision)


def model_valuations(p: int, mu: ExtRational) -> list:
    """Coefficient valuations of an idealized [p]T whose only relevant
    terms are p T, a coefficient of valuation mu at T^p, and a unit at T^(p^2)."""
    vals = [INF] * (p * p + 1)
    vals[1] = Fraction(1)
    vals[p] = as_rational(mu)
    vals[p * p] = Fraction(0)
    return vals


def fiber_from_valuations(vals: Sequence[ExtRational], beta_valuation: ExtRational) -> list:
    """Root valuations of sum_k c_k T^k - beta, given v(c_k) for k = 0..p^2
    (entry 0 ignored) and v(beta).  Returns [(valuation, count)], largest
    first; beta = 0 yields the nonzero roots plus (INF, 1)."""
    if beta_valuation is INF:
        poly = NewtonPolygon.from_points((k - 1, v) for k, v in enumerate(vals) if k >= 1)
        roots = poly.root_valuations() + [(INF, 1)]
    else:
        pts = [(0, beta_valuation)] + [(k, v) for k, v in enumerate(vals) if k >= 1]
        roots = NewtonPolygon.from_points(pts).root_valuations()
    c = Counter()
    for v, m in roots:
        c[v] += m
    return sorted(c.items(), reverse=True)


def _truncated_valuations(mul_p: Series, p: int) -> list:
    if mul_p.precision < p * p + 1:
        raise PrecisionTooLow(f"need precision >= {p * p + 1} for p={p}, have {mul_p.precision}")
    vals = [INF] + [field_valuation(mul_p[k], p) for k in range(1, p * p + 1)]
    if vals[p * p] != 0:
        raise InvalidInput(f"coefficient of T^{p * p} is not a unit; formal group does not have height 2")
    return vals


def fiber_valuations(mul_p: Series, beta_valuation, p: int) -> list:
    """Valuations of the roots of [p]T - beta with v(beta) = beta_valuation."""
    beta_valuation = as_rational(beta_valuation)
    if beta_valuation is not INF and beta_valuation <= 0:
        raise InvalidInput("beta must lie in the maximal ideal")
    return fiber_from_valuations(_truncated_valuations(mul_p, p), beta_valuation)


def iterate_fibers(vals: Sequence[ExtRational], n: int) -> list:
    """Multiset of valuations of exact-order-p^n elements, obtained by
    pulling back through [p] level by level starting from 0."""
    level = Counter(dict(fiber_from_valuations(vals, INF)))
    del level[INF]
    for _ in range(n - 1):
        nxt = Counter()
        for v, c in level.items():
            for w, d in fiber_from_valuations(vals, v):
                nxt[w] += c * d
        level = nxt
    return sorted(level.items(), reverse=True)


def oracle_spectrum(mul_p: Series, p: int, n: int) -> list:
    return iterate_fibers(_truncated_valuations(mul_p, p), n)


def slot_hull_dominates(mul_p: Series, p: int, beta_valuation=INF) -> bool:
    """Whether every known coefficient of [p]T - beta lies on or above the
    hull through the slots {0, 1, p, p^2}, extended flat past p^2.

    This is what licenses truncating [p]T at degree p^2.
    """
    beta_valuation = as_rational(beta_valuation)
    slots = [1, p, p * p]
    pts = [(k, field_valuation(mul_p[k], p)) for k in slots]
    if beta_valuation is not INF:
        pts.append((0, beta_valuation))
    hull = lower_hull(pts)

    def height(k):
        if k >= hull[-1][0]:
            return hull[-1][1]
        for (i0, v0), (i1, v1) in zip(hull, hull[1:]):
            if i0 <= k <= i1:
                return v0 + (v1 - v0) * Fraction(k - i0, i1 - i0)
        return None  # left of the first vertex: only possible when beta = 0 and k = 0

    for k in range(1, mul_p.precision):
        v = field_valuation(mul_p[k], p)
        h = height(k)
        if h is not None and v is not INF and v < h:
            return False
    return True
