"""Division polynomials, primitive parts, and the mu invariant.

Odd-index Psi_m are polynomials in x.  Even-index Psi_m carry one factor of
Psi_2 = 2y + a1 x + a3, and we store only the x-part f_m with Psi_m = Psi_2 f_m.
Every Psi_2^2 produced by the recursion is replaced by the cubic
4x^3 + b2 x^2 + 2 b4 x + b6, which keeps everything univariate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ExtRational, field_valuation
from .curve import CurveModel, is_supersingular_at
from .errors import InvalidInput, NotSupersingular
from .poly import Poly, poly_exact_div

__all__ = [
    "DivisionPoly",
    "division_polynomial",
    "primitive_part",
    "torsion_constant_coefficient",
    "mu",
    "mu_coefficient_index",
]


@dataclass(frozen=True)
class DivisionPoly:
    m: int
    xpart: Poly
    has_psi2_factor: bool

    @property
    def expected_degree(self) -> int:
        m = self.m
        return (m * m - 4) // 2 if self.has_psi2_factor else (m * m - 1) // 2


@lru_cache(maxsize=None)
def _xpart(curve: CurveModel, m: int) -> Poly:
    K = curve.descriptor
    b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
    if m == 0:
        return Poly(K, [])
    if m in (1, 2):
        return Poly.constant(K, 1)
    if m == 3:
        return Poly(K, [b8, 3 * b6, 3 * b4, b2, 3])
    if m == 4:
        return Poly(K, [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2])
    k, odd = divmod(m, 2)
    f = lambda i: _xpart(curve, i)  # noqa: E731
    if odd:
        F2 = curve.psi2_squared() ** 2
        first = f(k + 2) * f(k) ** 3
        second = f(k - 1) * f(k + 1) ** 3
        if k % 2 == 0:
            return first * F2 - second
        return first - F2 * second
    return f(k - 1) ** 2 * f(k) * f(k + 2) - f(k - 2) * f(k) * f(k + 1) ** 2


def division_polynomial(curve: CurveModel, m: int) -> DivisionPoly:
    """Psi_m as (x-part, has Psi_2 factor)."""
    if m < 1:
        raise InvalidInput("division polynomial index must be positive")
    return DivisionPoly(m, _xpart(curve, m), m % 2 == 0)


def primitive_part(curve: CurveModel, p: int, n: int) -> Poly:
    """Psi_{p^n} / Psi_{p^(n-1)}: leading coefficient p, roots the distinct
    x-coordinates of points of exact order p^n.  For p^n = 2 this is Psi_2^2."""
    if n < 1:
        raise InvalidInput("level n must be positive")
    if p == 2 and n == 1:
        return curve.psi2_squared()
    return poly_exact_div(_xpart(curve, p**n), _xpart(curve, p ** (n - 1)))


def torsion_constant_coefficient(curve: CurveModel, p: int, n: int):
    """Constant coefficient of Psi_{p^n} (p odd) or of Psi_2 Psi_{2^n} (p = 2)."""
    f = _xpart(curve, p**n)
    if p == 2:
        f = curve.psi2_squared() * f
    return f[0]


def mu_coefficient_index(p: int) -> int:
    return (p * p - p) // 2


def mu(curve: CurveModel, p: int) -> ExtRational:
    """Valuation of the coefficient of x^((p^2-p)/2) in Psi_p, or
    v(4 a2 + a1^2)/2 when p = 2.  Defined only for supersingular reduction."""
    if not is_supersingular_at(curve, p):
        raise NotSupersingular(f"curve is not supersingular at p={p}")
    if p == 2:
        return field_valuation(4 * curve.a2 + curve.a1 * curve.a1, 2) / 2
    return field_valuation(_xpart(curve, p)[mu_coefficient_index(p)], p)
