"""Valuations of the elements of exact order p^n in the formal group, in
closed form from (p, n, mu), and the ramification they force."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .algebra import INF, ExtRational, as_rational
from .errors import InvalidInput, InvalidMu

__all__ = [
    "CanonicalRegime",
    "SpectrumEntry",
    "ValuationSpectrum",
    "RamificationReport",
    "canonical_regime",
    "torsion_spectrum",
    "x_coordinate_spectrum",
    "ramification_bounds",
    "minimal_torsion_field_degree",
    "exact_order_count",
]


def exact_order_count(p: int, n: int) -> int:
    """Number of points of exact order p^n: p^(2n) - p^(2n-2)."""
    return p ** (2 * n) - p ** (2 * n - 2)


def _check_mu(mu) -> ExtRational:
    mu = as_rational(mu)
    if mu is not INF and mu <= 0:
        raise InvalidMu(f"mu must be positive, got {mu}")
    return mu


@dataclass(frozen=True)
class CanonicalRegime:
    kind: str  # "no_canonical" or "canonical"
    s: Optional[int] = None

    @property
    def has_canonical(self) -> bool:
        return self.kind == "canonical"


def canonical_regime(p: int, mu) -> CanonicalRegime:
    """No canonical subgroup iff mu >= p/(p+1); otherwise s is the least
    integer with mu >= 1/(p^s (p+1))."""
    mu = _check_mu(mu)
    if mu is INF or mu >= Fraction(p, p + 1):
        return CanonicalRegime("no_canonical")
    s = 0
    while mu < Fraction(1, p**s * (p + 1)):
        s += 1
    return CanonicalRegime("canonical", s)


@dataclass(frozen=True)
class SpectrumEntry:
    valuation: Fraction
    count: int
    above_canonical: bool
    tag: str  # "top", "layer", "off" or "uniform" (no canonical subgroup)
    layer: Optional[int] = None


@dataclass(frozen=True)
class ValuationSpectrum:
    p: int
    n: int
    mu: ExtRational
    entries: tuple

    @property
    def total_count(self) -> int:
        return sum(e.count for e in self.entries)

    @property
    def weighted_sum(self) -> Fraction:
        return sum((e.count * e.valuation for e in self.entries), Fraction(0))

    def multiset(self) -> list:
        """[(valuation, count)] with equal valuations merged, largest first."""
        c = Counter()
        for e in self.entries:
            c[e.valuation] += e.count
        return sorted(c.items(), reverse=True)


def torsion_spectrum(p: int, n: int, mu) -> ValuationSpectrum:
    if n < 1:
        raise InvalidInput("level n must be positive")
    mu = _check_mu(mu)
    regime = canonical_regime(p, mu)
    if not regime.has_canonical:
        size = exact_order_count(p, n)
        return ValuationSpectrum(p, n, mu, (SpectrumEntry(Fraction(1, size), size, False, "uniform"),))

    s = regime.s
    entries = []
    if n <= s + 1:
        count = p ** (n - 1) * (p - 1)
        entries.append(SpectrumEntry((1 - p ** (n - 1) * mu) / count, count, True, "top"))
        last_layer = n
    else:
        count = p ** (2 * (n - s - 1)) * p**s * (p - 1)
        entries.append(SpectrumEntry((1 - p**s * mu) / count, count, True, "top"))
        last_layer = s + 1
    for j in range(2, last_layer + 1):
        denom = p ** (2 * (n - j)) * (p * p - p)
        entries.append(SpectrumEntry(mu / denom, denom * p ** (j - 2) * (p - 1), True, "layer", j))
    denom = p ** (2 * (n - 1)) * (p * p - p)
    entries.append(SpectrumEntry(mu / denom, denom, False, "off"))
    return ValuationSpectrum(p, n, mu, tuple(entries))


def x_coordinate_spectrum(spectrum: ValuationSpectrum) -> list:
    """Valuations of distinct x-coordinates: v(x) = -2 v(element).

    Points P and -P share an x-coordinate, so counts halve, except for
    p^n = 2 where the three 2-torsion x-coordinates are distinct.
    """
    halve = not (spectrum.p == 2 and spectrum.n == 1)
    out = []
    for e in spectrum.entries:
        if halve and e.count % 2:
            raise AssertionError(f"odd count {e.count} cannot pair up under P -> -P")
        out.append((-2 * e.valuation, e.count // 2 if halve else e.count))
    return out


@dataclass(frozen=True)
class RamificationReport:
    e_P_lower: int
    e_P_strict: bool
    e_p_lower: int
    e_p_divisibility: Optional[int]
    lcm_denominators: int


def ramification_bounds(p: int, n: int, regime: CanonicalRegime, spectrum: ValuationSpectrum) -> RamificationReport:
    """Ramification forced on the division field (e_P) and on any field
    holding a point of exact order p^n (e_p)."""
    if (spectrum.p, spectrum.n) != (p, n):
        raise InvalidInput(f"spectrum is for ({spectrum.p}, {spectrum.n}), not ({p}, {n})")
    size = exact_order_count(p, n)
    phi = p**n - p ** (n - 1)
    return RamificationReport(
        e_P_lower=size,
        e_P_strict=regime.has_canonical,
        e_p_lower=phi + 1,
        e_p_divisibility=None if regime.has_canonical else size,
        lcm_denominators=lcm(*(e.valuation.denominator for e in spectrum.entries)),
    )


def minimal_torsion_field_degree(factorization: Sequence) -> int:
    """Degree of a minimal N-torsion point field over Q when no canonical
    subgroup exists above any p_i: the product of p_i^(2n_i) - p_i^(2n_i-2)."""
    degree = 1
    for p, n in factorization:
        degree *= exact_order_count(p, n)
    return degree
