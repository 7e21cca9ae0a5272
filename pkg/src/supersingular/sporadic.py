"""Degree gates: a lower bound on the degree of any point on X_1(N) coming
from a given j-invariant, compared exactly against the gonality bound
11 N^2 / 840.  A gate can rule sporadicity out but never certify it."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import factorint, isprime

from .curve import CurveModel
from .errors import InvalidInput, PreconditionViolated
from .spectrum import exact_order_count, minimal_torsion_field_degree, torsion_spectrum

__all__ = [
    "JClass",
    "Decision",
    "SporadicVerdict",
    "NoSporadicPointsExist",
    "NO_SPORADIC_POINTS",
    "gonality_upper_bound",
    "primepower_gate",
    "composite_gate",
    "custom_gate",
]


class JClass(str, Enum):
    GENERIC = "generic"
    J0 = "j0"
    J1728 = "j1728"

    @property
    def aut_order(self) -> int:
        return {"generic": 2, "j0": 6, "j1728": 4}[self.value]

    @classmethod
    def of_curve(cls, curve: CurveModel) -> "JClass":
        if curve.c4.is_zero():
            return cls.J0
        if curve.c6.is_zero():
            return cls.J1728
        return cls.GENERIC


class Decision(str, Enum):
    NOT_SPORADIC = "NotSporadic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SporadicVerdict:
    decision: Decision
    degree_lower_bound: Fraction
    gonality_bound: Fraction
    rationale: str
    level: int


class NoSporadicPointsExist:
    """X_1(N) for N <= 12 has Q-gonality 1, so it has no sporadic points."""

    def __repr__(self):
        return "NO_SPORADIC_POINTS"


NO_SPORADIC_POINTS = NoSporadicPointsExist()


def gonality_upper_bound(N: int):
    if N < 1:
        raise InvalidInput("level must be positive")
    if N <= 12:
        return NO_SPORADIC_POINTS
    return Fraction(11 * N * N, 840)


def _verdict(N: int, lower: Fraction, rationale: str) -> SporadicVerdict:
    bound = gonality_upper_bound(N)
    if bound is NO_SPORADIC_POINTS:
        # every point has degree >= 1 and delta(X_1(N)) = 1 here
        return SporadicVerdict(Decision.NOT_SPORADIC, max(Fraction(lower), Fraction(1)), Fraction(1), rationale, N)
    decision = Decision.NOT_SPORADIC if lower >= bound else Decision.INCONCLUSIVE
    return SporadicVerdict(decision, Fraction(lower), bound, rationale, N)


def _check_prime_power(p: int, n: int) -> None:
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    if n < 1:
        raise InvalidInput("level exponent n must be positive")


# degree of an extension that may be needed to resolve bad additive reduction
_REDUCTION_DEGREE = {2: 24, 3: 12}


def primepower_gate(jclass: JClass, p: int, n: int, has_canonical: bool) -> SporadicVerdict:
    """Gate for X_1(p^n), for a curve supersingular above p."""
    _check_prime_power(p, n)
    jclass = JClass(jclass)
    N = p**n
    size = exact_order_count(p, n)
    # least degrees of CM points; these do not depend on canonical subgroups
    if jclass is JClass.J1728 and p == 2:
        return _verdict(N, Fraction(2) ** (2 * n - 4), "CM-constant")
    if jclass is JClass.J0 and p == 3:
        return _verdict(N, Fraction(3) ** (2 * n - 3), "CM-constant")
    if has_canonical:
        return _verdict(N, Fraction(0), "hypothesis-unmet")
    if jclass is JClass.GENERIC:
        lower = Fraction(size, _REDUCTION_DEGREE.get(p, 6) * jclass.aut_order)
    elif p > 3:
        lower = Fraction(size, 6 * jclass.aut_order)
    elif jclass is JClass.J0:  # p = 2: twist to y^2 + y = x^3
        lower = Fraction(size, 6 * 6)
    else:  # j = 1728, p = 3: twist to y^2 = x^3 - x
        lower = Fraction(size, 4 * 4)
    return _verdict(N, lower, jclass.value)


def composite_gate(N: int, supersingular_assertion: bool = True) -> SporadicVerdict:
    """Gate for X_1(N), 6 not dividing N, for E/Q with good supersingular
    reduction at every prime dividing N."""
    if N <= 12:
        raise PreconditionViolated(f"N = {N} <= 12: X_1(N) has no sporadic points")
    if N % 6 == 0:
        raise PreconditionViolated(f"6 divides N = {N}")
    if not supersingular_assertion:
        return _verdict(N, Fraction(0), "hypothesis-unmet")
    degree = minimal_torsion_field_degree(sorted(factorint(N).items()))
    # 1/6 for twisting to the good model, 1/6 for the Weber function
    return _verdict(N, Fraction(degree, 36), "composite")


def custom_gate(p: int, n: int, mu, reduction_factor: int, aut_order: int) -> SporadicVerdict:
    """Gate with a caller-supplied budget for field, twist and automorphism
    losses.  The forced degree is the least ramification index that admits
    some element of exact order p^n: the smallest valuation denominator."""
    _check_prime_power(p, n)
    if reduction_factor < 1 or aut_order < 1:
        raise InvalidInput("reduction_factor and aut_order must be positive")
    spectrum = torsion_spectrum(p, n, mu)
    ramification = min(e.valuation.denominator for e in spectrum.entries)
    return _verdict(p**n, Fraction(ramification, reduction_factor * aut_order), "custom")
