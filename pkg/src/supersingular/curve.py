"""Long Weierstrass models, reduction at the prime above p, and the
supersingularity test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import INF, RATIONAL, FieldDescriptor, FieldElement, field_valuation
from .errors import BadReduction, InvalidInput, NonIntegralModel, NotShortForm
from .poly import Poly

__all__ = [
    "CurveModel",
    "has_good_reduction",
    "reduce_mod_p",
    "count_points_mod_p",
    "frobenius_trace",
    "is_supersingular_at",
    "deuring_coefficient",
]


@dataclass(frozen=True)
class CurveModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement
    label: Optional[str] = field(default=None, compare=False)
    b2: FieldElement = field(init=False, repr=False, compare=False)
    b4: FieldElement = field(init=False, repr=False, compare=False)
    b6: FieldElement = field(init=False, repr=False, compare=False)
    b8: FieldElement = field(init=False, repr=False, compare=False)
    discriminant: FieldElement = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        descriptors = {a.descriptor for a in self.a_invariants}
        if len(descriptors) != 1:
            raise InvalidInput("a-invariants live in different fields")
        a1, a2, a3, a4, a6 = self.a_invariants
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        if 4 * b8 != b2 * b6 - b4 * b4:
            raise AssertionError("b-invariant identity 4 b8 = b2 b6 - b4^2 failed")
        disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if disc.is_zero():
            raise InvalidInput("singular model: discriminant is zero")
        for name, value in (("b2", b2), ("b4", b4), ("b6", b6), ("b8", b8), ("discriminant", disc)):
            object.__setattr__(self, name, value)

    @classmethod
    def from_coefficients(
        cls, a: Sequence, descriptor: FieldDescriptor = RATIONAL, label: Optional[str] = None
    ) -> "CurveModel":
        """Build from [a1, a2, a3, a4, a6]; entries may be ints, Fractions,
        coordinate lists, or FieldElements."""
        if len(a) != 5:
            raise InvalidInput("expected five a-invariants [a1, a2, a3, a4, a6]")
        elems = []
        for c in a:
            if isinstance(c, FieldElement):
                elems.append(c)
            elif isinstance(c, (list, tuple)):
                elems.append(FieldElement(descriptor, c))
            else:
                elems.append(FieldElement.from_rational(descriptor, c))
        return cls(*elems, label=label)

    @property
    def a_invariants(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def descriptor(self) -> FieldDescriptor:
        return self.a1.descriptor

    @property
    def c4(self) -> FieldElement:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self) -> FieldElement:
        return -self.b2 * self.b2 * self.b2 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def j_invariant(self) -> FieldElement:
        return self.c4 * self.c4 * self.c4 / self.discriminant

    @property
    def is_short_form(self) -> bool:
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    def psi2_squared(self) -> Poly:
        """(2y + a1 x + a3)^2 rewritten in x: 4x^3 + b2 x^2 + 2 b4 x + b6."""
        return Poly(self.descriptor, [self.b6, 2 * self.b4, self.b2, 4])


def _check_integral(curve: CurveModel, p: int) -> None:
    for name, a in zip(("a1", "a2", "a3", "a4", "a6"), curve.a_invariants):
        if field_valuation(a, p) < 0:
            raise NonIntegralModel(f"{name} = {a} has negative valuation at p={p}")


def has_good_reduction(curve: CurveModel, p: int) -> bool:
    """v(discriminant) == 0 for an integral model."""
    _check_integral(curve, p)
    return field_valuation(curve.discriminant, p) == 0


def reduce_mod_p(elem: FieldElement, p: int) -> int:
    """Image in F_p of an element of nonnegative valuation.

    In the supported fields the residue field is F_p and every radical
    coordinate term of an integral element lies in the maximal ideal, so only
    the rational part survives.
    """
    v = field_valuation(elem, p)
    if v is not INF and v < 0:
        raise NonIntegralModel(f"{elem} is not integral at p={p}")
    c = elem.rational_part
    return c.numerator * pow(c.denominator, -1, p) % p


def count_points_mod_p(curve: CurveModel, p: int) -> int:
    """#E(F_p) by brute force, point at infinity included."""
    a1, a2, a3, a4, a6 = (reduce_mod_p(a, p) for a in curve.a_invariants)
    count = 1
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        for y in range(p):
            if (y * y + lin * y - rhs) % p == 0:
                count += 1
    return count


def frobenius_trace(curve: CurveModel, p: int) -> int:
    return p + 1 - count_points_mod_p(curve, p)


def is_supersingular_at(curve: CurveModel, p: int) -> bool:
    """Good reduction at the prime above p with Frobenius trace divisible by p."""
    if not has_good_reduction(curve, p):
        raise BadReduction(f"model does not have good reduction at p={p}")
    return frobenius_trace(curve, p) % p == 0


def deuring_coefficient(curve: CurveModel, p: int) -> FieldElement:
    """Coefficient of x^(p-1) in (x^3 + a4 x + a6)^((p-1)/2)."""
    if not curve.is_short_form:
        raise NotShortForm("Deuring coefficient needs a1 = a2 = a3 = 0")
    if p == 2:
        raise InvalidInput("Deuring coefficient is defined for odd p")
    f = Poly(curve.descriptor, [curve.a6, curve.a4, 0, 1])
    return (f ** ((p - 1) // 2))[p - 1]
