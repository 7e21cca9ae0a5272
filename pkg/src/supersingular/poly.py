"""Univariate polynomials and truncated power series over a FieldElement
coefficient field, exact division, and Newton polygons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import INF, ExtRational, FieldDescriptor, FieldElement, field_invert, field_valuation
from .errors import DivisionByZero, InexactDivision, PrecisionTooLow, UnsupportedField

__all__ = [
    "Poly",
    "Series",
    "NewtonPolygon",
    "lower_hull",
    "newton_polygon",
    "newton_polygon_from_valuations",
    "poly_exact_div",
    "reciprocal_eisenstein",
]


def _elem(descriptor, c) -> FieldElement:
    if isinstance(c, FieldElement):
        if c.descriptor != descriptor:
            raise ValueError(f"field mismatch: {c.descriptor} vs {descriptor}")
        return c
    return FieldElement.from_rational(descriptor, c)


def _convolve(a: Sequence[FieldElement], b: Sequence[FieldElement], zero, limit=None):
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    out = [zero] * n
    for i, x in enumerate(a):
        if i >= n:
            break
        if x.is_zero():
            continue
        for j in range(min(len(b), n - i)):
            y = b[j]
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


class Poly:
    """Polynomial with coefficients ``coeffs[i]`` of x^i; trailing zeros trimmed."""

    __slots__ = ("descriptor", "coeffs")

    def __init__(self, descriptor: FieldDescriptor, coeffs: Iterable = ()):
        cs = [_elem(descriptor, c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.descriptor = descriptor
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, descriptor: FieldDescriptor) -> "Poly":
        return cls(descriptor, [0, 1])

    @classmethod
    def constant(cls, descriptor: FieldDescriptor, c) -> "Poly":
        return cls(descriptor, [c])

    @property
    def zero_elem(self) -> FieldElement:
        return FieldElement.from_rational(self.descriptor, 0)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.zero_elem

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.descriptor == other.descriptor and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.descriptor, self.coeffs))

    def __repr__(self):
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Poly(" + (" + ".join(reversed(terms)) or "0") + ")"

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.descriptor != self.descriptor:
                raise ValueError("field mismatch")
            return other
        return Poly(self.descriptor, [other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.descriptor, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.descriptor, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return Poly(self.descriptor, [c * other for c in self.coeffs])
        other = self._coerce(other)
        return Poly(self.descriptor, _convolve(self.coeffs, other.coeffs, self.zero_elem))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(self.descriptor, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        lead_inv = field_invert(other.leading)
        rem = list(self.coeffs)
        dg = other.degree
        quot = [self.zero_elem] * max(len(rem) - dg, 1)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            c = c * lead_inv
            shift = k - dg
            quot[shift] = c
            for j, g in enumerate(other.coeffs):
                if not g.is_zero():
                    rem[shift + j] = rem[shift + j] - c * g
        return Poly(self.descriptor, quot), Poly(self.descriptor, rem[:dg] if dg > 0 else [])

    def monic(self) -> "Poly":
        return self * field_invert(self.leading)

    def reciprocal(self) -> "Poly":
        """x^deg * f(1/x)."""
        return Poly(self.descriptor, reversed(self.coeffs))

    def valuations(self, p: int) -> list:
        return [field_valuation(c, p) for c in self.coeffs]


def poly_exact_div(f: Poly, g: Poly) -> Poly:
    """Return q with f = q*g, raising ``InexactDivision`` otherwise."""
    q, r = divmod(f, g)
    if not r.is_zero():
        raise InexactDivision(f"nonzero remainder of degree {r.degree}")
    return q


class Series:
    """Truncated power series: ``coeffs[i]`` is known for i < ``precision``."""

    __slots__ = ("descriptor", "coeffs", "precision")

    def __init__(self, descriptor: FieldDescriptor, coeffs: Iterable, precision: int):
        cs = [_elem(descriptor, c) for c in coeffs][:precision]
        zero = FieldElement.from_rational(descriptor, 0)
        cs += [zero] * (precision - len(cs))
        self.descriptor = descriptor
        self.coeffs = tuple(cs)
        self.precision = precision

    @classmethod
    def variable(cls, descriptor: FieldDescriptor, precision: int) -> "Series":
        return cls(descriptor, [0, 1], precision)

    @property
    def zero_elem(self) -> FieldElement:
        return FieldElement.from_rational(self.descriptor, 0)

    def __getitem__(self, i: int) -> FieldElement:
        if i >= self.precision:
            raise PrecisionTooLow(f"coefficient {i} is beyond precision {self.precision}")
        return self.coeffs[i]

    def __len__(self):
        return self.precision

    def __repr__(self):
        terms = [f"({c})*T^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Series(" + (" + ".join(terms) or "0") + f" + O(T^{self.precision}))"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.descriptor == other.descriptor and self.coeffs == other.coeffs and self.precision == other.precision

    __hash__ = None

    def order(self) -> int:
        """Index of the first nonzero coefficient (``precision`` if none)."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.precision

    def truncate(self, precision: int) -> "Series":
        return Series(self.descriptor, self.coeffs, min(precision, self.precision))

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series(self.descriptor, [other], self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return Series(self.descriptor, [self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.descriptor, [-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return Series(self.descriptor, [c * other for c in self.coeffs], self.precision)
        other = self._coerce(other)
        # T^a * O(T^m) = O(T^(a+m)): precision grows with the other operand's order
        n = min(self.precision + other.order(), other.precision + self.order())
        return Series(self.descriptor, _convolve(self.coeffs, other.coeffs, self.zero_elem, n), n)

    __rmul__ = __mul__

    def shift_down(self, k: int) -> "Series":
        """Divide by T^k; the first k coefficients must vanish."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by T^{k}")
        return Series(self.descriptor, self.coeffs[k:], self.precision - k)

    def shift_up(self, k: int) -> "Series":
        return Series(self.descriptor, [0] * k + list(self.coeffs), self.precision + k)

    def derivative(self) -> "Series":
        return Series(self.descriptor, [c * i for i, c in enumerate(self.coeffs)][1:], self.precision - 1)

    def integral(self) -> "Series":
        """Antiderivative with zero constant term."""
        return Series(self.descriptor, [0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.precision + 1)

    def inverse(self) -> "Series":
        """1/f for f with invertible constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise DivisionByZero("series with zero constant term is not invertible")
        inv0 = field_invert(c0)
        out = [inv0]
        for k in range(1, self.precision):
            acc = self.zero_elem
            for j in range(1, k + 1):
                c = self.coeffs[j]
                if not c.is_zero():
                    acc = acc + c * out[k - j]
            out.append(-acc * inv0)
        return Series(self.descriptor, out, self.precision)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return Series(self.descriptor, [c / other for c in self.coeffs], self.precision)

    def compose(self, g: "Series") -> "Series":
        """self(g(T)) for g with zero constant term (Horner)."""
        if not g.coeffs[0].is_zero():
            raise ValueError("inner series must have zero constant term")
        n = min(self.precision, g.precision)
        g = g.truncate(n)
        acc = Series(self.descriptor, [self.coeffs[n - 1]], n)
        for c in reversed(self.coeffs[: n - 1]):
            acc = (acc * g).truncate(n) + c
        return acc

    def reversion(self) -> "Series":
        """Compositional inverse of f = c1*T + ... with c1 invertible.

        Coefficients are solved one degree at a time from f(g(T)) = T; the
        powers g^j are extended online since (g^j)_k only involves g_1..g_(k-j+1).
        """
        n = self.precision
        if n < 2 or not self.coeffs[0].is_zero() or self.coeffs[1].is_zero():
            raise PrecisionTooLow("reversion needs f(0) = 0 and an invertible linear coefficient")
        zero = self.zero_elem
        c1_inv = field_invert(self.coeffs[1])
        g = [zero] * n
        g[1] = c1_inv
        # powers[j][k] = coefficient of T^k in g^j
        powers = {1: g}
        for j in range(2, n):
            powers[j] = [zero] * n
        for k in range(2, n):
            acc = zero
            for j in range(2, k + 1):
                prev = powers[j - 1]
                val = zero
                for i in range(1, k - j + 2):
                    if not g[i].is_zero() and not prev[k - i].is_zero():
                        val = val + g[i] * prev[k - i]
                powers[j][k] = val
                fj = self.coeffs[j]
                if not fj.is_zero() and not val.is_zero():
                    acc = acc + fj * val
            g[k] = -acc * c1_inv
        return Series(self.descriptor, g, n)

    def valuations(self, p: int) -> list:
        return [field_valuation(c, p) for c in self.coeffs]


# -- Newton polygons ------------------------------------------------------------


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable) -> list:
    """Vertices of the lower convex hull of (index, valuation) points.

    Points with infinite valuation are dropped; collinear points are not
    vertices, so consecutive slopes strictly increase.
    """
    pts = sorted((int(i), Fraction(v)) for i, v in points if v is not INF)
    hull: list = []
    for pt in pts:
        if hull and hull[-1][0] == pt[0]:
            if pt[1] < hull[-1][1]:
                hull.pop()
            else:
                continue
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple  # ((index, valuation), ...)
    segments: tuple  # ((slope, horizontal length), ...)

    @classmethod
    def from_points(cls, points: Iterable) -> "NewtonPolygon":
        verts = lower_hull(points)
        if not verts:
            raise ValueError("Newton polygon of the zero polynomial is undefined")
        segs = tuple(
            ((b[1] - a[1]) / (b[0] - a[0]), b[0] - a[0]) for a, b in zip(verts, verts[1:])
        )
        return cls(tuple(verts), segs)

    @property
    def width(self) -> int:
        return sum(length for _, length in self.segments)

    def root_valuations(self) -> list:
        """[(valuation, multiplicity)]: a segment of slope -s and length l
        accounts for l roots of valuation s."""
        return [(-slope, length) for slope, length in self.segments]


def newton_polygon(f, p: int) -> NewtonPolygon:
    """Lower convex hull of (i, v(c_i)) over the nonzero coefficients of f."""
    return NewtonPolygon.from_points(enumerate(f.valuations(p)))


def newton_polygon_from_valuations(valuations: Sequence[ExtRational]) -> NewtonPolygon:
    return NewtonPolygon.from_points(enumerate(valuations))


def reciprocal_eisenstein(f: Poly, p: int) -> bool:
    """Whether x^deg(f) f(1/x) is Eisenstein at p (rational coefficients only)."""
    if f.descriptor.kind != "rational":
        raise UnsupportedField("reciprocal Eisenstein test is implemented over Q only")
    if f.is_zero() or f[0].is_zero():
        raise ValueError("need f(0) != 0")
    vals = f.reciprocal().valuations(p)
    lead, lower = vals[-1], vals[:-1]
    return lead == 0 and all(v >= 1 for v in lower) and lower[0] == 1
