"""Exact rationals with +infinity, and arithmetic in Q(r^(1/e)).

Valuations are normalized so that v(p) = 1.  Only fields where the p-adic
valuation extends uniquely are supported: Q itself, and Q(r^(1/e)) with
k = v_p(r) >= 1 and gcd(k, e) = 1, which is totally ramified of degree e
with v(r^(1/e)) = k/e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Union

from sympy import integer_nthroot, primefactors

from .errors import DivisionByZero, UnsupportedField

__all__ = [
    "INF",
    "Infinity",
    "ExtRational",
    "as_rational",
    "vp",
    "FieldDescriptor",
    "RATIONAL",
    "FieldElement",
    "field_valuation",
    "field_invert",
]


@total_ordering
class Infinity:
    """The value +infinity; larger than every rational, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("supersingular.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ValueError("inf - inf is undefined")
        return self

    def __mul__(self, other):
        if other > 0:
            return self
        raise ValueError("inf may only be scaled by a positive rational")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Fraction(other))


INF = Infinity()
ExtRational = Union[Fraction, Infinity]


def as_rational(x) -> ExtRational:
    """Coerce int / Fraction / 'n/d' / 'inf' into an ExtRational."""
    if x is INF:
        return INF
    if isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "oo", "+inf"):
        return INF
    return Fraction(x)


def vp(x, p: int) -> ExtRational:
    """p-adic valuation of a rational number; ``INF`` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return Fraction(v)


def _is_perfect_power(n: int, d: int) -> bool:
    if n < 0:
        if d % 2 == 0:
            return False
        n = -n
    return integer_nthroot(n, d)[1]


@dataclass(frozen=True)
class FieldDescriptor:
    """Either Q (``kind='rational'``) or Q(r^(1/e)) (``kind='radical'``)."""

    kind: str = "rational"
    r: int = 1
    e: int = 1

    def __post_init__(self):
        if self.kind == "rational":
            if (self.r, self.e) != (1, 1):
                raise UnsupportedField("rational descriptor takes no radicand")
            return
        if self.kind != "radical":
            raise UnsupportedField(f"unknown field kind {self.kind!r}")
        if self.e < 2:
            raise UnsupportedField("radical degree must be at least 2")
        if self.r == 0:
            raise UnsupportedField("radicand must be nonzero")
        # x^e - r is irreducible over Q iff r is not a d-th power for prime d | e
        # and, when 4 | e, -4r is not a 4th power.
        for d in primefactors(self.e):
            if _is_perfect_power(self.r, d):
                raise UnsupportedField(f"x^{self.e} - {self.r} is reducible ({self.r} is a {d}-th power)")
        if self.e % 4 == 0 and _is_perfect_power(-4 * self.r, 4):
            raise UnsupportedField(f"x^{self.e} - {self.r} is reducible (-4r is a 4th power)")

    @classmethod
    def radical(cls, r: int, e: int) -> "FieldDescriptor":
        return cls("radical", int(r), int(e))

    @property
    def degree(self) -> int:
        return self.e

    def uniformizer_valuation(self, p: int) -> Fraction:
        """v(r^(1/e)) at p, after checking the valuation extends uniquely."""
        if self.kind == "rational":
            return Fraction(0)
        k = vp(self.r, p)
        if k is INF or k < 1 or gcd(int(k), self.e) != 1:
            raise UnsupportedField(
                f"Q({self.r}^(1/{self.e})) at p={p}: need v_p(r) >= 1 coprime to e "
                f"(got v_p(r) = {k})"
            )
        return Fraction(int(k), self.e)

    def __str__(self):
        return "Q" if self.kind == "rational" else f"Q({self.r}^(1/{self.e}))"


RATIONAL = FieldDescriptor()


class FieldElement:
    """Element of Q or Q(r^(1/e)), stored as e rational coordinates.

    ``coords[i]`` is the coefficient of r^(i/e).  Instances are treated as
    immutable.
    """

    __slots__ = ("descriptor", "coords")

    def __init__(self, descriptor: FieldDescriptor, coords: Iterable = (0,)):
        coords = tuple(Fraction(c) for c in coords)
        e = descriptor.e
        if len(coords) > e:
            raise ValueError(f"expected at most {e} coordinates, got {len(coords)}")
        if len(coords) < e:
            coords = coords + (Fraction(0),) * (e - len(coords))
        self.descriptor = descriptor
        self.coords = coords

    @classmethod
    def _raw(cls, descriptor, coords):
        obj = cls.__new__(cls)
        obj.descriptor = descriptor
        obj.coords = coords
        return obj

    @classmethod
    def from_rational(cls, descriptor: FieldDescriptor, value) -> "FieldElement":
        return cls(descriptor, (value,))

    @classmethod
    def generator(cls, descriptor: FieldDescriptor, power: int = 1) -> "FieldElement":
        """r^(power/e); ``power`` may be any integer."""
        if descriptor.kind == "rational":
            raise UnsupportedField("Q has no radical generator")
        e, r = descriptor.e, descriptor.r
        q, i = divmod(power, e)
        coords = [0] * e
        coords[i] = Fraction(r) ** q
        return cls(descriptor, coords)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.descriptor != self.descriptor:
                raise ValueError(f"field mismatch: {self.descriptor} vs {other.descriptor}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_rational(self.descriptor, other)
        return NotImplemented

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    @property
    def rational_part(self) -> Fraction:
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coords[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.descriptor == other.descriptor and self.coords == other.coords

    def __hash__(self):
        if self.is_rational:
            return hash(self.coords[0])
        return hash((self.descriptor, self.coords))

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement._raw(self.descriptor, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.descriptor, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement._raw(self.descriptor, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement._raw(self.descriptor, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coords, other.coords
        e = len(a)
        if e == 1:
            return FieldElement._raw(self.descriptor, (a[0] * b[0],))
        r = self.descriptor.r
        out = [Fraction(0)] * e
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                k = i + j
                if k >= e:
                    out[k - e] += r * ai * bj
                else:
                    out[k] += ai * bj
        return FieldElement._raw(self.descriptor, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return field_invert(self) ** (-k)
        result = FieldElement.from_rational(self.descriptor, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement._raw(self.descriptor, tuple(a / other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * field_invert(other)

    def __rtruediv__(self, other):
        return field_invert(self) * other

    # -- display ----------------------------------------------------------

    def __repr__(self):
        d = self.descriptor
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                rad = f"{d.r}^({i}/{d.e})"
                terms.append(rad if c == 1 else f"({c})*{rad}")
        return " + ".join(terms) if terms else "0"


def field_valuation(elem: FieldElement, p: int) -> ExtRational:
    """Valuation of ``elem`` at the unique prime above p, with v(p) = 1."""
    step = elem.descriptor.uniformizer_valuation(p)
    best = INF
    for i, c in enumerate(elem.coords):
        if c:
            v = vp(c, p) + i * step
            if v < best:
                best = v
    return best


# -- extended gcd over Q[x], coefficient lists low -> high ---------------------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _divmod(a, b):
    a = _trim(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        a = _sub(a, [0] * shift + [c * x for x in b])
    return _trim(q), a


def field_invert(elem: FieldElement) -> FieldElement:
    """Multiplicative inverse via extended gcd with x^e - r."""
    if elem.is_zero():
        raise DivisionByZero("cannot invert zero")
    d = elem.descriptor
    if d.e == 1:
        return FieldElement._raw(d, (1 / elem.coords[0],))
    modulus = [Fraction(-d.r)] + [Fraction(0)] * (d.e - 1) + [Fraction(1)]
    r0, r1 = modulus, _trim(elem.coords)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    if not r1:
        raise DivisionByZero("non-invertible element; x^e - r is not irreducible")
    inv = [c / r1[0] for c in _divmod(s1, modulus)[1]]
    return FieldElement(d, inv)
