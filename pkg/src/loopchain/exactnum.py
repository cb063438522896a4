"""Exact arithmetic in the quadratic field Q(sqrt 5).

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`QuadRat` is ``rat + irr * sqrt(5)`` with rational
coefficients, which is enough to hold the golden ratio ``alpha``, its
conjugate ``beta`` and every quantity built from them.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

BigRational = Fraction

Scalar = Union["QuadRat", int, Fraction]


class IrrationalError(ValueError):
    """Raised when a rational value was required but sqrt(5) appears."""


def _rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class QuadRat:
    """Element ``rat + irr*sqrt(5)`` of Q(sqrt 5). Immutable and hashable."""

    __slots__ = ("rat", "irr")

    def __init__(self, rat=0, irr=0):
        object.__setattr__(self, "rat", _rat(rat))
        object.__setattr__(self, "irr", _rat(irr))

    @classmethod
    def _make(cls, rat: Fraction, irr: Fraction) -> "QuadRat":
        # skips coercion; callers pass Fractions only
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "irr", irr)
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "QuadRat":
        if isinstance(value, QuadRat):
            return value
        return cls(value)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    def __reduce__(self):
        return (QuadRat, (self.rat, self.irr))

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return self.irr == 0

    def is_integer(self) -> bool:
        return self.irr == 0 and self.rat.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.irr)

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - 5*irr**2`` (product with the conjugate)."""
        return self.rat * self.rat - 5 * self.irr * self.irr

    def conjugate(self) -> "QuadRat":
        return QuadRat._make(self.rat, -self.irr)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QuadRat):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return QuadRat._make(self.rat + other, self.irr)
        return QuadRat._make(self.rat + other.rat, self.irr + other.irr)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat._make(-self.rat, -self.irr)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, QuadRat):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return QuadRat._make(self.rat - other, self.irr)
        return QuadRat._make(self.rat - other.rat, self.irr - other.irr)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, QuadRat):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return QuadRat._make(self.rat * other, self.irr * other)
        a, b, c, d = self.rat, self.irr, other.rat, other.irr
        if not b and not d:
            return QuadRat._make(a * c, b)
        return QuadRat._make(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        n = self.norm()
        if not n:
            # norm vanishes only at zero since sqrt(5) is irrational
            raise ZeroDivisionError("QuadRat division by zero")
        return QuadRat._make(self.rat / n, -self.irr / n)

    def __truediv__(self, other):
        if not isinstance(other, QuadRat):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if not other:
                raise ZeroDivisionError("QuadRat division by zero")
            return QuadRat._make(self.rat / other, self.irr / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadRat.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        return quad_pow(self, e)

    # -- comparison / display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return self.rat == other.rat and self.irr == other.irr
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr))

    def __repr__(self):
        return f"QuadRat({self.rat!s}, {self.irr!s})"

    def __str__(self):
        if not self.irr:
            return str(self.rat)
        root = "√5" if abs(self.irr) == 1 else f"{abs(self.irr)}·√5"
        if not self.rat:
            return root if self.irr > 0 else f"-{root}"
        sign = "+" if self.irr > 0 else "-"
        return f"{self.rat} {sign} {root}"


_ZERO = Fraction(0)
_HALF = Fraction(1, 2)

ZERO = QuadRat._make(_ZERO, _ZERO)
ONE = QuadRat._make(Fraction(1), _ZERO)
SQRT5 = QuadRat._make(_ZERO, Fraction(1))


def alpha() -> QuadRat:
    """The golden ratio (1 + sqrt 5) / 2."""
    return QuadRat._make(_HALF, _HALF)


def beta() -> QuadRat:
    """The conjugate root (1 - sqrt 5) / 2."""
    return QuadRat._make(_HALF, -_HALF)


def quad_add(x: QuadRat, y: QuadRat) -> QuadRat:
    return QuadRat.coerce(x) + QuadRat.coerce(y)


def quad_mul(x: QuadRat, y: QuadRat) -> QuadRat:
    return QuadRat.coerce(x) * QuadRat.coerce(y)


def quad_inv(x: QuadRat) -> QuadRat:
    return QuadRat.coerce(x).inverse()


def quad_pow(x: QuadRat, e: int) -> QuadRat:
    """Square-and-multiply power; negative ``e`` inverts first."""
    x = QuadRat.coerce(x)
    if e < 0:
        x = x.inverse()
        e = -e
    result = ONE
    while e:
        if e & 1:
            result = result * x
        e >>= 1
        if e:
            x = x * x
    return result


def as_rational(x: QuadRat) -> Fraction:
    x = QuadRat.coerce(x)
    if x.irr:
        raise IrrationalError(f"{x} is not rational")
    return x.rat


def as_integer(x: QuadRat) -> int:
    r = as_rational(x)
    if r.denominator != 1:
        raise ValueError(f"{r} is not an integer")
    return r.numerator
