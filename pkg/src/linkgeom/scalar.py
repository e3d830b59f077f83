"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt 3).

The quadratic field exists only for the torus construction, whose rotation
through 2pi/3 has entries +-sqrt(3)/2.  Everything else stays rational.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

from .errors import InvalidInput

__all__ = ["QuadSqrt3", "SQRT3", "sign", "to_scalar", "format_scalar", "parse_scalar"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QuadSqrt3:
    """The number ``a + b*sqrt(3)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadSqrt3 is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, QuadSqrt3):
            return x
        if isinstance(x, (int, Rational)):
            return QuadSqrt3(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        norm = o.a * o.a - 3 * o.b * o.b
        if not norm:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        num = self * QuadSqrt3(o.a, -o.b)
        return QuadSqrt3(num.a / norm, num.b / norm)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return QuadSqrt3(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        diff = a * a - 3 * b * b
        return sa if diff > 0 else -sa if diff < 0 else 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def _cmp(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * 3 ** 0.5

    def __repr__(self):
        return f"QuadSqrt3({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt(3)"


SQRT3 = QuadSqrt3(0, 1)


def sign(x) -> int:
    """Exact sign of a rational or Q(sqrt 3) scalar."""
    if isinstance(x, QuadSqrt3):
        return x.sign()
    return (x > 0) - (x < 0)


def to_scalar(x):
    """Coerce ints/Fractions/strings to an exact scalar; reject floats."""
    if isinstance(x, (QuadSqrt3, Fraction)):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


_FRACTION = re.compile(r"^(-?\d+)/(\d+)$")


def _parse_fraction(text) -> Fraction:
    if not isinstance(text, str):
        raise InvalidInput(f"rational scalar must be a 'p/q' string, got {text!r}")
    m = _FRACTION.match(text)
    if not m:
        raise InvalidInput(f"rational scalar must look like 'p/q', got {text!r}")
    p, q = int(m.group(1)), int(m.group(2))
    if q <= 0:
        raise InvalidInput(f"denominator must be positive in {text!r}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"fraction {text!r} is not reduced")
    return Fraction(p, q)


def _format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(obj, field: str):
    if field == "rational":
        return _parse_fraction(obj)
    if field == "quad_sqrt3":
        if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
            raise InvalidInput(f"quad_sqrt3 scalar must be {{'a':..,'b':..}}, got {obj!r}")
        return QuadSqrt3(_parse_fraction(obj["a"]), _parse_fraction(obj["b"]))
    raise InvalidInput(f"unknown field {field!r}")


def format_scalar(x, field: str):
    if field == "rational":
        if isinstance(x, QuadSqrt3):
            raise InvalidInput("irrational scalar in a rational file")
        return _format_fraction(Fraction(x))
    q = x if isinstance(x, QuadSqrt3) else QuadSqrt3(x)
    return {"a": _format_fraction(q.a), "b": _format_fraction(q.b)}
