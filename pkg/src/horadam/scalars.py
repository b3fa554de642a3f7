"""Exact scalars: rationals and the quadratic ring Q[sqrt(D)].

``Rational`` is :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator. :class:`QuadExt` is the formal ring
``Q[x]/(x^2 - D)``; when ``D`` is a perfect square this ring has zero
divisors, so :meth:`QuadExt.inv` checks the field norm before dividing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from gmpy2 import mpq

from .errors import DiscriminantMismatch, NotRational, ParamParseError, ZeroDivisorInverse

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "QuadExt",
    "as_rational",
    "parse_rational",
    "format_rational",
    "qe_add",
    "qe_mul",
    "qe_inv",
    "qe_pow",
    "qe_conj",
    "qe_to_rational",
]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"``; floats and decimals are refused."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParamParseError(f"not an exact rational: {text!r}") from exc


def format_rational(value: RationalLike) -> str:
    return str(as_rational(value))


def _mpq(value) -> mpq:
    if isinstance(value, mpq):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, int) and not isinstance(value, bool):
        return mpq(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _fraction(value: mpq) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class QuadExt:
    """``rat + surd * sqrt(disc)`` with rational coefficients.

    Treated as immutable (no public setters). Coefficients are held as gmpy2 ``mpq`` for speed; the public
    ``rat``, ``surd`` and ``disc`` attributes and :meth:`to_rational` hand
    back :class:`fractions.Fraction`.
    """

    __slots__ = ("_x", "_y", "_d")

    def __init__(self, rat, surd, disc):
        self._x = _mpq(rat)
        self._y = _mpq(surd)
        self._d = _mpq(disc)

    @classmethod
    def _raw(cls, x: mpq, y: mpq, d: mpq) -> QuadExt:
        obj = object.__new__(cls)
        obj._x, obj._y, obj._d = x, y, d
        return obj

    @property
    def rat(self) -> Fraction:
        return _fraction(self._x)

    @property
    def surd(self) -> Fraction:
        return _fraction(self._y)

    @property
    def disc(self) -> Fraction:
        return _fraction(self._d)

    @classmethod
    def embed(cls, value: RationalLike, disc: RationalLike) -> QuadExt:
        return cls(value, 0, disc)

    @classmethod
    def sqrt(cls, disc: RationalLike) -> QuadExt:
        return cls(0, 1, disc)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other._d != self._d:
                raise DiscriminantMismatch(
                    f"cannot combine sqrt({self.disc}) with sqrt({other.disc})"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt._raw(_mpq(other), _ZERO, self._d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self._x + o._x, self._y + o._y, self._d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self._x, -self._y, self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self._x - o._x, self._y - o._y, self._d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(
            self._x * o._x + self._y * o._y * self._d,
            self._x * o._y + self._y * o._x,
            self._d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int) -> QuadExt:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = QuadExt._raw(_ONE, _ZERO, self._d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def field_norm(self) -> Fraction:
        return _fraction(self._x * self._x - self._y * self._y * self._d)

    def inv(self) -> QuadExt:
        n = self._x * self._x - self._y * self._y * self._d
        if n == 0:
            raise ZeroDivisorInverse(f"{self} has zero field norm")
        return QuadExt._raw(self._x / n, -self._y / n, self._d)

    def conj(self) -> QuadExt:
        return QuadExt._raw(self._x, -self._y, self._d)

    def is_rational(self) -> bool:
        return self._y == 0

    def to_rational(self) -> Fraction:
        if self._y != 0:
            raise NotRational(f"{self} has a nonzero surd part")
        return _fraction(self._x)

    def evaluate_surd(self, root: RationalLike) -> Fraction:
        """Apply the ring map sqrt(D) -> root, for a rational root of D."""
        r = _mpq(root)
        if r * r != self._d:
            raise ValueError(f"{root} is not a square root of {self.disc}")
        return _fraction(self._x + self._y * r)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self._x == other._x and self._y == other._y and self._d == other._d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._y == 0 and self._x == other
        return NotImplemented

    def __hash__(self):
        if self._y == 0:
            return hash(self.rat)
        return hash((self.rat, self.surd, self.disc))

    def __reduce__(self):
        return (QuadExt, (self.rat, self.surd, self.disc))

    def __str__(self):
        return f"{self._x} + {self._y}*sqrt({self._d})"

    def __repr__(self):
        return f"QuadExt({self})"


_ZERO = mpq(0)
_ONE = mpq(1)


def qe_add(x: QuadExt, y: QuadExt) -> QuadExt:
    return x + y


def qe_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return x * y


def qe_inv(x: QuadExt) -> QuadExt:
    return x.inv()


def qe_pow(x: QuadExt, n: int) -> QuadExt:
    if n < 0:
        raise ValueError("qe_pow takes a non-negative exponent")
    return x**n


def qe_conj(x: QuadExt) -> QuadExt:
    return x.conj()


def qe_to_rational(x: QuadExt) -> Fraction:
    return x.to_rational()
