"""Quaternions over an exact scalar ring (Fraction or QuadExt)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .errors import DiscriminantMismatch, NonInvertible, ScalarRingMismatch, ZeroDivisorInverse
from .scalars import QuadExt, as_rational

__all__ = ["Quaternion", "quat_mul", "quat_conj", "quat_norm", "quat_inv"]


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, QuadExt)) and not isinstance(value, bool)


def _unify(coeffs):
    discs = {c.disc for c in coeffs if isinstance(c, QuadExt)}
    if len(discs) > 1:
        raise ScalarRingMismatch(f"coefficients mix discriminants {sorted(discs)}")
    if discs:
        (d,) = discs
        return tuple(c if isinstance(c, QuadExt) else QuadExt.embed(c, d) for c in coeffs)
    return tuple(as_rational(c) for c in coeffs)


@dataclass(frozen=True)
class Quaternion:
    """``w + x i + y j + z k``; all four coefficients live in one scalar ring."""

    w: Fraction | QuadExt
    x: Fraction | QuadExt
    y: Fraction | QuadExt
    z: Fraction | QuadExt

    def __post_init__(self):
        for name, value in zip("wxyz", _unify(self.coeffs)):
            object.__setattr__(self, name, value)

    @classmethod
    def one(cls) -> Quaternion:
        return cls(1, 0, 0, 0)

    @classmethod
    def zero(cls) -> Quaternion:
        return cls(0, 0, 0, 0)

    @property
    def coeffs(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def disc(self) -> Fraction | None:
        """Discriminant of the scalar ring, or None over the rationals."""
        return self.w.disc if isinstance(self.w, QuadExt) else None

    def map(self, fn: Callable) -> Quaternion:
        return Quaternion(*(fn(c) for c in self.coeffs))

    def _check_ring(self, other: Quaternion):
        if other.disc is not None and self.disc is not None and other.disc != self.disc:
            raise ScalarRingMismatch(f"sqrt({self.disc}) vs sqrt({other.disc})")

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_ring(other)
        return Quaternion(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_ring(other)
        return Quaternion(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return Quaternion(*(-c for c in self))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            self._check_ring(other)
            a1, b1, c1, d1 = self
            a2, b2, c2, d2 = other
            try:
                return Quaternion(
                    a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                    a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                    a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                    a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
                )
            except DiscriminantMismatch as exc:
                raise ScalarRingMismatch(str(exc)) from exc
        if _is_scalar(other):
            return Quaternion(*(c * other for c in self))
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central, so left and right scalar multiplication agree
        if _is_scalar(other):
            return Quaternion(*(other * c for c in self))
        return NotImplemented

    def conj(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """Squared modulus ``w^2 + x^2 + y^2 + z^2`` (the modulus itself is never taken)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inv(self) -> Quaternion:
        n = self.norm()
        try:
            if isinstance(n, QuadExt):
                scale = n.inv()
            elif n == 0:
                raise NonInvertible(f"{self} has zero norm")
            else:
                scale = 1 / n
        except ZeroDivisorInverse as exc:
            raise NonInvertible(f"norm of {self} is a zero divisor") from exc
        return self.conj() * scale

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"

    def __repr__(self):
        return f"Quaternion{self}"

    def to_json(self) -> list[str]:
        return [str(c) for c in self]


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def quat_norm(q: Quaternion):
    return q.norm()


def quat_inv(q: Quaternion) -> Quaternion:
    return q.inv()
