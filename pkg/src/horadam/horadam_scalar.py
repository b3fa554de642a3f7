"""Scalar Horadam numbers ``W_n(a, b; p, q)`` and their Binet forms.

``W_0 = a``, ``W_1 = b`` and ``W_n = p W_{n-1} + q W_{n-2}``. The closed
forms live in Q[sqrt(D)] with ``D = p^2 + 4q`` and are reduced back to
exact rationals, so every comparison here is an equality, not a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParamParseError, RepeatedRoot, ZeroQ
from .scalars import QuadExt, as_rational, format_rational, parse_rational

__all__ = [
    "HoradamParams",
    "Roots",
    "w_terms",
    "w_recurrence",
    "make_roots",
    "closed_form_roots",
    "t_n",
    "w_binet",
    "w_via_t",
    "lucas_companion",
]


@dataclass(frozen=True)
class HoradamParams:
    a: Fraction
    b: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        for name in "abpq":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> HoradamParams:
        parts = text.split(",")
        if len(parts) != 4:
            raise ParamParseError(f"expected a,b,p,q; got {text!r}")
        return cls(*(parse_rational(s) for s in parts))

    @property
    def discriminant(self) -> Fraction:
        return self.p * self.p + 4 * self.q

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.p, self.q)

    def to_json(self) -> dict[str, str]:
        return {k: format_rational(v) for k, v in zip("abpq", self.as_tuple())}

    def __str__(self):
        a, b, p, q = (format_rational(v) for v in self.as_tuple())
        return f"({a},{b};{p},{q})"


@dataclass(frozen=True)
class Roots:
    """Characteristic roots and the Binet weights ``A = b - a*beta``, ``B = b - a*alpha``."""

    alpha: QuadExt
    beta: QuadExt
    big_a: QuadExt
    big_b: QuadExt
    discriminant: Fraction

    @property
    def sqrt_d(self) -> QuadExt:
        return self.alpha - self.beta


def w_terms(params: HoradamParams, count: int) -> list[Fraction]:
    """First ``count`` terms ``W_0 .. W_{count-1}`` by forward iteration."""
    out = []
    prev, cur = params.a, params.b
    for _ in range(count):
        out.append(prev)
        prev, cur = cur, params.p * cur + params.q * prev
    return out


def w_recurrence(params: HoradamParams, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return w_terms(params, n + 1)[n]


def make_roots(params: HoradamParams) -> Roots:
    d = params.discriminant
    if d == 0:
        raise RepeatedRoot(f"p^2 + 4q = 0 for {params}")
    half = Fraction(1, 2)
    alpha = QuadExt(params.p * half, half, d)
    beta = alpha.conj()
    return Roots(
        alpha=alpha,
        beta=beta,
        big_a=params.b - params.a * beta,
        big_b=params.b - params.a * alpha,
        discriminant=d,
    )


def closed_form_roots(params: HoradamParams) -> Roots:
    """Roots, with the q != 0 guard every closed form shares."""
    if params.q == 0:
        raise ZeroQ(f"q = 0 for {params}")
    return make_roots(params)


def t_n(params: HoradamParams, n: int) -> Fraction:
    """``(alpha^n - beta^n) / (alpha - beta)``, extended to ``T_{-1} = 1/q``."""
    if n < -1:
        raise ValueError("t_n is defined for n >= -1")
    if n == -1 and params.q == 0:
        raise ZeroQ("T_{-1} = 1/q needs q != 0")
    r = make_roots(params)
    return ((r.alpha**n - r.beta**n) / r.sqrt_d).to_rational()


def w_binet(params: HoradamParams, n: int) -> Fraction:
    r = closed_form_roots(params)
    return ((r.big_a * r.alpha**n - r.big_b * r.beta**n) / r.sqrt_d).to_rational()


def w_via_t(params: HoradamParams, n: int) -> Fraction:
    """``b T_n + a q T_{n-1}``."""
    closed_form_roots(params)
    return params.b * t_n(params, n) + params.a * params.q * t_n(params, n - 1)


def lucas_companion(params: HoradamParams, n: int) -> Fraction:
    """``alpha^n + beta^n``, which equals ``W_n(2, p; p, q)``."""
    r = make_roots(params)
    return (r.alpha**n + r.beta**n).to_rational()
