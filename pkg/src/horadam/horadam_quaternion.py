"""Horadam quaternions ``Q_n = W_n + W_{n+1} i + W_{n+2} j + W_{n+3} k``.

Each closed form (Binet, Cassini, partial sums, norm) is evaluated with
quaternions over Q[sqrt(D)] and reduced to rational components. A nonzero
surd part after reduction means a bug, and surfaces as ``NotRational``.
The ``*_direct`` / ``*_lhs`` / ``qw_recurrence`` functions use only the
recurrence and are the oracles the closed forms are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SumPole
from .horadam_scalar import HoradamParams, Roots, closed_form_roots, w_terms
from .quaternion import Quaternion
from .scalars import QuadExt

__all__ = [
    "QuatRoots",
    "NormTriple",
    "quat_roots",
    "qw_terms",
    "qw_recurrence",
    "qw_binet",
    "cassini_lhs",
    "cassini_rhs",
    "sum_direct",
    "sum_constant_k",
    "sum_main_term",
    "sum_closed_form",
    "norm_direct",
    "norm_triple",
    "norm_closed_form",
    "norm_closed_form_printed",
]


def _rational(q: Quaternion) -> Quaternion:
    return q.map(QuadExt.to_rational)


@dataclass(frozen=True)
class QuatRoots:
    alpha_q: Quaternion
    beta_q: Quaternion


@dataclass(frozen=True)
class NormTriple:
    """The three aggregates combined as ``(b^2 A + 2abq B + a^2 q^2 C) / D``.

    Unrelated to the Binet weights on :class:`Roots`.
    """

    norm_a: QuadExt
    norm_b: QuadExt
    norm_c: QuadExt


def quat_roots(roots: Roots) -> QuatRoots:
    def lift(r):
        return Quaternion(QuadExt.embed(1, r.disc), r, r**2, r**3)

    return QuatRoots(lift(roots.alpha), lift(roots.beta))


def qw_terms(params: HoradamParams, count: int) -> list[Quaternion]:
    w = w_terms(params, count + 3)
    return [Quaternion(*w[n : n + 4]) for n in range(count)]


def qw_recurrence(params: HoradamParams, n: int) -> Quaternion:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Quaternion(*w_terms(params, n + 4)[n:])


def qw_binet(params: HoradamParams, n: int) -> Quaternion:
    r = closed_form_roots(params)
    qr = quat_roots(r)
    num = qr.alpha_q * (r.big_a * r.alpha**n) - qr.beta_q * (r.big_b * r.beta**n)
    return _rational(num * r.sqrt_d.inv())


def _cassini_index(n: int):
    if n < 1:
        raise DomainError("Cassini identity needs n >= 1 (Q_{-1} is undefined)")


def cassini_lhs(params: HoradamParams, n: int) -> Quaternion:
    """``Q_{n-1} Q_{n+1} - Q_n^2`` with the factor order kept."""
    _cassini_index(n)
    prev, cur, nxt = qw_terms(params, n + 2)[n - 1 :]
    return prev * nxt - cur * cur


def cassini_rhs(params: HoradamParams, n: int) -> Quaternion:
    _cassini_index(n)
    r = closed_form_roots(params)
    qr = quat_roots(r)
    bracket = qr.alpha_q * qr.beta_q * r.beta - qr.beta_q * qr.alpha_q * r.alpha
    scale = r.big_a * r.big_b * (r.alpha * r.beta) ** (n - 1) / r.sqrt_d
    return _rational(bracket * scale)


def sum_direct(params: HoradamParams, n: int) -> Quaternion:
    total = Quaternion.zero()
    for term in qw_terms(params, n + 1):
        total = total + term
    return total


def _sum_guard(params: HoradamParams) -> Roots:
    r = closed_form_roots(params)
    if params.p + params.q == 1:
        raise SumPole(f"p + q = 1 for {params}: 1 - alpha or 1 - beta is not invertible")
    return r


def sum_constant_k(params: HoradamParams) -> Quaternion:
    """The constant of the partial-sum closed form, from its explicit numerator."""
    _sum_guard(params)
    a, b, p, q = params.as_tuple()
    numerator = Quaternion(
        a + b - a * p,
        b + a * q,
        b * p + a * q + b * q,
        b * (p * p + q) + (a + b) * p * q + a * q * q,
    )
    return numerator * (1 / (1 - p - q))


def sum_main_term(params: HoradamParams, n: int) -> Quaternion:
    """The n-dependent part of the partial sum, without the constant."""
    r = _sum_guard(params)
    qr = quat_roots(r)
    one = QuadExt.embed(1, r.discriminant)
    beta_part = qr.beta_q * (r.big_b * r.beta ** (n + 1) / (one - r.beta))
    alpha_part = qr.alpha_q * (r.big_a * r.alpha ** (n + 1) / (one - r.alpha))
    return _rational((beta_part - alpha_part) * r.sqrt_d.inv())


def sum_closed_form(params: HoradamParams, n: int) -> Quaternion:
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum_main_term(params, n) + sum_constant_k(params)


def norm_direct(params: HoradamParams, n: int) -> Fraction:
    return qw_recurrence(params, n).norm()


def norm_triple(params: HoradamParams, n: int, printed: bool = False) -> NormTriple:
    """Aggregates for the norm closed form.

    ``printed=True`` reproduces the published brackets: ``1 + q + q^2 + q^3``
    in the middle aggregate and ``... - (-q)^{-1}`` in the last. Those are
    only right when a = 0 (or by cancellation for Lucas). The default uses
    the brackets obtained by expanding ``W_m = b T_m + a q T_{m-1}``.
    """
    r = closed_form_roots(params)
    p, q = params.p, params.q
    mq = -q
    alt = 1 - q + q * q - q**3  # (-q)^0 + (-q)^1 + (-q)^2 + (-q)^3

    def even_powers(root, start):
        return root**start * (1 + root**2 + root**4 + root**6)

    def shifted(root):
        return root ** (2 * n) * (1 + root**2 + root**4 + root**-2)

    norm_a = even_powers(r.alpha, 2 * n) + even_powers(r.beta, 2 * n) - 2 * mq**n * alt
    if printed:
        b_tail = p * mq ** (n - 1) * (1 + q + q * q + q**3)
        c_tail = 2 * mq**n * (1 - q + q * q - 1 / mq)
    else:
        b_tail = p * mq ** (n - 1) * alt
        c_tail = 2 * mq**n * (1 - q + q * q + 1 / mq)
    norm_b = even_powers(r.alpha, 2 * n - 1) + even_powers(r.beta, 2 * n - 1) - b_tail
    norm_c = shifted(r.alpha) + shifted(r.beta) - c_tail
    return NormTriple(norm_a, norm_b, norm_c)


def _combine(params: HoradamParams, t: NormTriple) -> Fraction:
    a, b, p, q = params.as_tuple()
    total = b * b * t.norm_a + 2 * a * b * q * t.norm_b + a * a * q * q * t.norm_c
    return (total / params.discriminant).to_rational()


def norm_closed_form(params: HoradamParams, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _combine(params, norm_triple(params, n))


def norm_closed_form_printed(params: HoradamParams, n: int) -> Fraction:
    """Same combination with the published brackets; may disagree with :func:`norm_direct`."""
    return _combine(params, norm_triple(params, n, printed=True))
