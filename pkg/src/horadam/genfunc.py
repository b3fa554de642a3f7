"""Truncated expansion of ``(N0 + N1 t) / (1 - p t - q t^2)`` with quaternion coefficients.

``t`` is a commuting scalar indeterminate. The expansion runs the
denominator as a linear recursion on the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRange
from .horadam_quaternion import qw_recurrence
from .horadam_scalar import HoradamParams
from .quaternion import Quaternion

__all__ = ["QuatSeries", "gf_numerator", "gf_expand", "times_denominator"]


@dataclass(frozen=True)
class QuatSeries:
    coefficients: tuple[Quaternion, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Quaternion:
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [c.to_json() for c in self.coefficients]}


def gf_numerator(params: HoradamParams) -> tuple[Quaternion, Quaternion]:
    """``(Q_0, Q_1 - p Q_0)``."""
    q0 = qw_recurrence(params, 0)
    q1 = qw_recurrence(params, 1)
    return q0, q1 - q0 * params.p


def gf_expand(params: HoradamParams, order: int) -> QuatSeries:
    if order < 0:
        raise InvalidRange(f"order must be >= 0, got {order}")
    n0, n1 = gf_numerator(params)
    p, q = params.p, params.q
    coeffs = [n0]
    if order >= 1:
        coeffs.append(n1 + n0 * p)
    for _ in range(2, order + 1):
        coeffs.append(coeffs[-1] * p + coeffs[-2] * q)
    return QuatSeries(tuple(coeffs))


def times_denominator(series: QuatSeries, params: HoradamParams) -> list[Quaternion]:
    """Coefficients of ``series * (1 - p t - q t^2)`` up to the series order."""
    c = series.coefficients
    out = []
    for k in range(len(c)):
        term = c[k]
        if k >= 1:
            term = term - c[k - 1] * params.p
        if k >= 2:
            term = term - c[k - 2] * params.q
        out.append(term)
    return out
