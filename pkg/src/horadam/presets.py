"""Named parameter families and the family-specific formulas published for them.

Each :class:`Expectation` pairs a published formula (``printed``) with the
value this package computes from the recurrence (``actual``). Formulas known
to be misprinted carry ``discrepancy=True`` and a corrected ``derived``
formula, so a report can tell a typo in the source apart from a bug here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .errors import UnknownPreset
from .genfunc import gf_numerator
from .horadam_quaternion import (
    cassini_lhs,
    norm_closed_form_printed,
    norm_direct,
    qw_recurrence,
    quat_roots,
    sum_constant_k,
    sum_direct,
)
from .horadam_scalar import HoradamParams, make_roots, w_recurrence
from .quaternion import Quaternion
from .scalars import QuadExt

__all__ = [
    "Expectation",
    "Preset",
    "PRESET_NAMES",
    "preset_lookup",
    "preset_expectations",
    "general_expectations",
    "resolve_params",
]

H = Fraction(1, 2)

PRESET_PARAMS = {
    "fibonacci": (0, 1, 1, 1),
    "lucas": (2, 1, 1, 1),
    "pell": (0, 1, 2, 1),
    "pell_lucas": (2, 1, 2, 1),
    "jacobsthal": (0, 1, 1, 2),
    "jacobsthal_lucas": (2, 1, 1, 2),
}
PRESET_NAMES = tuple(PRESET_PARAMS)

# seeds of the modified Pell numbers 1, 1, 3, 7, 17, ...
MODIFIED_PELL = HoradamParams(1, 1, 2, 1)


@dataclass(frozen=True)
class Expectation:
    key: str
    kind: str
    description: str
    actual: Callable[[int], Any]
    printed: Callable[[int], Any]
    derived: Optional[Callable[[int], Any]] = None
    discrepancy: bool = False
    n_min: int = 0
    constant: bool = False

    def expected_at(self, n: int) -> Any:
        return self.printed(n)


@dataclass(frozen=True)
class Preset:
    name: str
    params: HoradamParams
    identities: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params.to_json(),
            "identities": list(self.identities),
        }


def preset_lookup(name: str) -> Preset:
    try:
        params = PRESET_PARAMS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}") from None
    kinds = sorted({e.kind for e in _BUILDERS[name](HoradamParams(*params))})
    return Preset(name, HoradamParams(*params), tuple(kinds))


def resolve_params(preset: Optional[str], params: Optional[str]) -> HoradamParams:
    if preset is not None:
        return preset_lookup(preset).params
    return HoradamParams.parse(params)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _rational(q: Quaternion) -> Quaternion:
    """Reduce to rational components when possible; leave irrational values as they are."""
    if q.disc is None:
        return q
    if all(c.is_rational() for c in q):
        return q.map(QuadExt.to_rational)
    return q


def _numerator_expectation(name, params, printed, derived=None):
    return Expectation(
        key=f"{name}.genfunc_numerator",
        kind="genfunc",
        description="generating-function numerator pair (Q0, Q1 - p Q0)",
        actual=lambda n: gf_numerator(params),
        printed=lambda n: tuple(Quaternion(*c) for c in printed),
        derived=(lambda n: tuple(Quaternion(*c) for c in derived)) if derived else None,
        discrepancy=derived is not None,
        constant=True,
    )


def _binet_expectation(name, params, formula, description, derived=None):
    return Expectation(
        key=f"{name}.binet",
        kind="binet",
        description=description,
        actual=lambda n: qw_recurrence(params, n),
        printed=formula,
        derived=derived,
        discrepancy=derived is not None,
    )


def _norm_expectation(name, params, formula, description):
    return Expectation(
        key=f"{name}.norm",
        kind="norm",
        description=description,
        actual=lambda n: norm_direct(params, n),
        printed=formula,
    )


def _fib_like_initial(name, params):
    p = params.p
    return Expectation(
        key=f"{name}.initial_values",
        kind="initial",
        description="initial quaternions (0, 1, p, p^2+1) and (1, p, p^2+1, p^3+2p) for a=0, b=1, q=1",
        actual=lambda n: (qw_recurrence(params, 0), qw_recurrence(params, 1)),
        printed=lambda n: (
            Quaternion(0, 1, p, p * p + 1),
            Quaternion(1, p, p * p + 1, p**3 + 2 * p),
        ),
        constant=True,
    )


def _fibonacci(params):
    r = make_roots(params)
    qr = quat_roots(r)
    qf = lambda k: qw_recurrence(params, k)  # noqa: E731
    return [
        _fib_like_initial("fibonacci", params),
        _numerator_expectation("fibonacci", params, [(0, 1, 1, 2), (1, 0, 1, 1)]),
        _binet_expectation(
            "fibonacci",
            params,
            lambda n: _rational((qr.alpha_q * r.alpha**n - qr.beta_q * r.beta**n) * r.sqrt_d.inv()),
            "(alpha_q alpha^n - beta_q beta^n) / sqrt(5)",
        ),
        Expectation(
            key="fibonacci.cassini",
            kind="cassini",
            description="Q_{n-1} Q_{n+1} - Q_n^2 = (-1)^n (2 + 2i + 4j + 3k)",
            actual=lambda n: cassini_lhs(params, n),
            printed=lambda n: Quaternion(2, 2, 4, 3) * _sign(n),
            n_min=1,
        ),
        Expectation(
            key="fibonacci.cassini_via_q1",
            kind="cassini",
            description="Q_{n-1} Q_{n+1} - Q_n^2 = (-1)^n (2 Q_1 - 3k)",
            actual=lambda n: cassini_lhs(params, n),
            printed=lambda n: (qf(1) * 2 - Quaternion(0, 0, 0, 3)) * _sign(n),
            n_min=1,
        ),
        Expectation(
            key="fibonacci.sum_constant",
            kind="sum",
            description="partial-sum constant K = -QF_1",
            actual=lambda n: sum_constant_k(params),
            printed=lambda n: -qf(1),
            constant=True,
        ),
        Expectation(
            key="fibonacci.sum",
            kind="sum",
            description="sum_{k<=n} QF_k = QF_{n+2} - QF_1",
            actual=lambda n: sum_direct(params, n),
            printed=lambda n: qf(n + 2) - qf(1),
        ),
        _norm_expectation(
            "fibonacci",
            params,
            lambda n: (
                (r.alpha ** (2 * n) * QuadExt(15, 6, 5) + r.beta ** (2 * n) * QuadExt(15, -6, 5)) / 5
            ).to_rational(),
            "norm = (alpha^{2n}(15 + 6 sqrt5) + beta^{2n}(15 - 6 sqrt5)) / 5",
        ),
    ]


def _lucas(params):
    r = make_roots(params)
    qr = quat_roots(r)
    return [
        _numerator_expectation(
            "lucas",
            params,
            [(2, 1, 3, 5), (-1, 2, 2, 2)],
            derived=[(2, 1, 3, 4), (-1, 2, 1, 3)],
        ),
        _binet_expectation(
            "lucas",
            params,
            lambda n: _rational(qr.alpha_q * r.alpha**n + qr.beta_q * r.beta**n),
            "alpha_q alpha^n + beta_q beta^n",
        ),
    ]


def _pell(params):
    r = make_roots(params)  # alpha = 1 + sqrt2, written over sqrt(8)
    qr = quat_roots(r)
    qpl = lambda k: qw_recurrence(MODIFIED_PELL, k)  # noqa: E731
    sqrt2 = QuadExt(0, H, 8)
    return [
        _fib_like_initial("pell", params),
        _numerator_expectation("pell", params, [(0, 1, 2, 5), (1, 0, 1, 2)]),
        _binet_expectation(
            "pell",
            params,
            lambda n: _rational(
                (qr.alpha_q * (1 + sqrt2) ** n - qr.beta_q * (1 - sqrt2) ** n) * (2 * sqrt2).inv()
            ),
            "(alpha_q (1+sqrt2)^n - beta_q (1-sqrt2)^n) / (2 sqrt2)",
        ),
        Expectation(
            key="pell.cassini",
            kind="cassini",
            description="Q_{n-1} Q_{n+1} - Q_n^2 = (-1)^{n+1}/4 (alpha_q beta_q (alpha^2+2) - beta_q alpha_q beta^2)",
            actual=lambda n: cassini_lhs(params, n),
            printed=lambda n: _rational(
                (qr.alpha_q * qr.beta_q * (r.alpha**2 + 2) - qr.beta_q * qr.alpha_q * r.beta**2)
                * Fraction(-_sign(n), 4)
            ),
            derived=lambda n: Quaternion(2, 4, 10, 12) * _sign(n),
            discrepancy=True,
            n_min=1,
        ),
        Expectation(
            key="pell.sum_constant",
            kind="sum",
            description="partial-sum constant K = (1 + i + 3j + 7k) / (-2) = -QPL_0 / 2, QPL modified Pell",
            actual=lambda n: sum_constant_k(params),
            printed=lambda n: Quaternion(1, 1, 3, 7) * Fraction(-1, 2),
            constant=True,
        ),
        Expectation(
            key="pell.sum",
            kind="sum",
            description="sum_{k<=n} QP_k = (QPL_n - QPL_0) / 2",
            actual=lambda n: sum_direct(params, n),
            printed=lambda n: (qpl(n) - qpl(0)) * H,
            derived=lambda n: (qpl(n + 1) - qpl(0)) * H,
            discrepancy=True,
        ),
        _norm_expectation(
            "pell",
            params,
            lambda n: (
                (r.alpha ** (2 * n) * QuadExt(120, 42, 8) + r.beta ** (2 * n) * QuadExt(120, -42, 8)) / 8
            ).to_rational(),
            "norm = (alpha^{2n}(120 + 84 sqrt2) + beta^{2n}(120 - 84 sqrt2)) / 8",
        ),
    ]


def _jacobsthal(params):
    r = make_roots(params)
    qr = quat_roots(r)
    qj = lambda k: qw_recurrence(params, k)  # noqa: E731
    a_q, b_q = Quaternion(1, 2, 4, 8), Quaternion(1, -1, 1, -1)
    return [
        _numerator_expectation("jacobsthal", params, [(0, 1, 1, 3), (1, 0, 2, 2)]),
        Expectation(
            key="jacobsthal.quaternion_roots",
            kind="binet",
            description="alpha_q = 1 + 2i + 4j + 8k, beta_q = 1 - i + j - k (sqrt9 -> 3)",
            actual=lambda n: (
                qr.alpha_q.map(lambda c: c.evaluate_surd(3)),
                qr.beta_q.map(lambda c: c.evaluate_surd(3)),
            ),
            printed=lambda n: (a_q, b_q),
            constant=True,
        ),
        _binet_expectation(
            "jacobsthal",
            params,
            lambda n: (a_q * 2**n - b_q * (-1) ** n) * Fraction(1, 3),
            "(alpha_q 2^n - beta_q (-1)^n) / 3",
        ),
        Expectation(
            key="jacobsthal.sum_constant",
            kind="sum",
            description="partial-sum constant K = (1 + i + 3j + 7k) / (-2)",
            actual=lambda n: sum_constant_k(params),
            printed=lambda n: Quaternion(1, 1, 3, 7) * Fraction(-1, 2),
            derived=lambda n: Quaternion(1, 1, 3, 5) * Fraction(-1, 2),
            discrepancy=True,
            constant=True,
        ),
        Expectation(
            key="jacobsthal.sum",
            kind="sum",
            description="sum_{k<=n} QJ_k = QJ_{n+2} - QJ_1 / 2",
            actual=lambda n: sum_direct(params, n),
            printed=lambda n: qj(n + 2) - qj(1) * H,
            derived=lambda n: (qj(n + 2) - qj(1)) * H,
            discrepancy=True,
        ),
        _norm_expectation(
            "jacobsthal",
            params,
            lambda n: Fraction(85 * 4**n + 10 * (-1) ** n * 2**n + 4, 9),
            "norm = (85 * 4^n + 10 (-1)^n 2^n + 4) / 9",
        ),
    ]


def _pell_lucas(params):
    r = make_roots(params)
    qr = quat_roots(r)
    return [
        _numerator_expectation("pell_lucas", params, [(2, 1, 4, 9), (-3, 2, 1, 4)]),
        _binet_expectation(
            "pell_lucas",
            params,
            lambda n: _rational(
                (qr.alpha_q * ((1 - 2 * r.beta) * r.alpha**n) - qr.beta_q * ((1 - 2 * r.alpha) * r.beta**n))
                * r.sqrt_d.inv()
            ),
            "(alpha_q (1 - 2 beta) alpha^n - beta_q (1 - 2 alpha) beta^n) / (alpha - beta)",
        ),
    ]


def _jacobsthal_lucas(params):
    a_q, b_q = Quaternion(1, 2, 4, 8), Quaternion(1, -1, 1, -1)
    return [
        _numerator_expectation("jacobsthal_lucas", params, [(2, 1, 5, 7), (-1, 4, 2, 10)]),
        _binet_expectation(
            "jacobsthal_lucas",
            params,
            lambda n: a_q * 2**n - b_q * (-1) ** n,
            "(1 + 2i + 4j + 8k) 2^n - (1 - i + j - k) (-1)^n",
            derived=lambda n: a_q * 2**n + b_q * (-1) ** n,
        ),
        Expectation(
            key="jacobsthal_lucas.scalar",
            kind="scalar",
            description="j_n = 2^n - (-1)^n",
            actual=lambda n: w_recurrence(params, n),
            printed=lambda n: Fraction(2**n - (-1) ** n),
            derived=lambda n: Fraction(2**n + (-1) ** n),
            discrepancy=True,
        ),
    ]


_BUILDERS = {
    "fibonacci": _fibonacci,
    "lucas": _lucas,
    "pell": _pell,
    "pell_lucas": _pell_lucas,
    "jacobsthal": _jacobsthal,
    "jacobsthal_lucas": _jacobsthal_lucas,
}


def preset_expectations(name: str) -> list[Expectation]:
    preset = preset_lookup(name)
    return _BUILDERS[name](preset.params)


def general_expectations(params: HoradamParams) -> list[Expectation]:
    """Published statements that apply to every parameter tuple."""
    a, b, p, q = params.as_tuple()
    out = [
        Expectation(
            key="general.initial_values",
            kind="initial",
            description="Q0 = (a, b, pb+qa, p^2 b+pqa+qb), Q1 = (b, pb+qa, p^2 b+pqa+qb, p^3 b+p^2 qa+2pqb+q^2 a)",
            actual=lambda n: (qw_recurrence(params, 0), qw_recurrence(params, 1)),
            printed=lambda n: (
                Quaternion(a, b, p * b + q * a, p * p * b + p * q * a + q * b),
                Quaternion(
                    b,
                    p * b + q * a,
                    p * p * b + p * q * a + q * b,
                    p**3 * b + p * p * q * a + 2 * p * q * b + q * q * a,
                ),
            ),
            constant=True,
        ),
    ]
    # the printed first root uses sqrt(p^2 + 4p); it solves x^2 - p x - q = 0 only when p = q
    e = p * p + 4 * p
    root = QuadExt(p * H, H, e)
    out.append(
        Expectation(
            key="general.printed_root",
            kind="roots",
            description="(p + sqrt(p^2 + 4p)) / 2 is a root of x^2 - p x - q",
            actual=lambda n: Fraction(0),
            printed=lambda n: _maybe_rational(root * root - root * p - q),
            derived=lambda n: Fraction(0),
            discrepancy=p != q,
            constant=True,
        )
    )
    if q != 0 and params.discriminant != 0:
        # printed norm brackets differ from the true ones by
        # 4 a q^2 (-q)^(n-1) (a - b p (1 + q^2)) / D
        out.append(
            Expectation(
                key="general.norm_closed_form",
                kind="norm",
                description="norm via the published aggregates (b^2 A + 2abq B + a^2 q^2 C) / (p^2 + 4q)",
                actual=lambda n: norm_direct(params, n),
                printed=lambda n: norm_closed_form_printed(params, n),
                derived=lambda n: norm_direct(params, n),
                discrepancy=not (a == 0 or a == b * p * (1 + q * q)),
            )
        )
    return out


def _maybe_rational(x: QuadExt):
    return x.to_rational() if x.is_rational() else x
