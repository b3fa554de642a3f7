"""Exact Horadam quaternion sequences and verification of their closed forms."""

from .errors import (
    DiscriminantMismatch,
    DomainError,
    HoradamError,
    InvalidRange,
    NonInvertible,
    NotRational,
    ParamParseError,
    RepeatedRoot,
    ScalarRingMismatch,
    SumPole,
    UnknownPreset,
    ZeroDivisorInverse,
    ZeroQ,
)
from .genfunc import QuatSeries, gf_expand, gf_numerator
from .horadam_quaternion import (
    NormTriple,
    QuatRoots,
    cassini_lhs,
    cassini_rhs,
    norm_closed_form,
    norm_direct,
    norm_triple,
    quat_roots,
    qw_binet,
    qw_recurrence,
    sum_closed_form,
    sum_constant_k,
    sum_direct,
)
from .horadam_scalar import HoradamParams, Roots, lucas_companion, make_roots, t_n, w_binet, w_recurrence, w_via_t
from .presets import preset_expectations, preset_lookup
from .quaternion import Quaternion, quat_conj, quat_inv, quat_mul, quat_norm
from .scalars import QuadExt, Rational, qe_add, qe_conj, qe_inv, qe_mul, qe_pow, qe_to_rational

__version__ = "0.1.0"

__all__ = [
    "cassini_lhs",
    "cassini_rhs",
    "DiscriminantMismatch",
    "DomainError",
    "gf_expand",
    "gf_numerator",
    "HoradamError",
    "HoradamParams",
    "InvalidRange",
    "lucas_companion",
    "make_roots",
    "NonInvertible",
    "norm_closed_form",
    "norm_direct",
    "norm_triple",
    "NormTriple",
    "NotRational",
    "ParamParseError",
    "preset_expectations",
    "preset_lookup",
    "qe_add",
    "qe_conj",
    "qe_inv",
    "qe_mul",
    "qe_pow",
    "qe_to_rational",
    "QuadExt",
    "quat_conj",
    "quat_inv",
    "quat_mul",
    "quat_norm",
    "quat_roots",
    "Quaternion",
    "QuatRoots",
    "QuatSeries",
    "qw_binet",
    "qw_recurrence",
    "Rational",
    "RepeatedRoot",
    "Roots",
    "ScalarRingMismatch",
    "sum_closed_form",
    "sum_constant_k",
    "sum_direct",
    "SumPole",
    "t_n",
    "UnknownPreset",
    "w_binet",
    "w_recurrence",
    "w_via_t",
    "ZeroDivisorInverse",
    "ZeroQ",
]
