from fractions import Fraction

import pytest
import sympy
from conftest import closed_form_params, rational_params
from hypothesis import given, settings
from hypothesis import strategies as st

from horadam import HoradamParams, lucas_companion, make_roots, t_n, w_binet, w_recurrence, w_via_t
from horadam.errors import ParamParseError, RepeatedRoot, ZeroQ
from horadam.horadam_scalar import w_terms

FIB = HoradamParams(0, 1, 1, 1)
LUCAS = HoradamParams(2, 1, 1, 1)
PELL = HoradamParams(0, 1, 2, 1)
JACOBSTHAL = HoradamParams(0, 1, 1, 2)


def test_recurrence_examples():
    assert w_recurrence(FIB, 6) == 8
    assert w_recurrence(LUCAS, 3) == 4
    assert w_terms(LUCAS, 4) == [2, 1, 3, 4]
    assert w_terms(JACOBSTHAL, 5) == [0, 1, 1, 3, 5]


def test_recurrence_allows_q_zero():
    p = HoradamParams(3, 2, 5, 0)
    assert w_terms(p, 4) == [3, 2, 10, 50]


def test_make_roots_fibonacci():
    r = make_roots(FIB)
    h = Fraction(1, 2)
    assert (r.alpha.rat, r.alpha.surd, r.alpha.disc) == (h, h, 5)
    assert (r.beta.rat, r.beta.surd) == (h, -h)
    assert r.big_a == 1 and r.big_b == 1
    assert r.sqrt_d.surd == 1


def test_make_roots_square_discriminant():
    r = make_roots(JACOBSTHAL)
    assert r.discriminant == 9
    assert r.alpha.evaluate_surd(3) == 2
    assert r.beta.evaluate_surd(3) == -1


def test_make_roots_rejects_repeated_root():
    with pytest.raises(RepeatedRoot):
        make_roots(HoradamParams(2, 1, -2, -1))


def test_t_n_examples():
    assert t_n(FIB, 5) == 5
    assert t_n(HoradamParams(3, 7, 2, 5), 0) == 0
    assert t_n(JACOBSTHAL, -1) == Fraction(1, 2)
    assert t_n(HoradamParams(0, 0, 4, Fraction(-3, 7)), -1) == Fraction(-7, 3)
    with pytest.raises(ZeroQ):
        t_n(HoradamParams(0, 1, 1, 0), -1)


def test_binet_examples():
    assert w_binet(FIB, 10) == 55
    assert w_binet(LUCAS, 0) == 2
    p = HoradamParams(3, 7, 2, 5)
    assert w_binet(p, 6) == w_recurrence(p, 6)


def test_via_t_examples():
    assert w_via_t(LUCAS, 2) == 3
    assert w_via_t(PELL, 4) == 12
    p = HoradamParams(Fraction(5, 3), -4, 7, 2)
    assert w_via_t(p, 0) == p.a


def test_closed_forms_need_nonzero_q():
    with pytest.raises(ZeroQ):
        w_binet(HoradamParams(0, 1, 1, 0), 3)
    with pytest.raises(ZeroQ):
        w_via_t(HoradamParams(0, 1, 1, 0), 3)


def test_binet_matches_sympy_oracle():
    a, b, p, q = 3, -2, 5, -3
    s = sympy.sqrt(p * p + 4 * q)
    al, be = (p + s) / 2, (p - s) / 2
    for n in range(8):
        expected = sympy.simplify(((b - a * be) * al**n - (b - a * al) * be**n) / (al - be))
        assert w_binet(HoradamParams(a, b, p, q), n) == expected


def test_params_parse():
    assert HoradamParams.parse("0,1,-2,3/4") == HoradamParams(0, 1, -2, Fraction(3, 4))
    assert str(HoradamParams.parse("2,1,1,2")) == "(2,1;1,2)"
    with pytest.raises(ParamParseError):
        HoradamParams.parse("1,2,3")
    with pytest.raises(ParamParseError):
        HoradamParams.parse("1,2,3,0.5")


@settings(max_examples=60)
@given(closed_form_params(), st.integers(0, 60))
def test_three_routes_agree(params, n):
    w = w_recurrence(params, n)
    assert w_binet(params, n) == w
    assert w_via_t(params, n) == w


@settings(max_examples=40)
@given(rational_params, st.integers(0, 25))
def test_three_routes_agree_rational_params(params, n):
    assert w_binet(params, n) == w_via_t(params, n) == w_recurrence(params, n)


@given(closed_form_params())
def test_vieta(params):
    r = make_roots(params)
    assert r.alpha + r.beta == params.p
    assert r.alpha * r.beta == -params.q
    assert r.big_a == params.b - params.a * r.beta
    assert r.alpha - r.beta == r.sqrt_d and r.sqrt_d.surd == 1


@given(closed_form_params(), st.integers(0, 40))
def test_generalized_lucas(params, n):
    lucas_like = HoradamParams(2, params.p, params.p, params.q)
    assert lucas_companion(params, n) == w_recurrence(lucas_like, n)


@given(closed_form_params(), st.integers(-1, 40))
def test_t_recurrence(params, n):
    p, q = params.p, params.q
    assert t_n(params, n + 2) == p * t_n(params, n + 1) + q * t_n(params, n)
