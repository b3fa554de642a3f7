from fractions import Fraction

import pytest

from horadam import HoradamParams, Quaternion, preset_expectations, preset_lookup
from horadam.checks import check_paper_remarks
from horadam.errors import UnknownPreset
from horadam.presets import PRESET_NAMES, general_expectations


def test_lookup_examples():
    assert preset_lookup("fibonacci").params == HoradamParams(0, 1, 1, 1)
    jl = preset_lookup("jacobsthal_lucas").params
    assert jl == HoradamParams(2, 1, 1, 2)
    assert (jl.a, jl.b) == (2, 1)
    with pytest.raises(UnknownPreset):
        preset_lookup("tribonacci")


def test_table():
    table = {name: preset_lookup(name).params.as_tuple() for name in PRESET_NAMES}
    assert table == {
        "fibonacci": (0, 1, 1, 1),
        "lucas": (2, 1, 1, 1),
        "pell": (0, 1, 2, 1),
        "pell_lucas": (2, 1, 2, 1),
        "jacobsthal": (0, 1, 1, 2),
        "jacobsthal_lucas": (2, 1, 1, 2),
    }
    for name in PRESET_NAMES:
        assert all(v.denominator == 1 for v in preset_lookup(name).params.as_tuple())


def _by_key(name):
    return {e.key: e for e in preset_expectations(name)}


def test_fibonacci_expectations():
    exps = _by_key("fibonacci")
    cassini = exps["fibonacci.cassini"]
    assert cassini.expected_at(1) == Quaternion(-2, -2, -4, -3)
    assert cassini.expected_at(4) == Quaternion(2, 2, 4, 3)
    assert exps["fibonacci.sum"].expected_at(3) == Quaternion(4, 7, 11, 18)
    assert not any(e.discrepancy for e in exps.values())


def test_jacobsthal_norm_expectation():
    norm = _by_key("jacobsthal")["jacobsthal.norm"]
    assert norm.expected_at(1) == 36
    assert [norm.expected_at(n) for n in range(3)] == [11, 36, 156]


def test_flagged_items():
    flagged = {e.key for name in PRESET_NAMES for e in preset_expectations(name) if e.discrepancy}
    assert flagged == {
        "lucas.genfunc_numerator",
        "pell.cassini",
        "pell.sum",
        "jacobsthal.sum_constant",
        "jacobsthal.sum",
        "jacobsthal_lucas.binet",
        "jacobsthal_lucas.scalar",
    }
    lucas = _by_key("lucas")["lucas.genfunc_numerator"]
    assert lucas.printed(0) == (Quaternion(2, 1, 3, 5), Quaternion(-1, 2, 2, 2))
    assert lucas.derived(0) == (Quaternion(2, 1, 3, 4), Quaternion(-1, 2, 1, 3))


def test_generalized_fibonacci_initial_values():
    # (0, 1, p, p^2+1) and (1, p, p^2+1, p^3+2p) for a=0, b=1, q=1 at several p
    for p in (1, 2, 3, -4, Fraction(1, 2)):
        params = HoradamParams(0, 1, p, 1)
        exp = general_expectations(params)[0]
        assert exp.actual(0) == exp.printed(0)
        assert exp.actual(0)[0] == Quaternion(0, 1, p, p * p + 1)


def test_printed_root_holds_only_when_p_equals_q():
    for params, holds in ((HoradamParams(0, 1, 1, 1), True), (HoradamParams(0, 1, 2, 1), False)):
        root = next(e for e in general_expectations(params) if e.key == "general.printed_root")
        assert (root.printed(0) == 0) is holds
        assert root.discrepancy is not holds


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_every_expectation_resolves(name):
    report = check_paper_remarks(preset_lookup(name).params, 12)
    assert report.status == "pass"
    assert not any(r.remark.endswith(":flag_unconfirmed") for r in report.results)
    flagged = {e.key for e in preset_expectations(name) if e.discrepancy}
    assert flagged <= {d["remark"] for d in report.discrepancies}
    assert all(d["derived_matches"] for d in report.discrepancies)
