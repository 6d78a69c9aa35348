"""Exact-arithmetic series algorithms against hand traces and the golden oracle."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from trigcheck import (
    cos_taylor,
    cos_unbounded,
    cos_zerone,
    pi_leibniz,
    sin_taylor,
    sin_unbounded,
    sin_zerone,
    to_decimal,
)
from trigcheck.errors import ArgOutOfRange, EpsOutOfRange, NonPositiveEps


def test_pi_leibniz_hand_trace():
    result = pi_leibniz(Fraction(1, 2))
    assert result.value == Fraction(304, 105)
    assert result.iterations == 3
    assert result.a_priori_bound == Fraction(1, 2)


@pytest.mark.parametrize("eps", [Fraction(1, 3), Fraction(2, 7), Fraction(9, 10),
                                 Fraction(1, 50), Fraction(3, 1000)])
def test_pi_leibniz_iteration_count_law(eps):
    result = pi_leibniz(eps)
    assert result.iterations == math.ceil(Fraction(2) / eps - Fraction(3, 2))


def test_pi_leibniz_accuracy(pi_ref):
    for eps in (Fraction(1, 10), Fraction(1, 100)):
        assert abs(pi_leibniz(eps).value - pi_ref) <= eps


def test_pi_leibniz_rejects_bad_eps():
    with pytest.raises(NonPositiveEps):
        pi_leibniz(Fraction(0))
    with pytest.raises(NonPositiveEps):
        pi_leibniz(Fraction(-1, 2))


def test_cos_taylor_hand_trace():
    result = cos_taylor(Fraction(1), Fraction(1, 20))
    assert result.value == Fraction(1, 2)
    assert result.iterations == 1
    reference = cos_unbounded(Fraction(1), Fraction(1, 10**12))
    assert abs(result.value - reference) <= Fraction(1, 20)


def test_cos_taylor_at_zero():
    result = cos_taylor(Fraction(0), Fraction(1, 10))
    assert result.value == 1
    assert result.iterations == 0


def test_sin_taylor_hand_trace():
    result = sin_taylor(Fraction(1), Fraction(1, 20))
    assert result.value == Fraction(5, 6)
    reference = sin_unbounded(Fraction(1), Fraction(1, 10**12))
    assert abs(result.value - reference) <= Fraction(1, 20)


def test_sin_taylor_negative_argument_contract():
    # the loop guard compares magnitudes, so negative arguments converge too
    x = Fraction(-9, 10)
    eps = Fraction(1, 100)
    result = sin_taylor(x, eps)
    reference = sin_unbounded(x, eps / 1000)
    assert abs(result.value - reference) <= eps + eps / 1000


def test_taylor_eps_domain():
    for fn in (cos_taylor, sin_taylor):
        with pytest.raises(EpsOutOfRange):
            fn(Fraction(1, 2), Fraction(1))
        with pytest.raises(EpsOutOfRange):
            fn(Fraction(1, 2), Fraction(0))


def test_cos_zerone_hand_traces():
    result = cos_zerone(Fraction(1), Fraction(1, 4))
    assert result.value == Fraction(1, 2)
    assert result.iterations == 2

    result = cos_zerone(Fraction(1, 2), Fraction(1, 4))
    assert result.value == Fraction(7, 8)
    assert result.iterations == 2


def test_sin_zerone_at_zero():
    result = sin_zerone(Fraction(0), Fraction(1, 2))
    assert result.value == 0
    assert result.iterations == 1


@pytest.mark.parametrize("eps,expected_n", [
    (Fraction(1, 4), 2),
    (Fraction(1, 2), 1),
    (Fraction(1, 100), 3),
    (Fraction(1, 1000), 4),
])
def test_cos_zerone_stop_count_is_minimal(eps, expected_n):
    assert cos_zerone(Fraction(1, 3), eps).iterations == expected_n
    n = 1
    while math.factorial(2 * n) * eps < 1:
        n += 1
    assert n == expected_n


def test_zerone_domain_errors():
    with pytest.raises(ArgOutOfRange):
        cos_zerone(Fraction(2), Fraction(1, 4))
    with pytest.raises(ArgOutOfRange):
        sin_zerone(Fraction(-3, 2), Fraction(1, 4))
    with pytest.raises(EpsOutOfRange):
        cos_zerone(Fraction(1, 2), Fraction(2))


def test_zerone_matches_oracle_within_eps():
    for num in (-7, -3, 0, 5, 9):
        x = Fraction(num, 10)
        for eps in (Fraction(1, 4), Fraction(1, 64), Fraction(1, 10**4)):
            ref_c = cos_unbounded(x, eps / 1000)
            ref_s = sin_unbounded(x, eps / 1000)
            assert abs(cos_zerone(x, eps).value - ref_c) <= eps + eps / 1000
            assert abs(sin_zerone(x, eps).value - ref_s) <= eps + eps / 1000


def test_cos_unbounded_golden_value():
    value = cos_unbounded(Fraction(50), Fraction(1, 10**8))
    assert to_decimal(value, 10) == "0.9649660286"


def test_cos_unbounded_basics():
    assert cos_unbounded(Fraction(0), Fraction(1, 10**8)) == 1
    assert sin_unbounded(Fraction(0), Fraction(1, 10**8)) == 0
    with pytest.raises(NonPositiveEps):
        cos_unbounded(Fraction(1), Fraction(0))


def test_unbounded_agrees_with_taylor():
    fine = cos_unbounded(Fraction(1), Fraction(1, 10**12))
    coarse = cos_taylor(Fraction(1), Fraction(1, 10**6)).value
    assert abs(fine - coarse) <= Fraction(2, 10**6)


def test_unbounded_parity_is_exact():
    x = Fraction(13, 7)
    eps = Fraction(1, 10**6)
    assert cos_unbounded(-x, eps) == cos_unbounded(x, eps)
    assert sin_unbounded(-x, eps) == -sin_unbounded(x, eps)


def test_result_serialization():
    payload = pi_leibniz(Fraction(1, 2)).as_dict(digits=6)
    assert payload == {
        "value": "304/105",
        "decimal": "2.895238",
        "iterations": 3,
        "bound": "1/2",
    }


def test_pi_leibniz_huge_eps_runs_zero_iterations():
    result = pi_leibniz(Fraction(5))
    assert result.iterations == 0
    assert result.value == 4  # the untouched first partial sum, 4 * 1


def test_cos_taylor_moderate_argument():
    # no range restriction on the plain Taylor variant; the exit check
    # certifies the alternating-series applicability
    eps = Fraction(1, 100)
    result = cos_taylor(Fraction(5), eps)
    reference = cos_unbounded(Fraction(5), eps / 1000)
    assert abs(result.value - reference) <= eps + eps / 1000
    assert result.iterations >= 5


def test_invariant_checker_raises_on_false_clause():
    from trigcheck.errors import InvariantViolation
    from trigcheck.oracle import _invariant

    _invariant(True, "here", "fine")
    with pytest.raises(InvariantViolation, match="demo clause"):
        _invariant(False, "here", "demo clause")
