"""Strict binary32 cosine loop: small arguments fine, moderate ones explode."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from trigcheck import cos_code_in_c, cos_unbounded, f32, scan_table
from trigcheck.errors import IterationCapExceeded, NonPositiveEps
from trigcheck.floatrepro import ITERATION_CAP_ENV, iteration_cap

EPS = f32("1e-6")


def test_binary32_strictness_canaries():
    # one ulp below the rounding threshold vanishes, one at the threshold does not
    assert f32(1.0) + f32(2.0**-24) == f32(1.0)
    assert f32(1.0) + f32(2.0**-23) != f32(1.0)
    assert isinstance(f32(1.0) * f32(0.5), np.float32)


def test_zero_argument():
    assert cos_code_in_c(f32(0.0), EPS) == f32(1.0)


@pytest.mark.parametrize("x,expected", [
    ("0.05", 0.9987502),
    ("0.1", 0.9950042),
])
def test_small_argument_rows(x, expected):
    value = float(cos_code_in_c(f32(x), EPS))
    assert abs(value - expected) / expected <= 1e-3


def test_small_arguments_agree_with_exact_series():
    for text in ("-1", "-0.5", "0.25", "0.75", "1"):
        x = f32(text)
        reference = cos_unbounded(Fraction(float(x)), Fraction(1, 10**12))
        assert abs(Fraction(float(cos_code_in_c(x, EPS))) - reference) <= Fraction(1, 10**5)


def test_moderate_argument_explodes():
    assert abs(float(cos_code_in_c(f32(29.0), EPS))) > 1e3


def test_scan_row_count_inclusive():
    rows = scan_table(f32(0), f32("0.1"), f32("0.05"), EPS)
    assert len(rows) == 3
    assert [float(x) for x, _ in rows] == [float(f32(0)), float(f32("0.05")),
                                           float(f32("0.05") + f32("0.05"))]


def test_scan_is_deterministic():
    first = scan_table(f32(0), f32(5), f32("0.05"), EPS)
    second = scan_table(f32(0), f32(5), f32("0.05"), EPS)
    assert [(x.tobytes(), v.tobytes()) for x, v in first] == \
           [(x.tobytes(), v.tobytes()) for x, v in second]


def test_scan_argument_validation():
    with pytest.raises(ValueError):
        scan_table(f32(0), f32(1), f32(0), EPS)
    with pytest.raises(ValueError):
        scan_table(f32(2), f32(1), f32("0.5"), EPS)
    with pytest.raises(NonPositiveEps):
        cos_code_in_c(f32(1), f32(0))


def test_iteration_cap():
    with pytest.raises(IterationCapExceeded):
        cos_code_in_c(f32(30.0), f32("1e-30"), cap=10)


def test_iteration_cap_env_override(monkeypatch):
    monkeypatch.setenv(ITERATION_CAP_ENV, "17")
    assert iteration_cap() == 17
    monkeypatch.setenv(ITERATION_CAP_ENV, "-1")
    with pytest.raises(ValueError):
        iteration_cap()
    monkeypatch.delenv(ITERATION_CAP_ENV)
    assert iteration_cap() == 1_000_000
