"""Shared fixtures: an independent Machin-style pi oracle frozen for the tests."""

from __future__ import annotations

from fractions import Fraction

import pytest

from trigcheck import to_decimal

# First 30 fractional digits of pi, rounded at the last digit; guards the
# oracle below against regressions in its own series code.
PI_30_DIGITS = "3.141592653589793238462643383280"


def machin_pi(accuracy: Fraction) -> Fraction:
    """pi = 16*atan(1/5) - 4*atan(1/239) with truncation error below accuracy.

    Independent of the package's series code: a direct arctan series with the
    alternating-remainder stop rule.
    """

    def atan_inv(n: int, eps: Fraction) -> Fraction:
        x = Fraction(1, n)
        term = x
        total = Fraction(0)
        k = 0
        while abs(term) > eps:
            total += term
            k += 1
            term = -term * x * x * (2 * k - 1) / (2 * k + 1)
        return total

    return 16 * atan_inv(5, accuracy / 32) - 4 * atan_inv(239, accuracy / 8)


@pytest.fixture(scope="session")
def pi_ref() -> Fraction:
    value = machin_pi(Fraction(1, 10**32))
    assert to_decimal(value, 30) == PI_30_DIGITS
    return value
