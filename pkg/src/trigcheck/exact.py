"""Exact rational arithmetic substrate: literal parsing and decimal rendering.

Every value the algorithms here touch is rational, so `fractions.Fraction`
is the substrate. It already maintains the canonical form we rely on for
structural equality: positive denominator, gcd-reduced after every operation.
This module adds the two pieces Fraction lacks, exact literal parsing for the
CLI and correctly rounded decimal output.
"""

from __future__ import annotations

import sys
from fractions import Fraction

Rat = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal literal read exactly ("0.05" is 1/20)."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def to_decimal(value: Fraction | int, digits: int) -> str:
    """Decimal string with `digits` fractional digits, rounded to nearest.

    Ties round away from zero: (1/2, 0) -> "1", (-1/2, 0) -> "-1".
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    value = Fraction(value)
    scaled = value * 10**digits
    p, q = scaled.numerator, scaled.denominator
    if p >= 0:
        units = (2 * p + q) // (2 * q)
    else:
        units = -((-2 * p + q) // (2 * q))
    sign = "-" if units < 0 else ""
    text = str(abs(units))
    if digits == 0:
        return sign + text
    text = text.rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def rat_str(value: Fraction) -> str:
    """Render as "p/q", or plain "p" for integers.

    Exact loop results can have more digits than CPython's int-to-str guard
    allows by default; the limit is raised on demand rather than failing.
    """
    try:
        num = str(value.numerator)
        den = str(value.denominator)
    except ValueError:
        needed = max(_decimal_digit_bound(value.numerator),
                     _decimal_digit_bound(value.denominator))
        sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), needed))
        num = str(value.numerator)
        den = str(value.denominator)
    return num if den == "1" else f"{num}/{den}"


def _decimal_digit_bound(n: int) -> int:
    return n.bit_length() // 3 + 4
