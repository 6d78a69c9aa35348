"""A grid fix-point datatype: multiples of a step 1/k confined to [inf, sup].

Addition and subtraction are exact whenever the mathematical result stays in
range, and raise RangeOverflow otherwise; they never round. Multiplication
and division round the exact rational result to the nearest grid value, ties
to the even multiple (Gaussian rounding), so their error never exceeds half a
step while the exact result is in range, and they are exact whenever the
exact result already lies on the grid. Because the step divides 1, every
integer inside [inf, sup] is itself a grid value, which the series algorithms
exploit for exact counter scaling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatMismatch, RangeOverflow
from .exact import parse_rational, rat_str

_FORMAT_RE = re.compile(r"^1/(\d+):\[([^,\]]+),([^,\]]+)\]$")


@dataclass(frozen=True)
class FixFormat:
    """Grid parameters: step 1/k with k >= 2, bounds inf < 0 < sup on the grid."""

    k: int
    inf: Fraction
    sup: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "inf", Fraction(self.inf))
        object.__setattr__(self, "sup", Fraction(self.sup))
        if self.k < 2:
            raise ValueError("k must be at least 2 so the step is below 1")
        if not (self.inf < 0 < self.sup):
            raise ValueError("bounds must satisfy inf < 0 < sup")
        if (self.inf * self.k).denominator != 1 or (self.sup * self.k).denominator != 1:
            raise ValueError("inf and sup must be multiples of the step 1/k")

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.k)

    @property
    def m_inf(self) -> int:
        return int(self.inf * self.k)

    @property
    def m_sup(self) -> int:
        return int(self.sup * self.k)

    def in_range(self, value: Fraction) -> bool:
        return self.inf <= value <= self.sup

    def representable(self, value: Fraction) -> bool:
        value = Fraction(value)
        return (value * self.k).denominator == 1 and self.in_range(value)

    def exact(self, value: Fraction | int) -> FixNum:
        """Embed a rational that is already on the grid; raise if it is not."""
        value = Fraction(value)
        scaled = value * self.k
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/{self.k}")
        return FixNum(int(scaled), self)

    def from_int(self, i: int) -> FixNum:
        return FixNum(i * self.k, self)

    def from_rat(self, value: Fraction | int) -> FixNum:
        """Round a rational to the nearest grid value (ties to even multiple).

        Inputs in (sup, sup + step/2] and [inf - step/2, inf) still have a
        nearest grid value (the boundary itself, within half a step), so they
        round to it; anything further out raises RangeOverflow.
        """
        value = Fraction(value)
        half = self.step / 2
        if value > self.sup:
            if value <= self.sup + half:
                return FixNum(self.m_sup, self)
            raise RangeOverflow(f"{value} exceeds sup={self.sup} by more than step/2")
        if value < self.inf:
            if value >= self.inf - half:
                return FixNum(self.m_inf, self)
            raise RangeOverflow(f"{value} undershoots inf={self.inf} by more than step/2")
        return FixNum(round(value * self.k), self)

    @classmethod
    def parse(cls, text: str) -> FixFormat:
        """Parse a format literal like "1/256:[-8,64]"."""
        match = _FORMAT_RE.match(text.strip())
        if not match:
            raise ValueError(f"not a format literal (want '1/k:[inf,sup]'): {text!r}")
        k = int(match.group(1))
        return cls(k, parse_rational(match.group(2)), parse_rational(match.group(3)))

    def __str__(self) -> str:
        return f"1/{self.k}:[{rat_str(self.inf)},{rat_str(self.sup)}]"


@dataclass(frozen=True)
class FixNum:
    """A grid value m * (1/k). Arithmetic follows the format's rounding rules."""

    m: int
    fmt: FixFormat

    def __post_init__(self) -> None:
        if not (self.fmt.m_inf <= self.m <= self.fmt.m_sup):
            raise RangeOverflow(
                f"{self.m}/{self.fmt.k} outside [{self.fmt.inf}, {self.fmt.sup}]")

    def to_rat(self) -> Fraction:
        return Fraction(self.m, self.fmt.k)

    def _require_same_format(self, other: FixNum) -> None:
        if not isinstance(other, FixNum):
            raise TypeError(f"expected FixNum, got {type(other).__name__}")
        if other.fmt != self.fmt:
            raise FormatMismatch(f"operand formats differ: {self.fmt} vs {other.fmt}")

    def _exact_result(self, m: int, op: str) -> FixNum:
        if not (self.fmt.m_inf <= m <= self.fmt.m_sup):
            raise RangeOverflow(f"exact {op} result {m}/{self.fmt.k} leaves range")
        return FixNum(m, self.fmt)

    def __add__(self, other: FixNum) -> FixNum:
        self._require_same_format(other)
        return self._exact_result(self.m + other.m, "sum")

    def __sub__(self, other: FixNum) -> FixNum:
        self._require_same_format(other)
        return self._exact_result(self.m - other.m, "difference")

    def __neg__(self) -> FixNum:
        return self._exact_result(-self.m, "negation")

    def __abs__(self) -> FixNum:
        return self if self.m >= 0 else -self

    def __mul__(self, other: FixNum) -> FixNum:
        self._require_same_format(other)
        exact = Fraction(self.m * other.m, self.fmt.k**2)
        if not self.fmt.in_range(exact):
            raise RangeOverflow(f"exact product {exact} leaves range")
        return self.fmt.from_rat(exact)

    def __truediv__(self, other: FixNum) -> FixNum:
        self._require_same_format(other)
        if other.m == 0:
            raise ZeroDivisionError("fix-point division by zero")
        exact = Fraction(self.m, other.m)
        if not self.fmt.in_range(exact):
            raise RangeOverflow(f"exact quotient {exact} leaves range")
        return self.fmt.from_rat(exact)

    def __floor__(self) -> int:
        return self.m // self.fmt.k

    def __ceil__(self) -> int:
        return -((-self.m) // self.fmt.k)

    def __lt__(self, other: FixNum) -> bool:
        self._require_same_format(other)
        return self.m < other.m

    def __le__(self, other: FixNum) -> bool:
        self._require_same_format(other)
        return self.m <= other.m

    def __gt__(self, other: FixNum) -> bool:
        self._require_same_format(other)
        return self.m > other.m

    def __ge__(self, other: FixNum) -> bool:
        self._require_same_format(other)
        return self.m >= other.m

    def __str__(self) -> str:
        digits = _power_of_ten_exponent(self.fmt.k)
        if digits is None:
            return f"{self.m}/{self.fmt.k}"
        sign = "-" if self.m < 0 else ""
        text = str(abs(self.m)).rjust(digits + 1, "0")
        return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _power_of_ten_exponent(k: int) -> int | None:
    j = 0
    while k % 10 == 0:
        k //= 10
        j += 1
    return j if k == 1 else None
