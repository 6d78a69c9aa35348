"""Exact-arithmetic series algorithms with their loop contracts checked as they run.

Each routine executes its imperative loop over `Fraction` values and re-checks
the loop-head invariant on every pass, raising InvariantViolation instead of
returning a value the invariant no longer certifies. The `*_unbounded`
functions are the golden-data generators: plain truncated Taylor sums, valid
for any rational argument, used as ground truth everywhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArgOutOfRange,
    EpsOutOfRange,
    InvariantViolation,
    NonPositiveEps,
)
from .exact import rat_str, to_decimal

# Heads beyond this index stop re-deriving the partial-sum clause from scratch
# (that recheck is quadratic); the cheap clauses still run at every head and
# the sum clause then holds inductively, because each accepted head certifies
# that the term just added was the definitional one.
FULL_SUM_CHECK_LIMIT = 64


@dataclass(frozen=True)
class AlgoResult:
    """Result value plus the loop's iteration count and its a-priori error cap."""

    value: Fraction
    iterations: int
    a_priori_bound: Fraction

    def as_dict(self, digits: int = 12) -> dict:
        return {
            "value": rat_str(self.value),
            "decimal": to_decimal(self.value, digits),
            "iterations": self.iterations,
            "bound": rat_str(self.a_priori_bound),
        }


def _invariant(condition: bool, where: str, clause: str) -> None:
    if not condition:
        raise InvariantViolation(f"{where}: invariant clause failed: {clause}")


def pi_leibniz(eps: Fraction) -> AlgoResult:
    """Approximate pi within eps by the alternating series 4*(1 - 1/3 + 1/5 - ...).

    `iterations` counts loop-body executions and equals ceil(2/eps - 3/2)
    whenever that expression is non-negative (it is for eps < 4).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise NonPositiveEps("eps > 0", f"got {eps}")
    qp = Fraction(1)
    n = 1
    sign = -1
    iterations = 0
    quarter = eps / 4
    while True:
        _invariant(sign == (1 if n % 2 == 0 else -1), "pi_leibniz", "sign = (-1)^n")
        if n <= FULL_SUM_CHECK_LIMIT:
            partial = sum(Fraction(1 if m % 2 == 0 else -1, 2 * m + 1) for m in range(n))
            _invariant(qp == partial, "pi_leibniz", "qp = sum of first n series terms")
        # guard eps/4 < 1/(2n+1), done in integers to keep heads cheap
        if quarter.numerator * (2 * n + 1) >= quarter.denominator:
            break
        qp += Fraction(sign, 2 * n + 1)
        n += 1
        sign = -sign
        iterations += 1
    expected = max(0, math.ceil(Fraction(2) / eps - Fraction(3, 2)))
    _invariant(iterations == expected, "pi_leibniz", "iterations = ceil(2/eps - 3/2)")
    return AlgoResult(4 * qp, iterations, eps)


def _taylor_core(x: Fraction, eps: Fraction, odd: bool) -> AlgoResult:
    """Shared loop for the plain Taylor routines.

    odd=False: cosine accumulator starts at 1, term x^2/2, factors 2n(2n-1).
    odd=True: sine accumulator starts at x, term x^3/6, factors 2n(2n+1).
    The loop guard compares eps against the term's magnitude; the term itself
    is signed for odd powers of a negative argument.
    """
    name = "sin_taylor" if odd else "cos_taylor"
    if not 0 < eps < 1:
        raise EpsOutOfRange("0 < eps < 1", f"got {eps}")
    x2 = x * x
    acc = x if odd else Fraction(1)
    term = x2 * x / 6 if odd else x2 / 2
    n = 1
    sign = -1
    iterations = 0
    while True:
        _check_taylor_head(name, x, n, sign, term, acc, odd)
        if not eps < abs(term):
            break
        acc += sign * term
        n += 1
        sign = -sign
        term = term * x2 / ((2 * n) * (2 * n + 1 if odd else 2 * n - 1))
        iterations += 1
    # alternating-series applicability at the exit path
    limit = 2 * n + 1 if odd else 2 * n
    _invariant(x2 <= limit * limit, name, f"|x| <= {limit} at exit")
    return AlgoResult(acc, iterations, eps)


def _check_taylor_head(name: str, x: Fraction, n: int, sign: int,
                       term: Fraction, acc: Fraction, odd: bool) -> None:
    _invariant(sign == (1 if n % 2 == 0 else -1), name, "sign = (-1)^n")
    shift = 1 if odd else 0
    expected_term = x ** (2 * n + shift) / math.factorial(2 * n + shift)
    _invariant(term == expected_term, name, "term = x^(2n)/(2n)! scaled for parity")
    if n <= FULL_SUM_CHECK_LIMIT:
        partial = sum(
            Fraction(1 if m % 2 == 0 else -1)
            * x ** (2 * m + shift) / math.factorial(2 * m + shift)
            for m in range(n)
        )
        _invariant(acc == partial, name, "accumulator = partial Taylor sum")


def cos_taylor(x: Fraction, eps: Fraction) -> AlgoResult:
    """Taylor cosine in exact rationals: |result - cos x| <= eps for 0 < eps < 1."""
    return _taylor_core(Fraction(x), Fraction(eps), odd=False)


def sin_taylor(x: Fraction, eps: Fraction) -> AlgoResult:
    """Taylor sine in exact rationals: |result - sin x| <= eps for 0 < eps < 1."""
    return _taylor_core(Fraction(x), Fraction(eps), odd=True)


def _zerone_core(x: Fraction, eps: Fraction, odd: bool) -> AlgoResult:
    """Range-restricted variant for |x| <= 1 with a factorial-scaled stop counter.

    The loop does not test the term at all: it keeps a counter
    ep = (-1)^n * (2n)! * eps (sine: (2n+1)!) and exits once |ep| >= 1, at
    which point eps >= 1/(2n)! >= |term| certifies the result. `iterations`
    in the returned record is the final counter n, the number of series terms
    accumulated, which equals min{N : (2N)! * eps >= 1} (sine: (2N+1)!).
    """
    name = "sin_zerone" if odd else "cos_zerone"
    if not 0 < eps < 1:
        raise EpsOutOfRange("0 < eps < 1", f"got {eps}")
    if not -1 <= x <= 1:
        raise ArgOutOfRange("-1 <= x <= 1", f"got {x}")
    x2 = x * x
    acc = x if odd else Fraction(1)
    term = x2 * x / 6 if odd else x2 / 2
    ep = -6 * eps if odd else -2 * eps
    n = 1
    sign = -1
    while True:
        _check_zerone_head(name, x, eps, n, sign, term, acc, ep, odd)
        if not abs(ep) < 1:
            break
        acc += sign * term
        n += 1
        sign = -sign
        if odd:
            term = term * x2 / ((2 * n) * (2 * n + 1))
            ep = -ep * (2 * n) * (2 * n + 1)
        else:
            term = term * x2 / ((2 * n - 1) * (2 * n))
            ep = -ep * (2 * n - 1) * (2 * n)
    return AlgoResult(acc, n, eps)


def _check_zerone_head(name: str, x: Fraction, eps: Fraction, n: int, sign: int,
                       term: Fraction, acc: Fraction, ep: Fraction, odd: bool) -> None:
    shift = 1 if odd else 0
    parity = 1 if n % 2 == 0 else -1
    _invariant(sign == parity, name, "sign = (-1)^n")
    _invariant(ep == parity * math.factorial(2 * n + shift) * eps,
               name, "ep = (-1)^n * (2n)! * eps scaled for parity")
    _invariant(term == x ** (2 * n + shift) / math.factorial(2 * n + shift),
               name, "term = x^(2n)/(2n)! scaled for parity")
    partial = sum(
        Fraction(1 if m % 2 == 0 else -1)
        * x ** (2 * m + shift) / math.factorial(2 * m + shift)
        for m in range(n)
    )
    _invariant(acc == partial, name, "accumulator = partial Taylor sum")


def cos_zerone(x: Fraction, eps: Fraction) -> AlgoResult:
    """Cosine on [-1, 1] with the factorial stop counter; |result - cos x| <= eps."""
    return _zerone_core(Fraction(x), Fraction(eps), odd=False)


def sin_zerone(x: Fraction, eps: Fraction) -> AlgoResult:
    """Sine on [-1, 1] with the factorial stop counter; |result - sin x| <= eps."""
    return _zerone_core(Fraction(x), Fraction(eps), odd=True)


def cos_unbounded(x: Fraction, eps: Fraction) -> Fraction:
    """Taylor cosine partial sum truncated at the first term with |term| <= eps.

    Accepts any rational argument; this is the golden-data generator used to
    check everything else against.
    """
    x = Fraction(x)
    eps = Fraction(eps)
    if eps <= 0:
        raise NonPositiveEps("eps > 0", f"got {eps}")
    a = Fraction(1)
    s = Fraction(1)
    k = 0
    while abs(a) > eps:
        a = -(a * x * x) / ((k + 1) * (k + 2))
        s += a
        k += 2
    return s


def sin_unbounded(x: Fraction, eps: Fraction) -> Fraction:
    """Sine analog of cos_unbounded: first term x, factor step starts at k = 1."""
    x = Fraction(x)
    eps = Fraction(eps)
    if eps <= 0:
        raise NonPositiveEps("eps > 0", f"got {eps}")
    a = x
    s = x
    k = 1
    while abs(a) > eps:
        a = -(a * x * x) / ((k + 1) * (k + 2))
        s += a
        k += 2
    return s
