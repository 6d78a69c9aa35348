"""Fix-point cosine and sine with their correctness bounds checked at runtime.

The algorithms mirror the exact range-restricted routines in `oracle`, with
two rounding operations per accumulated term (a divide and a multiply by the
argument). The stop counter is scaled by integer grid values only, which the
datatype keeps exact, so the fix-point loop and the exact loop always agree
on the iteration count. `paired_trace_cos`/`paired_trace_sin` run both loops
in lockstep and check the per-iteration gap between the fix-point term and
its exact counterpart against the propagation inequalities: the first gap is
at most (3/4)*step, each iteration contracts the previous gap by at most
((1+step)/2)^2 plus a fresh ((1+step)/2 + 1)*(3/4)*step, and every gap stays
below (3/2)*step/(1-step).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArgOutOfRange,
    BoundViolation,
    EpsOutOfRange,
    FormatMismatch,
    InvariantViolation,
    PreconditionViolation,
    RangeOverflow,
)
from .exact import rat_str, to_decimal
from .fixpoint import FixFormat, FixNum
from .oracle import cos_unbounded, sin_unbounded

ORACLE_SLACK_DIVISOR = 1000  # reference values are computed at eps/1000


@dataclass(frozen=True)
class FixAlgoResult:
    """Fix-point result, its term count n, and the a-priori error cap."""

    value: FixNum
    n: int
    a_priori_bound: Fraction

    def as_dict(self, digits: int = 12) -> dict:
        return {
            "value": str(self.value),
            "value_exact": rat_str(self.value.to_rat()),
            "decimal": to_decimal(self.value.to_rat(), digits),
            "n": self.n,
            "bound": rat_str(self.a_priori_bound),
            "format": str(self.value.fmt),
        }


@dataclass(frozen=True)
class HalfStep:
    """Mid-iteration values after dividing by the odd factor only."""

    tc_half: Fraction
    tcfp_half: Fraction
    delta_half: Fraction


@dataclass(frozen=True)
class TraceRecord:
    """Synchronized snapshot of both loops just before guard check k.

    `delta` is the fix-point term minus the exact (signed) term;
    `delta_bound` is the cumulative propagation cap for this iteration.
    """

    k: int
    tc_exact: Fraction
    cs_exact: Fraction
    tcfp: Fraction
    csfp: Fraction
    delta: Fraction
    delta_bound: Fraction
    ep_exact: Fraction
    epfp: Fraction
    half: HalfStep | None = None

    def as_dict(self) -> dict:
        out = {
            "k": self.k,
            "tc": rat_str(self.tc_exact),
            "cs": rat_str(self.cs_exact),
            "tcfp": rat_str(self.tcfp),
            "csfp": rat_str(self.csfp),
            "delta": rat_str(self.delta),
            "delta_bound": rat_str(self.delta_bound),
            "ep": rat_str(self.ep_exact),
            "epfp": rat_str(self.epfp),
        }
        if self.half is not None:
            out["half"] = {
                "tc_half": rat_str(self.half.tc_half),
                "tcfp_half": rat_str(self.half.tcfp_half),
                "delta_half": rat_str(self.half.delta_half),
            }
        return out


@dataclass(frozen=True)
class PairedTrace:
    records: list[TraceRecord]
    result: FixAlgoResult


def error_bound(n: int, delta: Fraction, eps: Fraction) -> Fraction:
    """A-priori error cap eps + 3*n*delta / (2*(1 - delta)), exactly."""
    delta = Fraction(delta)
    eps = Fraction(eps)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0 < delta < 1:
        raise ValueError("delta must be in (0, 1)")
    if eps <= 0:
        raise ValueError("eps must be positive")
    return eps + Fraction(3 * n, 2) * delta / (1 - delta)


def cos_term_count(eps: Fraction) -> int:
    """Least N >= 1 with (2N)! * eps >= 1."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = 1
    fact = 2
    while fact * eps < 1:
        n += 1
        fact *= (2 * n - 1) * (2 * n)
    return n


def sin_term_count(eps: Fraction) -> int:
    """Least N >= 1 with (2N+1)! * eps >= 1."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = 1
    fact = 6
    while fact * eps < 1:
        n += 1
        fact *= (2 * n) * (2 * n + 1)
    return n


def cos_fixpoint(x: FixNum, eps: FixNum) -> FixAlgoResult:
    """Fix-point cosine for |x| <= 1; the returned value is certified at runtime
    to sit within error_bound(n, step, eps) of the exact-series reference."""
    return _run(x, eps, odd=False, with_trace=False).result


def sin_fixpoint(x: FixNum, eps: FixNum) -> FixAlgoResult:
    """Fix-point sine analog of cos_fixpoint."""
    return _run(x, eps, odd=True, with_trace=False).result


def paired_trace_cos(x: FixNum, eps: FixNum) -> PairedTrace:
    """Run the exact and fix-point cosine loops in lockstep.

    One TraceRecord per accumulated term (iterations 1 .. n-1); every gap
    inequality is checked and a failure raises BoundViolation rather than
    returning a trace that looks healthy.
    """
    return _run(x, eps, odd=False, with_trace=True)


def paired_trace_sin(x: FixNum, eps: FixNum) -> PairedTrace:
    """Sine analog of paired_trace_cos."""
    return _run(x, eps, odd=True, with_trace=True)


def _invariant(condition: bool, where: str, clause: str) -> None:
    if not condition:
        raise InvariantViolation(f"{where}: {clause}")


def _check_preconditions(x: FixNum, eps: FixNum, odd: bool) -> int:
    if not isinstance(x, FixNum) or not isinstance(eps, FixNum):
        raise TypeError("x and eps must be FixNum values")
    if x.fmt != eps.fmt:
        raise FormatMismatch("x and eps use different formats")
    eps_r = eps.to_rat()
    if not 0 < eps_r < 1:
        raise EpsOutOfRange("0 < eps < 1", f"got {eps_r}")
    x_r = x.to_rat()
    if not -1 <= x_r <= 1:
        raise ArgOutOfRange("-1 <= x <= 1", f"got {x_r}")
    n_goal = sin_term_count(eps_r) if odd else cos_term_count(eps_r)
    if n_goal > x.fmt.sup:
        raise PreconditionViolation(
            "stop counter representable",
            f"need integer {n_goal} within [inf, sup] of {x.fmt}")
    sup_needed = 2 * n_goal * (2 * n_goal + 1 if odd else 2 * n_goal - 1)
    if x.fmt.sup < sup_needed:
        raise PreconditionViolation(
            "sup large enough for counter scaling",
            f"need sup >= {sup_needed}, format {x.fmt}")
    return n_goal


def _run(x: FixNum, eps: FixNum, odd: bool, with_trace: bool) -> PairedTrace:
    name = "sin_fixpoint" if odd else "cos_fixpoint"
    n_goal = _check_preconditions(x, eps, odd)
    fmt = x.fmt
    delta = fmt.step
    x_r = x.to_rat()
    eps_r = eps.to_rat()
    shift = 1 if odd else 0
    one = fmt.from_int(1)
    q = (1 + delta) / 2
    gap_cap = Fraction(3, 2) * delta / (1 - delta)
    first_gap_cap = Fraction(3, 4) * delta

    k = 1
    try:
        xx = x * x
        if odd:
            accfp = x
            tcfp = -((xx * x) / fmt.from_int(6))
            epfp = fmt.from_int(6) * eps
        else:
            accfp = one
            tcfp = -(xx / fmt.from_int(2))
            epfp = fmt.from_int(2) * eps
    except RangeOverflow as exc:
        exc.iteration = k
        raise

    # exact twin, with the term carried signed so the gap is a plain difference
    acc_e = x_r if odd else Fraction(1)
    tc_e = -(x_r * x_r) * (x_r if odd else 1) / (6 if odd else 2)
    ep_e = (-6 if odd else -2) * eps_r

    records: list[TraceRecord] = []
    while True:
        fact = math.factorial(2 * k + shift)
        _invariant(epfp.to_rat() == fact * eps_r, name,
                   "counter stays an exact factorial multiple of eps")
        _invariant(ep_e == (1 if k % 2 == 0 else -1) * fact * eps_r, name,
                   "exact counter matches its invariant")
        _invariant(epfp.to_rat() == abs(ep_e), name,
                   "fix-point and exact counters agree")
        guard = epfp < one
        _invariant(guard == (abs(ep_e) < 1), name, "loop guards agree (lockstep)")
        if not guard:
            break
        head = (k, tc_e, acc_e, tcfp.to_rat(), accfp.to_rat(),
                tcfp.to_rat() - tc_e, gap_cap * (1 - q ** (2 * k - 1)),
                ep_e, epfp.to_rat())
        try:
            accfp = accfp + tcfp
            acc_e = acc_e + tc_e
            k += 1
            fac1 = 2 * k + shift - 1   # 2k-1 for cosine, 2k for sine
            fac2 = 2 * k + shift       # 2k for cosine, 2k+1 for sine
            tcfp_half = tcfp * (x / fmt.from_int(fac1))
            tc_half = tc_e * x_r / fac1
            tcfp = (-tcfp_half) * (x / fmt.from_int(fac2))
            tc_e = -tc_half * x_r / fac2
            epfp = fmt.from_int(fac2) * (fmt.from_int(fac1) * epfp)
            ep_e = -ep_e * fac1 * fac2
        except RangeOverflow as exc:
            exc.iteration = k
            raise
        if with_trace:
            half = HalfStep(tc_half, tcfp_half.to_rat(), tcfp_half.to_rat() - tc_half)
            records.append(TraceRecord(*head, half=half))

    n = k
    _invariant(n == n_goal, name, "final n equals the minimal stop count")
    bound = error_bound(n, delta, eps_r)
    slack = eps_r / ORACLE_SLACK_DIVISOR
    reference_fn = sin_unbounded if odd else cos_unbounded
    reference = reference_fn(x_r, slack)
    observed = abs(accfp.to_rat() - reference)
    if observed > bound + slack:
        raise BoundViolation("headline", detail=(
            f"{name}: observed {to_decimal(observed, 12)} > cap "
            f"{to_decimal(bound + slack, 12)} for x={rat_str(x_r)} eps={rat_str(eps_r)}"))
    result = FixAlgoResult(accfp, n, bound)
    if with_trace:
        _check_trace(records, n, delta, q, gap_cap, first_gap_cap,
                     observed, eps_r, slack)
    return PairedTrace(records, result)


def _check_trace(records: list[TraceRecord], n: int, delta: Fraction, q: Fraction,
                 gap_cap: Fraction, first_gap_cap: Fraction,
                 observed: Fraction, eps_r: Fraction, slack: Fraction) -> None:
    if len(records) != n - 1:
        raise InvariantViolation(
            f"trace holds {len(records)} records, expected n-1 = {n - 1}")
    if records and abs(records[0].delta) > first_gap_cap:
        raise BoundViolation("first-gap", k=1, detail=f"{records[0].delta}")
    for rec in records:
        if abs(rec.delta) > rec.delta_bound:
            raise BoundViolation("gap-chain", k=rec.k, detail=f"{rec.delta}")
        if abs(rec.delta) > gap_cap:
            raise BoundViolation("gap-cap", k=rec.k, detail=f"{rec.delta}")
        if rec.half is not None:
            if abs(rec.half.delta_half) > q * abs(rec.delta) + first_gap_cap:
                raise BoundViolation("half-gap", k=rec.k)
    for prev, cur in zip(records, records[1:]):
        if abs(cur.delta) > q * q * abs(prev.delta) + (q + 1) * first_gap_cap:
            raise BoundViolation("gap-step", k=cur.k)
        if prev.half is not None:
            if abs(cur.delta) > q * abs(prev.half.delta_half) + first_gap_cap:
                raise BoundViolation("half-gap-step", k=cur.k)
    if n >= 2:
        chain = first_gap_cap + (n - 2) * gap_cap + eps_r
        if observed > chain + slack:
            raise BoundViolation("closing-chain", detail=(
                f"observed {to_decimal(observed, 12)} > "
                f"{to_decimal(chain + slack, 12)}"))


TRACE_CSV_HEADER = ["k", "tc", "cs", "tcfp", "csfp",
                    "delta", "delta_bound", "ep", "epfp"]


def trace_to_csv(records: list[TraceRecord]) -> str:
    """Render records as CSV with rationals in p/q form."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_CSV_HEADER)
    for rec in records:
        row = rec.as_dict()
        writer.writerow([row[column] for column in TRACE_CSV_HEADER])
    return buffer.getvalue()


def trace_to_json_obj(records: list[TraceRecord]) -> list[dict]:
    """JSON mirror of the CSV trace, half-step values included."""
    return [rec.as_dict() for rec in records]
