"""Strict binary32 Taylor cosine and the scan harness that exposes its blow-up.

Every arithmetic step is performed on numpy float32 scalars, so each
intermediate result rounds to IEEE binary32 (round to nearest, ties to even)
with no fused multiply-add and no wider intermediates. The scan accumulates
its abscissa in binary32 too, drifting exactly the way the original
single-precision loop does. Two runs produce bit-identical output.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import IterationCapExceeded, NonPositiveEps

F32 = np.float32

_ONE = F32(1.0)
_TWO = F32(2.0)

DEFAULT_ITERATION_CAP = 1_000_000
ITERATION_CAP_ENV = "TRIGCHECK_ITER_CAP"


def iteration_cap() -> int:
    """Default cap, overridable through the environment."""
    raw = os.environ.get(ITERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ITERATION_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError(f"{ITERATION_CAP_ENV} must be positive, got {raw!r}")
    return cap


def f32(value: float | str | int) -> np.float32:
    """Round a host value to binary32 once, up front."""
    return F32(value)


def cos_code_in_c(x: np.float32, eps: np.float32, cap: int | None = None) -> np.float32:
    """Series cosine exactly as a compiled C float loop would run it.

    The signed term update is evaluated left to right,
    stc = -stc * x * x / (dn * (dn + 1)), each product and the quotient
    rounding to binary32 before the next step; then cs += stc and dn += 2,
    looping while |stc| > eps.
    """
    x = F32(x)
    eps = F32(eps)
    if not eps > 0:
        raise NonPositiveEps("eps > 0", f"got {eps}")
    if cap is None:
        cap = iteration_cap()
    cs = _ONE
    stc = _ONE
    dn = _ONE
    count = 0
    while np.abs(stc) > eps:
        if count >= cap:
            raise IterationCapExceeded(f"no convergence within {cap} iterations")
        stc = -stc * x * x / (dn * (dn + _ONE))
        cs = cs + stc
        dn = dn + _TWO
        count += 1
    return cs


def scan_table(min_x: np.float32, max_x: np.float32, step: np.float32,
               eps: np.float32, cap: int | None = None) -> list[tuple[np.float32, np.float32]]:
    """Evaluate cos_code_in_c over an inclusive binary32-accumulated grid.

    Returns (x, value) rows; x advances by binary32 addition so the printed
    abscissas drift the same way the original test harness drifted.
    """
    min_x = F32(min_x)
    max_x = F32(max_x)
    step = F32(step)
    if not step > 0:
        raise ValueError("step must be positive")
    if not min_x <= max_x:
        raise ValueError("min must not exceed max")
    eps = F32(eps)
    rows: list[tuple[np.float32, np.float32]] = []
    x = min_x
    while x <= max_x:
        rows.append((x, cos_code_in_c(x, eps, cap=cap)))
        x = x + step
    return rows
