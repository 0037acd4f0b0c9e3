"""Analytic W-state tangles at equal acceleration, and their validation.

With ``c = cos^2 r``:

* one-tangle ``-2 (c/2 - c^2/2 - (c/6) sqrt(17 c^2 - 18 c + 9))``
* two-tangle ``-2 (c^2/3 - 2c/3 - sqrt(20 c^2 - 24 c + 9)/6 + 1/2)``,
  clamped at zero past its root ``c = 2 - sqrt(2)``
* pi-tangle ``(3 N1^2 - 6 N2^2) / 3``

The numeric eigen-decomposition is the ground truth; these formulas are
independent validators of it.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import OutOfRange
from .measures import equal_params, full_report
from .fock import Party, make_w_state
from .rindler import R_MAX, RindlerParameter

#: root of the unclamped two-tangle, ``cos^2 r* = 2 - sqrt(2)``
TWO_TANGLE_ZERO_COS2 = 2.0 - math.sqrt(2.0)


def _cos2(r) -> float:
    r = float(r)
    if not (0.0 <= r <= R_MAX):
        raise OutOfRange(f"r={r!r} outside [0, pi/4]")
    return math.cos(r) ** 2


def w_one_tangle_closed(r) -> float:
    c = _cos2(r)
    return -2.0 * (0.5 * c - 0.5 * c * c - c / 6.0 * math.sqrt(17 * c * c - 18 * c + 9))


def w_two_tangle_unclamped(r) -> float:
    c = _cos2(r)
    return -2.0 * (c * c / 3.0 - 2.0 * c / 3.0 - math.sqrt(20 * c * c - 24 * c + 9) / 6.0 + 0.5)


def w_two_tangle_closed(r) -> float:
    return max(w_two_tangle_unclamped(r), 0.0)


def w_pi_tangle_closed(r) -> float:
    n1 = w_one_tangle_closed(r)
    n2 = w_two_tangle_closed(r)
    return (3 * n1**2 - 6 * n2**2) / 3.0


class CurveKind(enum.Enum):
    W_ONE_TANGLE = "w_one_tangle"
    W_TWO_TANGLE = "w_two_tangle"
    W_PI_TANGLE = "w_pi_tangle"


@dataclass(frozen=True)
class ClosedFormCurve:
    kind: CurveKind
    evaluator: Callable[[float], float]

    def __call__(self, r) -> float:
        return self.evaluator(r)


CURVES = {
    CurveKind.W_ONE_TANGLE: ClosedFormCurve(CurveKind.W_ONE_TANGLE, w_one_tangle_closed),
    CurveKind.W_TWO_TANGLE: ClosedFormCurve(CurveKind.W_TWO_TANGLE, w_two_tangle_closed),
    CurveKind.W_PI_TANGLE: ClosedFormCurve(CurveKind.W_PI_TANGLE, w_pi_tangle_closed),
}


def find_two_tangle_zero(tol: float = 1e-12) -> RindlerParameter:
    """Bisect the unclamped two-tangle on ``[0, pi/4]``."""
    lo, hi = 0.0, R_MAX
    f_lo = w_two_tangle_unclamped(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = w_two_tangle_unclamped(mid)
        if f_mid == 0.0:
            return RindlerParameter(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return RindlerParameter(0.5 * (lo + hi))


@dataclass(frozen=True)
class ValidationRow:
    r: float
    one_closed: float
    one_numeric: float
    two_closed: float
    two_numeric: float

    @property
    def one_diff(self) -> float:
        return abs(self.one_closed - self.one_numeric)

    @property
    def two_diff(self) -> float:
        return abs(self.two_closed - self.two_numeric)


@dataclass(frozen=True)
class ValidationTable:
    rows: tuple[ValidationRow, ...]

    @property
    def max_discrepancy(self) -> float:
        return max((max(row.one_diff, row.two_diff) for row in self.rows), default=0.0)


def cross_validate(grid: Sequence[float]) -> ValidationTable:
    """Closed form vs numeric pipeline at every ``r`` in ``grid``.

    Numeric values are taken from the A-focus one-tangle and the AB
    two-tangle; the W scenario makes all foci equal.
    """
    w = make_w_state()
    rows = []
    for r in grid:
        r = RindlerParameter(r)
        rep = full_report(w, equal_params(r))
        rows.append(
            ValidationRow(
                float(r),
                w_one_tangle_closed(r),
                rep.one_tangles[Party.A],
                w_two_tangle_closed(r),
                rep.two("A", "B"),
            )
        )
    return ValidationTable(tuple(rows))
