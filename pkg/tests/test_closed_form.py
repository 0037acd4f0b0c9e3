import math

import numpy as np
import pytest

from fermitangle.closed_form import (
    CURVES,
    TWO_TANGLE_ZERO_COS2,
    CurveKind,
    cross_validate,
    find_two_tangle_zero,
    w_one_tangle_closed,
    w_pi_tangle_closed,
    w_two_tangle_closed,
    w_two_tangle_unclamped,
)
from fermitangle.errors import OutOfRange
from fermitangle.fock import make_w_state
from fermitangle.measures import equal_params, full_report
from fermitangle.rindler import R_MAX

R_STAR = math.acos(math.sqrt(2 - math.sqrt(2)))


def test_one_tangle_endpoints():
    assert w_one_tangle_closed(0) == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-15)
    assert w_one_tangle_closed(0) == pytest.approx(0.9428, abs=5e-5)
    # cos^2 r = 1/2 gives (sqrt(17) - 3) / 12
    assert w_one_tangle_closed(R_MAX) == pytest.approx((math.sqrt(17) - 3) / 12, abs=1e-15)
    assert w_one_tangle_closed(R_MAX) == pytest.approx(0.09359, abs=1e-5)


def test_one_tangle_pi4_eigen_oracle():
    # only negative eigenvalue of the PT at pi/4 is (3 - sqrt(17)) / 24
    from fermitangle.measures import partial_transpose, region_one_density
    from fermitangle.oracle import bisection_eigenvalues
    from fermitangle.fock import Party

    d = region_one_density(make_w_state(), equal_params(R_MAX))
    ev = bisection_eigenvalues(partial_transpose(d, [Party.A]))
    neg = ev[ev < -1e-12]
    assert len(neg) == 1
    assert neg[0] == pytest.approx((3 - math.sqrt(17)) / 24, abs=1e-13)
    numeric = full_report(make_w_state(), equal_params(R_MAX)).one_tangles[Party.A]
    assert abs(numeric - w_one_tangle_closed(R_MAX)) < 1e-10


def test_printed_pi4_value_not_reproduced():
    assert abs(w_one_tangle_closed(R_MAX) - 0.0971) > 1e-3


def test_two_tangle_values():
    assert w_two_tangle_closed(0) == pytest.approx((math.sqrt(5) - 1) / 3, abs=1e-15)
    assert w_two_tangle_closed(0) == pytest.approx(0.4120, abs=5e-5)
    assert w_two_tangle_unclamped(R_MAX) < 0
    assert w_two_tangle_closed(R_MAX) == 0.0


def test_zero_crossing():
    r = find_two_tangle_zero()
    assert abs(r - R_STAR) < 1e-10
    assert float(r) == pytest.approx(0.6991851645, abs=1e-10)
    assert abs(math.cos(r) ** 2 - TWO_TANGLE_ZERO_COS2) < 1e-10
    w = make_w_state()
    assert full_report(w, equal_params(r - 1e-3)).two("A", "B") > 0
    assert full_report(w, equal_params(r + 1e-3)).two("A", "B") == 0


def test_out_of_range():
    for f in (w_one_tangle_closed, w_two_tangle_closed, w_pi_tangle_closed):
        with pytest.raises(OutOfRange):
            f(-0.1)
        with pytest.raises(OutOfRange):
            f(1.0)


def test_pi_tangle_combination():
    for r in (0.0, 0.3, 0.75):
        n1, n2 = w_one_tangle_closed(r), w_two_tangle_closed(r)
        assert w_pi_tangle_closed(r) == pytest.approx(n1**2 - 2 * n2**2, abs=1e-15)
        rep = full_report(make_w_state(), equal_params(r))
        assert rep.pi_tangle == pytest.approx(w_pi_tangle_closed(r), abs=1e-10)


def test_curves_finite_and_monotone():
    grid = np.linspace(0, R_MAX, 200)
    for kind, curve in CURVES.items():
        vals = np.array([curve(r) for r in grid])
        assert np.all(np.isfinite(vals))
        assert np.all(np.diff(vals) <= 1e-12), kind
    one = np.array([CURVES[CurveKind.W_ONE_TANGLE](r) for r in grid])
    assert np.all(np.diff(one) < 0)


def test_cross_validate():
    table = cross_validate(np.linspace(0, R_MAX, 50))
    assert len(table.rows) == 50
    assert table.max_discrepancy < 1e-9
    first = cross_validate([0.0]).rows[0]
    assert first.one_numeric == pytest.approx(0.9428, abs=5e-5)
    assert first.two_numeric == pytest.approx(0.4120, abs=5e-5)
    last = cross_validate([R_MAX]).rows[0]
    assert last.one_closed == pytest.approx(0.09359, abs=1e-5)
    assert last.one_numeric == pytest.approx(0.09359, abs=1e-5)
