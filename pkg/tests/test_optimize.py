import math

import pytest

from tabounds.optimize import EvaluationError, maximize_scalar

SCAN_POINTS = 129


def test_quadratic_argmax():
    res = maximize_scalar(lambda x: -((x - 0.3) ** 2), 0.0, 1.0, tol=1e-9)
    assert abs(res.argmax - 0.3) < 1e-8
    assert res.value == pytest.approx(0.0, abs=1e-16)


def test_plateau_constant():
    res = maximize_scalar(lambda x: 2.5, 0.0, 1.0, tol=1e-9)
    assert res.value == 2.5
    assert 0.0 <= res.argmax <= 1.0


def test_value_equals_objective_at_argmax():
    f = lambda x: math.sin(5.0 * x)
    res = maximize_scalar(f, 0.0, 2.0, tol=1e-10)
    assert res.value == f(res.argmax)


def test_value_at_least_scan_max():
    f = lambda x: math.sin(17.0 * x) + 0.3 * x
    res = maximize_scalar(f, 0.0, 3.0, tol=1e-9)
    scan = max(f(k * 3.0 / (SCAN_POINTS - 1)) for k in range(SCAN_POINTS))
    assert res.value >= scan


def test_boundary_maximum():
    res = maximize_scalar(lambda x: x, 0.0, 1.0, tol=1e-9)
    assert res.argmax == 1.0
    assert res.value == 1.0


def test_evaluation_count_reported():
    calls = []
    res = maximize_scalar(lambda x: calls.append(x) or -x * x, -1.0, 1.0, tol=1e-6)
    assert res.evaluations == len(calls)


def test_non_finite_objective_carries_abscissa():
    def f(x):
        return float("nan") if x > 0.75 else x

    with pytest.raises(EvaluationError) as err:
        maximize_scalar(f, 0.0, 1.0, tol=1e-9)
    assert err.value.x > 0.75


def test_deterministic_bit_for_bit():
    f = lambda x: -((x - 1.0 / 3.0) ** 2) + 0.1 * math.cos(9.0 * x)
    a = maximize_scalar(f, 0.0, 1.0, tol=1e-11)
    b = maximize_scalar(f, 0.0, 1.0, tol=1e-11)
    assert (a.argmax, a.value, a.evaluations) == (b.argmax, b.value, b.evaluations)


def test_rejects_bad_interval_and_tol():
    with pytest.raises(ValueError):
        maximize_scalar(lambda x: x, 1.0, 0.0)
    with pytest.raises(ValueError):
        maximize_scalar(lambda x: x, 0.0, 1.0, tol=0.0)


def test_concave_argmax_within_tol():
    for target in (0.1234567, 0.5, 0.987):
        res = maximize_scalar(lambda x, t=target: -abs(x - t) ** 1.5, 0.0, 1.0, tol=1e-10)
        assert abs(res.argmax - target) < 1e-9
