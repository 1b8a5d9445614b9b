"""Deterministic one-dimensional maximization on a closed interval.

A coarse 129-point scan picks a bracketing triple, then golden-section
refinement narrows it.  The scan guards against objectives that sit on a
flat zero plateau over part of the interval, which the capacity curves do
whenever they are clamped at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

SCAN_POINTS = 129
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class EvaluationError(ValueError):
    """Objective returned a non-finite value; carries the offending abscissa."""

    def __init__(self, x: float, value):
        super().__init__(f"objective returned non-finite value {value!r} at x = {x!r}")
        self.x = x
        self.value = value


@dataclass(frozen=True)
class ScalarMaxResult:
    argmax: float
    value: float
    evaluations: int


def maximize_scalar(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-9
) -> ScalarMaxResult:
    """Maximize ``f`` over [lo, hi]; exact for the best point ever evaluated.

    For a strictly concave objective the returned argmax is within ``tol``
    of the true maximizer.  The result never falls below the best value of
    the initial scan, and identical inputs give bit-identical results.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")

    best_x = lo
    best_f = -math.inf
    count = 0

    def ev(x: float) -> float:
        nonlocal best_x, best_f, count
        count += 1
        y = float(f(x))
        if not math.isfinite(y):
            raise EvaluationError(x, y)
        if y > best_f:
            best_x, best_f = x, y
        return y

    span = hi - lo
    xs = [lo + k * span / (SCAN_POINTS - 1) for k in range(SCAN_POINTS)]
    ys = [ev(x) for x in xs]
    i = max(range(SCAN_POINTS), key=ys.__getitem__)  # first index on ties

    a = xs[i - 1] if i > 0 else xs[0]
    b = xs[i + 1] if i < SCAN_POINTS - 1 else xs[-1]
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = ev(c)
    fd = ev(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = ev(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = ev(d)

    return ScalarMaxResult(argmax=best_x, value=best_f, evaluations=count)
