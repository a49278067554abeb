"""One-dimensional search routines used by the bound computations."""

import math

import numpy as np

from .errors import DomainError

GRID_POINTS = 4096
_INVPHI = (math.sqrt(5) - 1) / 2


def maximize_over_omega(objective, lo, hi, tol=1e-9, grid=GRID_POINTS, trace=False):
    """Global maximum of a vectorized objective on ``[lo, hi]``.

    The objective is sampled on a uniform grid of ``grid`` points (NaN
    samples are ignored); the best sample, the smallest such point on ties,
    is then refined by golden-section search over its two neighbouring grid
    cells until the bracket is narrower than ``tol``.

    Returns ``(omega_star, value)``, or ``(omega_star, value, samples)``
    with ``trace=True``.
    """
    if not lo < hi:
        raise DomainError(f"empty search interval [{lo}, {hi}]")
    xs = np.linspace(lo, hi, grid)
    ys = np.asarray(objective(xs), dtype=float)
    valid = ~np.isnan(ys)
    if not valid.any():
        raise DomainError("objective is NaN on the whole grid")
    ys_masked = np.where(valid, ys, -np.inf)
    k = int(np.argmax(ys_masked))
    best_x, best_y = float(xs[k]), float(ys_masked[k])
    if math.isfinite(best_y):
        a = float(xs[max(k - 1, 0)])
        b = float(xs[min(k + 1, grid - 1)])
        x, y = _golden(objective, a, b, tol)
        if y > best_y:
            best_x, best_y = x, y
    if trace:
        return best_x, best_y, list(zip(xs.tolist(), ys.tolist()))
    return best_x, best_y


def _golden(objective, a, b, tol):
    def f(x):
        y = float(np.asarray(objective(np.array([x])), dtype=float)[0])
        return -math.inf if math.isnan(y) else y

    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def bisect_last_true(pred, lo, hi, tol):
    """Bisection for the boundary of a predicate that is true at ``lo`` and
    false at ``hi``; returns the last point known to satisfy it."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo
