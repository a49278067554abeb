"""Q-ary entropy functions.

All functions evaluate ``log_Q`` as ``ln(x) / ln(Q)`` and implement the
``0 * log 0 = 0`` limit explicitly, so endpoints never produce NaN.
"""

import math

import numpy as np

from .errors import DomainError

#: inputs this close outside [0, 1] are snapped to the boundary
CLAMP_TOL = 1e-12


def _check_base(Q):
    if Q < 2:
        raise DomainError(f"entropy base Q must be >= 2, got {Q}")


def _clamp_unit(x):
    """Snap values within CLAMP_TOL of [0, 1] onto the interval, reject the rest."""
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)):
        raise DomainError("entropy argument is NaN")
    if np.any(x < -CLAMP_TOL) or np.any(x > 1 + CLAMP_TOL):
        raise DomainError(f"entropy argument outside [0, 1]: {x.min()}..{x.max()}")
    return np.clip(x, 0.0, 1.0)


def q_ary_entropy(x, Q):
    """Q-ary entropy ``h_Q(x)``.

    ``h_Q(x) = -x log_Q x - (1-x) log_Q (1-x) + x log_Q (Q-1)``.

    Accepts a scalar or an array; returns the same shape (a Python float
    for scalar input). The maximum value 1 is attained at ``x = (Q-1)/Q``.
    """
    _check_base(Q)
    scalar = np.ndim(x) == 0
    x = _clamp_unit(x)
    out = np.zeros_like(x)
    inner = (x > 0.0) & (x < 1.0)
    xi = x[inner]
    out[inner] = -xi * np.log(xi) - (1.0 - xi) * np.log1p(-xi)
    out = out + x * math.log(Q - 1)
    out = out / math.log(Q)
    return float(out) if scalar else out


def entropy_of_distribution(probs, Q):
    """Entropy ``-sum p_i log_Q p_i`` of a discrete distribution."""
    _check_base(Q)
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise DomainError("probabilities must be a non-empty 1-d sequence")
    if np.any(p < 0):
        raise DomainError("negative probability")
    if abs(p.sum() - 1.0) > 1e-12:
        raise DomainError(f"probabilities sum to {p.sum()!r}, not 1")
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum() / math.log(Q))


def min_entropy_lower_bound(p_star, t, Q):
    """Lower bound ``-log_Q(p_star)`` on the entropy of a variable taking
    ``t`` values, each with probability at most ``p_star``."""
    _check_base(Q)
    if t < 1:
        raise DomainError("t must be a positive integer")
    if not 0 < p_star <= 1:
        raise DomainError(f"p_star must lie in (0, 1], got {p_star}")
    # relative slack so that p_star = 1/t computed in floating point is accepted
    if p_star < (1.0 / t) * (1 - 1e-12):
        raise DomainError(f"p_star={p_star} < 1/t={1.0 / t}: no such distribution exists")
    return max(0.0, -math.log(p_star) / math.log(Q))
