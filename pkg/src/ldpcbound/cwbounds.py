"""Bounds on the asymptotic rate of q-ary constant-weight codes.

A constant-weight rate function ``R_CW(q, omega, delta)`` gives, for codes
of length N whose words all have weight ``omega N`` and pairwise distance at
least ``delta N``, the exponent ``(1/N) log_q |code|``. The distance bounds
accept any such function through :class:`CwRateBound`.

Two upper bounds are registered under the names used on the command line:

``zero-floor``
    ``h_q(omega)`` (the whole weight sphere) for ``omega > delta/2``,
    0 below. The weakest admissible bound.
``composite``
    The minimum of the sphere size, the Singleton bound ``1 - delta`` and
    the q-ary Elias-Bassalygo bound ``1 - h_q(J_q(delta))``, with 0 in the
    Plotkin range ``delta >= (q-1)/q``.

Two more functions bracket an unknown upper bound from below. They are
*not* upper bounds and must not be used to claim a bound on a code:

``zero``
    Constant 0.
``cw-gv``
    The Gilbert-Varshamov rate achievable by constant-weight codes. Any
    true upper bound is at least this large.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .entropy import q_ary_entropy
from .errors import DomainError


@dataclass(frozen=True)
class CwRateBound:
    name: str
    evaluate: Callable
    upper_bound: bool = True

    def __call__(self, q, omega, delta):
        scalar = np.ndim(omega) == 0
        omega = np.atleast_1d(np.asarray(omega, dtype=float))
        _check_args(q, omega, delta)
        out = np.asarray(self.evaluate(q, omega, float(delta)), dtype=float)
        out = np.where(omega <= delta / 2, 0.0, out)
        return float(out[0]) if scalar else out


def _check_args(q, omega, delta):
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if np.any(omega < 0) or np.any(omega > 1):
        raise DomainError("omega must lie in [0, 1]")
    if not 0 <= delta <= 1:
        raise DomainError(f"delta must lie in [0, 1], got {delta}")


def johnson_radius(q, delta):
    """``J_q(delta) = theta (1 - sqrt(1 - delta/theta))`` with ``theta = (q-1)/q``."""
    theta = (q - 1) / q
    if delta >= theta:
        return theta
    return theta * (1 - math.sqrt(1 - delta / theta))


def _zero_floor(q, omega, delta):
    return q_ary_entropy(omega, q)


def _composite(q, omega, delta):
    theta = (q - 1) / q
    if delta >= theta:
        return np.zeros_like(omega)
    elias = 1 - q_ary_entropy(johnson_radius(q, delta), q)
    cap = max(0.0, min(1 - delta, elias))
    return np.minimum(q_ary_entropy(omega, q), cap)


def _zero(q, omega, delta):
    return np.zeros_like(omega)


def sphere_ball_exponent(q, omega, delta):
    """``(1/N) log_q`` of the number of weight-``omega N`` words within
    distance ``delta N`` of a fixed weight-``omega N`` word (N -> oo)."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    h = q_ary_entropy(omega, q)
    return kernels.sphere_ball_exponent(q, omega, float(delta), h)


def _cw_gv(q, omega, delta):
    return np.maximum(0.0, q_ary_entropy(omega, q) - sphere_ball_exponent(q, omega, delta))


def cw_zero_floor(q, omega, delta):
    return REGISTRY["zero-floor"](q, omega, delta)


def cw_composite(q, omega, delta):
    return REGISTRY["composite"](q, omega, delta)


def cw_gv(q, omega, delta):
    return REGISTRY["cw-gv"](q, omega, delta)


REGISTRY = {
    "zero-floor": CwRateBound("zero-floor", _zero_floor),
    "composite": CwRateBound("composite", _composite),
    "zero": CwRateBound("zero", _zero, upper_bound=False),
    "cw-gv": CwRateBound("cw-gv", _cw_gv, upper_bound=False),
}


def get_cw_bound(name):
    if isinstance(name, CwRateBound):
        return name
    try:
        return REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown constant-weight bound {name!r}; choose from {sorted(REGISTRY)}") from None
