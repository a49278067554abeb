"""Upper bounds on the relative minimum distance of LDPC codes over GF(q).

The syndrome of a uniformly random weight-``omega N`` word has entropy at
least ``N (h_q(omega) - R_CW)`` (a syndrome class holds at most one
constant-weight code) and at most the sum of the check-node syndrome
entropies. Comparing the two for every ``omega`` in ``[delta/2, 1]`` bounds
the rate:

* generalized codes with an ``[n0, k0]`` constituent (``m0 = n0 - k0``)::

    R <= 1 - max (h_q(w) - R_CW(q, w, delta)) / h_{q^m0}(1 - p0(w))

  where ``p0(w)`` is the probability that one check sees a codeword;

* irregular LDPC codes with row degree polynomial ``rho``::

    R <= 1 - max (h_q(w) - R_CW) / h_q(theta (1 - rho(1 - w/theta)))

  with ``theta = (q-1)/q``.

All bounds are asymptotic (N -> infinity); vanishing terms are dropped.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .cwbounds import CwRateBound, get_cw_bound
from .entropy import q_ary_entropy
from .enumerators import ConstituentSpec
from .errors import DegenerateDenominatorError, DomainError, NoSolutionError
from .gf import is_prime_power
from .search import GRID_POINTS, bisect_last_true, maximize_over_omega

DEN_FLOOR = 1e-15
NUM_FLOOR = 1e-12
#: smallest distance probed when checking that a rate is reachable at all
DELTA_MIN = 1e-12


@dataclass(frozen=True)
class RowDegreeDistribution:
    """Fractions ``rho_i`` of parity-check rows of weight ``i``."""

    entries: tuple

    def __init__(self, entries):
        items = dict(entries).items() if not isinstance(entries, tuple) else entries
        items = tuple(sorted((int(i), float(f)) for i, f in items))
        object.__setattr__(self, "entries", items)
        if not items:
            raise DomainError("row degree distribution is empty")
        for i, f in items:
            if i < 2:
                raise DomainError(f"row degree {i} < 2")
            if not 0 < f <= 1:
                raise DomainError(f"fraction for degree {i} must lie in (0, 1], got {f}")
        if len({i for i, _ in items}) != len(items):
            raise DomainError("duplicate degree in row degree distribution")
        if abs(sum(f for _, f in items) - 1) > 1e-12:
            raise DomainError(f"fractions sum to {sum(f for _, f in items)!r}, not 1")

    @classmethod
    def regular(cls, n0):
        return cls({n0: 1.0})

    @classmethod
    def parse(cls, text, tol=1e-9):
        """Parse ``"i:frac,i:frac,..."``; fractions must sum to 1 within ``tol``
        and are then renormalised exactly."""
        pairs = {}
        try:
            for part in text.split(","):
                deg, frac = part.split(":")
                deg = int(deg)
                if deg in pairs:
                    raise DomainError(f"degree {deg} listed twice")
                pairs[deg] = float(frac)
        except ValueError:
            raise DomainError(f"cannot parse row degree distribution {text!r}; expected i:frac,i:frac,...") from None
        total = sum(pairs.values())
        if abs(total - 1) > tol:
            raise DomainError(f"row degree fractions sum to {total}, not 1")
        return cls({i: f / total for i, f in pairs.items()})

    @property
    def degrees(self):
        return {i: f for i, f in self.entries}

    @property
    def r_min(self):
        return self.entries[0][0]

    @property
    def r_max(self):
        return self.entries[-1][0]

    @property
    def mean_degree(self):
        return math.fsum(i * f for i, f in self.entries)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return sum(f * x**i for i, f in self.entries)

    def one_minus(self, x):
        """``1 - rho(x)`` without cancellation for ``x`` near 1."""
        x = np.asarray(x, dtype=float)
        return sum(f * one_minus_power(x, i) for i, f in self.entries)

    def __str__(self):
        return ",".join(f"{i}:{f:g}" for i, f in self.entries)


def one_minus_power(x, e):
    """``1 - x**e`` for ``x`` in ``[-1, 1]``.

    For a non-integer exponent and negative ``x`` the power is the real part
    of the principal branch, ``|x|**e cos(pi e)``, which agrees with the
    integer power whenever ``e`` is an integer.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    pos = x > 0
    with np.errstate(divide="ignore"):
        out[pos] = -np.expm1(e * np.log(x[pos]))
    neg = ~pos
    if float(e).is_integer():
        out[neg] = 1 - x[neg] ** int(e)
    else:
        out[neg] = 1 - np.abs(x[neg]) ** e * math.cos(math.pi * e)
    return out


@dataclass
class BoundResult:
    """Outcome of one bound evaluation.

    ``rate_bound`` is ``1 - objective(omega_star)`` clamped to [0, 1];
    ``objective_trace`` holds the grid samples when requested.
    """

    rate_bound: float
    omega_star: float
    delta: float
    objective: float
    objective_trace: list = field(default=None, repr=False)


@lru_cache(maxsize=256)
def _log_coeffs(coeffs):
    return np.array([math.log(a) if a else -np.inf for a in coeffs])


def _binomial_mixture(log_coeffs, q, omega):
    """``sum_i c_i w^i (1-w)^(n0-i) (q-1)^-i`` summed in the log domain."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    return kernels.binomial_mixture(log_coeffs, math.log(q - 1), omega)


def p0_regular(q, spec, omega):
    """Probability that one check node sees a codeword of its constituent
    code when the length-N word is uniform over weight ``omega N``, N -> oo.

    Evaluated in the expanded form ``sum_i A(i) w^i (1-w)^(n0-i) (q-1)^-i``,
    which stays finite at ``w = 1``.
    """
    scalar = np.ndim(omega) == 0
    out = _binomial_mixture(_log_coeffs(spec.enumerator.coeffs), q, omega)
    out = np.clip(out, 0.0, 1.0)
    return float(out[0]) if scalar else out


@lru_cache(maxsize=256)
def _log_complement(enumerator, q):
    return _log_coeffs(enumerator.complement_coeffs(q))


def p0_complement(q, spec, omega):
    """``1 - p0`` summed directly over non-codeword weight classes (no cancellation)."""
    scalar = np.ndim(omega) == 0
    out = np.clip(_binomial_mixture(_log_complement(spec.enumerator, q), q, omega), 0.0, 1.0)
    return float(out[0]) if scalar else out


def _resolve_cw(cw):
    if isinstance(cw, (str, CwRateBound)):
        return get_cw_bound(cw)
    if callable(cw):
        return cw
    raise DomainError(f"not a constant-weight bound: {cw!r}")


def _bound_from_denominator(q, den_fn, delta, cw, trace=False):
    if not 0 < delta <= 1:
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    cw = _resolve_cw(cw)
    lo, hi = delta / 2, 1.0

    def objective(omega):
        num = q_ary_entropy(omega, q) - cw(q, omega, delta)
        den = den_fn(omega)
        with np.errstate(divide="ignore", invalid="ignore"):
            val = num / den
        tiny = den < DEN_FLOOR
        return np.where(tiny, np.where(num > NUM_FLOOR, np.inf, np.nan), val)

    degenerate = DegenerateDenominatorError("syndrome entropy vanishes on the whole interval [delta/2, 1]")
    try:
        found = maximize_over_omega(objective, lo, hi, trace=trace)
    except DomainError:
        raise degenerate from None
    omega_star, value = found[0], found[1]
    if math.isinf(value) and np.all(den_fn(np.linspace(lo, hi, GRID_POINTS)) < DEN_FLOOR):
        raise degenerate
    rate = min(1.0, max(0.0, 1.0 - value))
    return BoundResult(rate, omega_star, delta, value, found[2] if trace else None)


def _regular_denominator(q, spec):
    Q = q**spec.m0

    def den(omega):
        return q_ary_entropy(p0_complement(q, spec, omega), Q)

    return den


def _irregular_denominator(q, one_minus_rho):
    theta = (q - 1) / q

    def den(omega):
        arg = theta * one_minus_rho(1 - np.asarray(omega) / theta)
        return q_ary_entropy(np.clip(arg, 0.0, 1.0), q)

    return den


def rate_bound_regular(q, spec, delta, cw="composite", trace=False):
    """Rate upper bound for a generalized LDPC code with constituent ``spec``."""
    if spec.q != q:
        raise DomainError(f"constituent is over GF({spec.q}), query is over GF({q})")
    return _bound_from_denominator(q, _regular_denominator(q, spec), delta, cw, trace)


def rate_bound_irregular(q, rho, delta, cw="composite", trace=False):
    """Rate upper bound for an LDPC code with row degree distribution ``rho``."""
    if not is_prime_power(q):
        raise DomainError(f"q must be a prime power, got {q}")
    return _bound_from_denominator(q, _irregular_denominator(q, rho.one_minus), delta, cw, trace)


def rate_bound(q, code, delta, cw="composite", trace=False):
    if isinstance(code, ConstituentSpec):
        return rate_bound_regular(q, code, delta, cw, trace)
    if isinstance(code, RowDegreeDistribution):
        return rate_bound_irregular(q, code, delta, cw, trace)
    raise DomainError(f"unsupported code description: {code!r}")


def invert_to_delta(q, code, rate, cw="composite", tol=1e-9):
    """Largest relative distance ``delta`` whose rate bound still admits ``rate``.

    The rate bound is nonincreasing and continuous in ``delta``, so the
    crossing is bracketed on ``[DELTA_MIN, 1]`` and located with Brent's
    method; the returned point satisfies ``rate_bound(delta) >= rate``.
    Raises :class:`NoSolutionError` if even ``delta -> 0`` gives a bound
    below ``rate``.
    """
    if not 0 < rate < 1:
        raise DomainError(f"rate must lie in (0, 1), got {rate}")

    def excess(delta):
        return rate_bound(q, code, delta, cw).rate_bound - rate

    if excess(DELTA_MIN) < 0:
        raise NoSolutionError(f"rate {rate} exceeds the bound for every delta > 0")
    if excess(1.0) >= 0:
        return 1.0
    root = brentq(excess, DELTA_MIN, 1.0, xtol=tol, rtol=4 * np.finfo(float).eps)
    # step back onto the admissible side of the crossing
    lo = max(DELTA_MIN, root - tol)
    if excess(root) >= 0:
        return root
    return bisect_last_true(lambda d: excess(d) >= 0, lo, root, tol / 8) if excess(lo) >= 0 else lo


def gv_delta(q, rate, tol=1e-12):
    """Gilbert-Varshamov distance: the root of ``1 - h_q(delta) = rate`` in ``(0, (q-1)/q)``."""
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if not 0 < rate < 1:
        raise DomainError(f"rate must lie in (0, 1), got {rate}")
    theta = (q - 1) / q
    return bisect_last_true(lambda d: 1 - q_ary_entropy(d, q) > rate, 0.0, theta, tol)


@dataclass(frozen=True)
class Comparison:
    irregular_bound: float
    regular_bound: float
    dominates: bool


def regular_comparison(q, rho, delta, cw="composite", tol=1e-12):
    """Compare the bound for ``rho`` with the one for ``x**b``, ``b`` the mean row degree.

    ``dominates`` reports ``regular_bound >= irregular_bound`` (to within
    ``tol`` for floating-point ties). A non-integer ``b`` is handled with a
    real exponent.
    """
    b = rho.mean_degree
    irregular = rate_bound_irregular(q, rho, delta, cw).rate_bound
    den = _irregular_denominator(q, lambda x: one_minus_power(x, b))
    regular = _bound_from_denominator(q, den, delta, cw).rate_bound
    return Comparison(irregular, regular, regular >= irregular - tol)
