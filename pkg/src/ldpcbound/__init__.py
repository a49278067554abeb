"""Asymptotic minimum-distance upper bounds for LDPC codes over GF(q).

The main entry points are :func:`rate_bound` (rate bound at a given relative
distance), :func:`invert_to_delta` (distance bound at a given rate) and
:func:`gv_delta` (the Gilbert-Varshamov distance for comparison).
"""

from .bounds import (
    BoundResult,
    RowDegreeDistribution,
    gv_delta,
    invert_to_delta,
    p0_regular,
    rate_bound,
    rate_bound_irregular,
    rate_bound_regular,
    regular_comparison,
)
from .cwbounds import cw_composite, cw_gv, cw_zero_floor, get_cw_bound
from .entropy import q_ary_entropy
from .enumerators import ConstituentSpec, WeightEnumerator, brute_force_enumerator, mds_enumerator, spc_enumerator
from .errors import DegenerateDenominatorError, DomainError, GuardExceededError, NoSolutionError
from .oracle import build_parity_check, ensemble_smoke, min_distance_exhaustive, syndrome

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "ConstituentSpec",
    "DegenerateDenominatorError",
    "DomainError",
    "GuardExceededError",
    "NoSolutionError",
    "RowDegreeDistribution",
    "WeightEnumerator",
    "brute_force_enumerator",
    "build_parity_check",
    "cw_composite",
    "cw_gv",
    "cw_zero_floor",
    "ensemble_smoke",
    "get_cw_bound",
    "gv_delta",
    "invert_to_delta",
    "mds_enumerator",
    "min_distance_exhaustive",
    "p0_regular",
    "q_ary_entropy",
    "rate_bound",
    "rate_bound_irregular",
    "rate_bound_regular",
    "regular_comparison",
    "spc_enumerator",
    "syndrome",
]
