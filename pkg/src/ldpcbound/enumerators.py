"""Weight enumerators of constituent codes.

Coefficients are Python integers (arbitrary precision); floating point
enters only when an enumerator is evaluated.
"""

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels, linalg
from .errors import DomainError, GuardExceededError
from .gf import get_field, is_prime_power

#: largest number of codewords an exhaustive enumeration may visit
ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class WeightEnumerator:
    """Weight distribution ``A(0..n0)`` of a linear code of length ``n0``."""

    n0: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.n0 < 1:
            raise DomainError("n0 must be >= 1")
        if len(coeffs) != self.n0 + 1:
            raise DomainError(f"expected {self.n0 + 1} coefficients, got {len(coeffs)}")
        if any(a < 0 for a in coeffs):
            raise DomainError("weight enumerator coefficients must be nonnegative")
        if coeffs[0] != 1:
            raise DomainError("A(0) must be 1 for a linear code")

    @property
    def size(self):
        return sum(self.coeffs)

    @property
    def min_distance(self):
        """Smallest nonzero weight, or ``None`` for the zero code."""
        return next((i for i, a in enumerate(self.coeffs) if i > 0 and a), None)

    def complement_coeffs(self, q):
        """``C(n0, i) (q-1)^i - A(i)``: weight-``i`` words that are *not* codewords."""
        return tuple(math.comb(self.n0, i) * (q - 1) ** i - a for i, a in enumerate(self.coeffs))

    def dumps(self, q):
        k = round(math.log(self.size, q))
        if q**k != self.size:
            raise DomainError(f"code size {self.size} is not a power of q={q}")
        return f"{self.n0} {q} {k}\n" + " ".join(str(a) for a in self.coeffs) + "\n"

    @classmethod
    def loads(cls, text):
        """Parse the two-line text form ``n0 q k`` / ``A(0) ... A(n0)``.

        Returns ``(enumerator, q, k)``.
        """
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2:
            raise DomainError("enumerator file must have exactly two non-empty lines")
        try:
            n0, q, k = (int(v) for v in lines[0].split())
            coeffs = [int(v) for v in lines[1].split()]
        except ValueError as exc:
            raise DomainError(f"malformed enumerator file: {exc}") from None
        enum = cls(n0, coeffs)
        if enum.size != q**k:
            raise DomainError(f"coefficients sum to {enum.size}, expected q^k = {q}^{k}")
        return enum, q, k


@dataclass(frozen=True)
class ConstituentSpec:
    """An ``[n0, R0, d0]`` constituent code over GF(q) with its enumerator."""

    q: int
    enumerator: WeightEnumerator
    d0: int = field(default=None)
    label: str = ""

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise DomainError(f"q={self.q} is not a prime power")
        size = self.enumerator.size
        k = round(math.log(size, self.q))
        if self.q**k != size:
            raise DomainError(f"code size {size} is not a power of q={self.q}")
        if not 0 < k < self.n0:
            raise DomainError(f"constituent dimension k={k} must satisfy 0 < k < n0={self.n0}")
        actual = self.enumerator.min_distance
        if self.d0 is None:
            object.__setattr__(self, "d0", actual)
        elif self.d0 != actual:
            raise DomainError(f"declared d0={self.d0} but the enumerator has minimum weight {actual}")

    @property
    def n0(self):
        return self.enumerator.n0

    @property
    def k0(self):
        return round(math.log(self.enumerator.size, self.q))

    @property
    def m0(self):
        return self.n0 - self.k0

    @property
    def R0(self):
        return Fraction(self.k0, self.n0)

    @classmethod
    def spc(cls, q, n0):
        return cls(q, spc_enumerator(q, n0), 2, label=f"spc:{n0}")


def mds_enumerator(q, n0, d0):
    """Weight enumerator of an ``[n0, n0 - d0 + 1, d0]`` MDS code over GF(q).

    ``A(W) = C(n0, W) (q-1) sum_{j=0}^{W-d0} (-1)^j C(W-1, j) q^{W-d0-j}``,
    evaluated in exact integer arithmetic.
    """
    if not is_prime_power(q):
        raise DomainError(f"q={q} is not a prime power")
    if not 1 <= d0 <= n0:
        raise DomainError(f"need 1 <= d0 <= n0, got d0={d0}, n0={n0}")
    coeffs = [1] + [0] * n0
    for w in range(d0, n0 + 1):
        # Horner in q over j = 0..w-d0
        inner, binom = 0, 1
        for j in range(w - d0 + 1):
            inner = inner * q + (-binom if j % 2 else binom)
            binom = binom * (w - 1 - j) // (j + 1)
        coeffs[w] = math.comb(n0, w) * (q - 1) * inner
    return WeightEnumerator(n0, coeffs)


def spc_enumerator(q, n0):
    """Weight enumerator of the length-``n0`` single parity-check code over GF(q)."""
    if n0 < 2:
        raise DomainError("an SPC code needs n0 >= 2")
    return mds_enumerator(q, n0, 2)


def evaluate_enumerator(G, s):
    """``G(s) = sum_i A(i) s^i`` for ``s >= 0``.

    Terms are summed in the log domain, so huge coefficients and large ``s``
    do not overflow intermediate values.
    """
    log_value = log_evaluate_enumerator(G, s)
    if log_value > _LOG_DBL_MAX:
        return math.inf
    return math.exp(log_value)


_LOG_DBL_MAX = math.log(sys.float_info.max)


def log_evaluate_enumerator(G, s):
    """Natural log of ``G(s)``; finite even when ``G(s)`` exceeds the double range."""
    s = float(s)
    if s < 0:
        raise DomainError("s must be nonnegative")
    if s == 0:
        return math.log(G.coeffs[0])
    logs = [math.log(a) + i * math.log(s) for i, a in enumerate(G.coeffs) if a]
    top = max(logs)
    return top + math.log(math.fsum(math.exp(v - top) for v in logs))


def spc_closed_form(q, n0, s):
    """``(1/q)(1 + (q-1)s)^n0 + ((q-1)/q)(1 - s)^n0``."""
    return (1 + (q - 1) * s) ** n0 / q + (q - 1) / q * (1 - s) ** n0


def brute_force_enumerator(H, q, guard=ENUMERATION_GUARD):
    """Exact weight distribution of ``{x : H x^T = 0}`` by exhaustive enumeration."""
    F = get_field(q)
    H = linalg.as_matrix(H, q)
    basis = linalg.null_space(H, q)
    k = basis.shape[0]
    if q**k > guard:
        raise GuardExceededError(f"q^k = {q}^{k} codewords exceeds the guard of {guard:.0e}")
    hist, _ = kernels.weight_histogram(basis, F.add, F.sub, F.mul)
    return WeightEnumerator(H.shape[1], [int(v) for v in hist])


def spc_parity_check(n0):
    return np.ones((1, n0), dtype=np.uint8)
