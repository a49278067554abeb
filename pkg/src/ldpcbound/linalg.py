"""Gaussian elimination over GF(q) on integer matrices."""

import numpy as np

from .errors import DomainError
from .gf import get_field


def as_matrix(H, q):
    H = np.asarray(H, dtype=np.int64)
    if H.ndim != 2:
        raise DomainError(f"expected a 2-d matrix, got shape {H.shape}")
    if H.size and (H.min() < 0 or H.max() >= q):
        raise DomainError(f"matrix entries must lie in [0, {q})")
    return H.astype(np.uint8)


def rref(H, q):
    """Reduced row echelon form of ``H`` over GF(q).

    Returns ``(R, pivots)`` where ``R`` has the zero rows removed and
    ``pivots`` lists the pivot column of each remaining row.
    """
    F = get_field(q)
    A = as_matrix(H, q).copy()
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = F.mul[F.inv[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                # A[i] -= A[i, c] * A[r]
                A[i] = F.sub[A[i], F.mul[A[i, c], A[r]]]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(H, q):
    return len(rref(H, q)[1])


def null_space(H, q):
    """Basis of ``{x : H x^T = 0}`` over GF(q), one basis vector per row.

    The basis is the standard one read off the reduced echelon form: one
    vector per free column, with a 1 in that column.
    """
    F = get_field(q)
    H = as_matrix(H, q)
    n = H.shape[1]
    R, pivots = rref(H, q)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for row, pc in enumerate(pivots):
            basis[b, pc] = F.neg[R[row, f]]
    return basis
