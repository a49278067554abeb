"""Pure-numpy kernels (fallback for the compiled ones)."""

import math

import numpy as np

_BLOCK = 1 << 16


def weight_histogram(gen, add, sub, mul, stop_weight=0):
    """Same contract as the compiled ``weight_histogram``.

    The low information digits are expanded into a block of up to 65536
    partial codewords; the remaining digits are walked one offset at a time
    and each offset is added to the whole block with a table lookup.
    """
    gen = np.asarray(gen, dtype=np.uint8)
    add = np.asarray(add, dtype=np.uint8)
    mul = np.asarray(mul, dtype=np.uint8)
    k, n = gen.shape
    q = add.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
        return hist, False

    scaled = mul[np.arange(q)[None, :, None], gen[:, None, :]]  # (k, q, n)
    low = 1
    while low < k and q ** (low + 1) <= _BLOCK:
        low += 1
    block = np.zeros((1, n), dtype=np.uint8)
    for j in range(low):
        block = add[block[None, :, :], scaled[j][:, None, :]].reshape(-1, n)

    high = k - low
    digits = [0] * high
    offset = np.zeros(n, dtype=np.uint8)
    while True:
        words = add[block, offset[None, :]]
        weights = np.count_nonzero(words, axis=1)
        hist += np.bincount(weights, minlength=n + 1)
        if stop_weight > 0:
            nz = weights[weights > 0]
            if nz.size and nz.min() <= stop_weight:
                return hist, True
        # advance the mixed-radix counter over the high digits
        j = 0
        while j < high:
            a = digits[j]
            b = a + 1 if a < q - 1 else 0
            offset = add[offset, scaled[low + j, sub[b, a]]]
            digits[j] = b
            if b != 0:
                break
            j += 1
        if j == high:
            return hist, False


def binomial_mixture(log_coeffs, log_qm1, omega):
    """Same contract as the compiled ``binomial_mixture``."""
    log_coeffs = np.asarray(log_coeffs, dtype=float)
    omega = np.asarray(omega, dtype=float)
    n = log_coeffs.size - 1
    i = np.arange(n + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        lw = np.log(omega)[:, None]
        l1w = np.log1p(-omega)[:, None]
        # 0 * log 0 = 0 for the i = 0 and i = n terms
        tw = np.where(i[None, :] == 0, 0.0, i[None, :] * lw)
        t1w = np.where(i[None, :] == n, 0.0, (n - i)[None, :] * l1w)
    logs = log_coeffs[None, :] + tw + t1w - i[None, :] * log_qm1
    top = np.max(logs, axis=1, keepdims=True)
    top = np.where(np.isfinite(top), top, 0.0)
    return np.exp(top[:, 0]) * np.exp(logs - top).sum(axis=1)


def _xlogx(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(x[pos])
    return out


def _split_exponent(q, omega, a, b):
    """Natural-log count exponent of weight-``omega`` words ``y`` at split
    ``(a, b)`` from a fixed weight-``omega`` word ``x``.

    ``a``: fraction of supp(x) where y is zero (equal to the fraction
    outside supp(x) where y is nonzero); ``b``: fraction of supp(x) where y
    is nonzero and differs from x.
    """
    rest = np.maximum(omega - a - b, 0.0)
    val = -(_xlogx(a) + _xlogx(b) + _xlogx(rest)) + _xlogx(omega)
    val += -(_xlogx(a) + _xlogx(np.maximum(1 - omega - a, 0.0))) + _xlogx(1 - omega)
    val += a * math.log(q - 1)
    if q > 2:
        val += b * math.log(q - 2)
    return val


def sphere_ball_exponent(q, omega, delta, h, iters=64):
    """Same contract as the compiled ``sphere_ball_exponent``.

    The count exponent is concave in the split; below the typical distance
    of the sphere its maximum lies on ``2a + b = delta`` and is located by
    bisection on the derivative along that segment. ``h`` is ``h_q(omega)``,
    the exponent of the whole sphere.
    """
    omega = np.asarray(omega, dtype=float)
    typical = 2 * omega * (1 - omega) + omega**2 * (q - 2) / (q - 1)
    out = np.array(h, dtype=float)
    inside = (delta < typical) & (omega > delta / 2)
    if not np.any(inside):
        return out
    w = omega[inside]
    if q == 2:
        a = np.minimum(delta / 2, 1 - w)
        b = np.zeros_like(w)
    else:
        lo = np.maximum(0.0, delta - w)
        hi = np.minimum(delta / 2, 1 - w)
        c = math.log(q - 1) - 2 * math.log(q - 2)
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            with np.errstate(divide="ignore", invalid="ignore"):
                g = -2 * np.log(mid) + 2 * np.log(delta - 2 * mid) - np.log(w - delta + mid) + np.log(1 - w - mid) + c
            up = g > 0
            lo = np.where(up, mid, lo)
            hi = np.where(up, hi, mid)
        a = 0.5 * (lo + hi)
        b = delta - 2 * a
    out[inside] = np.minimum(_split_exponent(q, w, a, b) / math.log(q), out[inside])
    return out
