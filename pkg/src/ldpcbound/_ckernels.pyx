# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled codeword-enumeration kernel."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

from libc.math cimport exp, fabs, fmax, fmin, log, log1p, INFINITY


def weight_histogram(gen, add, sub, mul, long stop_weight=0):
    """Tally Hamming weights of every codeword spanned by the rows of ``gen``.

    Information vectors are visited in mixed-radix counter order and the
    codeword is updated incrementally, touching only the support of the
    generator row whose digit changed. Returns ``(hist, stopped)``; when
    ``stop_weight > 0`` the walk ends at the first nonzero codeword of weight
    ``<= stop_weight`` and ``hist`` is partial.
    """
    cdef const cnp.uint8_t[:, ::1] G = np.ascontiguousarray(gen, dtype=np.uint8)
    cdef const cnp.uint8_t[:, ::1] ADD = np.ascontiguousarray(add, dtype=np.uint8)
    cdef const cnp.uint8_t[:, ::1] SUB = np.ascontiguousarray(sub, dtype=np.uint8)
    cdef Py_ssize_t k = G.shape[0]
    cdef Py_ssize_t n = G.shape[1]
    cdef Py_ssize_t q = ADD.shape[0]
    cdef cnp.int64_t[::1] hist = np.zeros(n + 1, dtype=np.int64)
    hist[0] = 1
    if k == 0:
        return np.asarray(hist), False

    mul_np = np.asarray(mul, dtype=np.uint8)
    gen_np = np.asarray(G)
    # scaled[j, x, t] = x * G[j, t]
    cdef cnp.uint8_t[:, :, ::1] scaled = np.ascontiguousarray(
        mul_np[np.arange(q)[None, :, None], gen_np[:, None, :]])
    supports = [np.flatnonzero(gen_np[j]).astype(np.intp) for j in range(k)]
    cdef cnp.intp_t[::1] sup_ptr = np.zeros(k + 1, dtype=np.intp)
    cdef Py_ssize_t j
    for j in range(k):
        sup_ptr[j + 1] = sup_ptr[j] + supports[j].size
    cdef cnp.intp_t[::1] sup_idx = np.concatenate(supports).astype(np.intp)

    cdef cnp.uint8_t[::1] word = np.zeros(n, dtype=np.uint8)
    cdef cnp.int64_t[::1] digits = np.zeros(k, dtype=np.int64)
    cdef long weight = 0
    cdef long a, b, d
    cdef Py_ssize_t s, t
    cdef cnp.uint8_t old, new
    cdef bint done = False
    while True:
        j = 0
        while True:
            if j == k:
                done = True
                break
            a = digits[j]
            b = a + 1 if a < q - 1 else 0
            d = SUB[b, a]
            for s in range(sup_ptr[j], sup_ptr[j + 1]):
                t = sup_idx[s]
                old = word[t]
                new = ADD[old, scaled[j, d, t]]
                weight += (new != 0) - (old != 0)
                word[t] = new
            digits[j] = b
            if b != 0:
                break
            j += 1
        if done:
            break
        hist[weight] += 1
        if stop_weight > 0 and 0 < weight <= stop_weight:
            return np.asarray(hist), True
    return np.asarray(hist), False




def binomial_mixture(log_coeffs, double log_qm1, omega):
    """``sum_i exp(log_coeffs[i]) w^i (1-w)^(n-i) (q-1)^-i`` for each ``w``.

    Each sum is taken relative to its largest term, so coefficients far
    beyond double range are fine as long as the result is representable.
    """
    cdef const double[::1] L = np.ascontiguousarray(log_coeffs, dtype=np.float64)
    cdef const double[::1] W = np.ascontiguousarray(omega, dtype=np.float64)
    cdef Py_ssize_t n = L.shape[0] - 1
    cdef Py_ssize_t m = W.shape[0]
    out_np = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_np
    cdef double[::1] terms = np.empty(n + 1, dtype=np.float64)
    cdef Py_ssize_t i, r
    cdef double w, lw, l1w, top, acc, t
    for r in range(m):
        w = W[r]
        if w <= 0.0:
            out[r] = exp(L[0])
            continue
        if w >= 1.0:
            out[r] = exp(L[n] - n * log_qm1)
            continue
        lw = log(w) - log_qm1
        l1w = log1p(-w)
        top = -INFINITY
        for i in range(n + 1):
            t = L[i] + i * lw + (n - i) * l1w
            terms[i] = t
            if t > top:
                top = t
        if top == -INFINITY:
            out[r] = 0.0
            continue
        acc = 0.0
        for i in range(n + 1):
            t = terms[i] - top
            # at most n * e^-50 relative error from the skipped terms
            if t > -50.0:
                acc += exp(t)
        out[r] = exp(top) * acc
    return out_np


cdef inline double xlogx(double x) nogil:
    return x * log(x) if x > 0.0 else 0.0


cdef double split_exponent(double q, double w, double a, double b) nogil:
    cdef double val = -(xlogx(a) + xlogx(b) + xlogx(fmax(w - a - b, 0.0))) + xlogx(w)
    val += -(xlogx(a) + xlogx(fmax(1.0 - w - a, 0.0))) + xlogx(1.0 - w)
    val += a * log(q - 1.0)
    if q > 2.0:
        val += b * log(q - 2.0)
    return val


def sphere_ball_exponent(long q, omega, double delta, h, int iters=64):
    """Log_q count exponent of the weight-``omega`` sphere intersected with a
    ball of radius ``delta`` around one of its points, capped at ``h``."""
    cdef const double[::1] W = np.ascontiguousarray(omega, dtype=np.float64)
    out_np = np.array(h, dtype=np.float64, copy=True)
    cdef double[::1] out = out_np
    cdef Py_ssize_t r, it
    cdef double w, typical, lo, hi, mid, g, a, b
    cdef double dq = q
    cdef double c = log(dq - 1.0) - 2.0 * log(dq - 2.0) if q > 2 else 0.0
    cdef double lq = log(dq)
    for r in range(W.shape[0]):
        w = W[r]
        typical = 2.0 * w * (1.0 - w) + w * w * (dq - 2.0) / (dq - 1.0)
        if not (delta < typical and w > delta / 2.0):
            continue
        if q == 2:
            a = fmin(delta / 2.0, 1.0 - w)
            b = 0.0
        else:
            lo = fmax(0.0, delta - w)
            hi = fmin(delta / 2.0, 1.0 - w)
            # g is strictly decreasing in a: Newton steps, kept inside the
            # bisection bracket, converge in a handful of iterations
            a = 0.5 * (lo + hi)
            for it in range(iters):
                # derivative of the exponent along 2a + b = delta
                g = -2.0 * log(a) + 2.0 * log(delta - 2.0 * a) - log(w - delta + a) + log(1.0 - w - a) + c
                if g > 0.0:
                    lo = a
                else:
                    hi = a
                dg = -2.0 / a - 4.0 / (delta - 2.0 * a) - 1.0 / (w - delta + a) - 1.0 / (1.0 - w - a)
                mid = a - g / dg
                if not (lo < mid < hi):
                    mid = 0.5 * (lo + hi)
                if fabs(mid - a) <= 1e-15 * a or hi - lo <= 1e-300:
                    a = mid
                    break
                a = mid
            b = delta - 2.0 * a
        out[r] = fmin(split_exponent(dq, w, a, b) / lq, out[r])
    return out_np
