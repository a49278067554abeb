"""Regenerates the frozen reference values used by the test suite.

Everything here is written against mpmath and the closed-form SPC
expressions, independently of the package. Run with ``python
tests/oracles/reference_values.py``; it takes a few minutes.
"""

import itertools

import mpmath as mp

mp.mp.dps = 40


def h(x, Q):
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(0)
    if x == 1:
        return mp.log(Q - 1, Q)
    return -x * mp.log(x, Q) - (1 - x) * mp.log(1 - x, Q) + x * mp.log(Q - 1, Q)


def composite(q, w, d):
    theta = mp.mpf(q - 1) / q
    if w <= d / 2 or d >= theta:
        return mp.mpf(0)
    J = theta * (1 - mp.sqrt(1 - d / theta))
    return min(h(w, q), 1 - d, 1 - h(J, q))


def spc_den(q, n0, w):
    theta = mp.mpf(q - 1) / q
    return h(theta * (1 - (1 - w / theta) ** n0), q)


def spc_brute(q, n0):
    counts = [0] * (n0 + 1)
    for word in itertools.product(range(q), repeat=n0):
        if sum(word) % q == 0:
            counts[sum(1 for x in word if x)] += 1
    return counts


def regular_rate_bound_grid(q, n0, delta, points=10**6):
    delta = mp.mpf(delta)
    lo = delta / 2
    best = None
    for k in range(points):
        w = lo + (1 - lo) * mp.mpf(k) / (points - 1)
        den = spc_den(q, n0, w)
        if den == 0:
            continue
        val = (h(w, q) - composite(q, w, delta)) / den
        if best is None or val > best[1]:
            best = (w, val)
    return best[0], 1 - best[1]


def zero_floor_inversion(q, n0, rate):
    # numerator vanishes for w > delta/2, so the rate bound is the w = delta/2 value
    f = lambda d: 1 - h(d / 2, q) / spc_den(q, n0, d / 2) - rate
    lo, hi = mp.mpf("1e-12"), mp.mpf(1)
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


if __name__ == "__main__":
    print("spc_brute(3, 4) =", spc_brute(3, 4))
    print("cw_composite(2, 0.5, 0.11) =", mp.nstr(composite(2, mp.mpf("0.5"), mp.mpf("0.11")), 20))
    print("zero-floor inversion (8, x^30, 0.9) =", mp.nstr(zero_floor_inversion(8, 30, mp.mpf("0.9")), 20))
    w, r = regular_rate_bound_grid(2, 30, mp.mpf("0.02"))
    print("regular rate bound (2, spc 30, 0.02, composite) =", mp.nstr(r, 20), "at omega", mp.nstr(w, 12))
