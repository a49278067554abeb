"""Compare the compiled and numpy kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run on both backends, the outputs are checked for agreement,
and the best wall time of ``--repeat`` runs is printed.
"""

import argparse
import math
import time

import numpy as np

from ldpcbound import kernels
from ldpcbound.enumerators import spc_enumerator, spc_parity_check
from ldpcbound.entropy import q_ary_entropy
from ldpcbound.gf import get_field
from ldpcbound.linalg import null_space


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def workloads():
    F = get_field(8)
    gen = null_space(spc_parity_check(8), 8)  # 8^7 ~ 2.1e6 codewords
    yield "weight_histogram  GF(8) SPC n0=8", lambda b: kernels.weight_histogram(gen, F.add, F.sub, F.mul, backend=b)[0]

    coeffs = spc_enumerator(8, 600).complement_coeffs(8)
    log_coeffs = np.array([math.log(a) if a else -np.inf for a in coeffs])
    omega = np.linspace(0, 1, 4096)
    yield "binomial_mixture  q=8 n0=600, 4096 pts", lambda b: kernels.binomial_mixture(log_coeffs, math.log(7), omega, backend=b)

    h = q_ary_entropy(omega, 8)
    yield "ball_exponent     q=8 delta=0.1, 4096 pts", lambda b: kernels.sphere_ball_exponent(8, omega, 0.1, h, backend=b)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if "compiled" not in kernels.BACKENDS:
        print("compiled extension not built; only the numpy backend is available")
    print(f"{'kernel':42s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, run in workloads():
        t_py, ref = best_time(lambda: run("python"), args.repeat)
        if "compiled" in kernels.BACKENDS:
            t_c, out = best_time(lambda: run("compiled"), args.repeat)
            assert np.allclose(out, ref, rtol=1e-12, atol=1e-300), name
            print(f"{name:42s} {t_py * 1e3:8.1f}ms {t_c * 1e3:8.1f}ms {t_py / t_c:7.1f}x")
        else:
            print(f"{name:42s} {t_py * 1e3:8.1f}ms {'-':>10s}")


if __name__ == "__main__":
    main()
