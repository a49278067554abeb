"""Backend selection for the compiled kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``LDPCBOUND_PURE`` is set to a non-empty value, the
numpy implementation is used.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

if os.environ.get("LDPCBOUND_PURE") or _ckernels is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"


def weight_histogram(gen, add, sub, mul, stop_weight=0, backend=None):
    impl = BACKENDS[backend or BACKEND]
    return impl.weight_histogram(gen, add, sub, mul, stop_weight)


def binomial_mixture(log_coeffs, log_qm1, omega, backend=None):
    impl = BACKENDS[backend or BACKEND]
    return impl.binomial_mixture(log_coeffs, log_qm1, omega)


def sphere_ball_exponent(q, omega, delta, h, backend=None):
    impl = BACKENDS[backend or BACKEND]
    return impl.sphere_ball_exponent(q, omega, delta, h)
