import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldpcbound.entropy import entropy_of_distribution, min_entropy_lower_bound, q_ary_entropy
from ldpcbound.errors import DomainError


def test_entropy_at_zero():
    assert q_ary_entropy(0, 8) == 0


def test_entropy_peak():
    assert q_ary_entropy(7 / 8, 8) == pytest.approx(1, abs=1e-12)


def test_entropy_at_gv_point():
    # GV at q=8, R=0.9 is delta = 0.0328
    assert q_ary_entropy(0.0328, 8) == pytest.approx(0.1, abs=1e-3)


def test_entropy_at_one():
    assert q_ary_entropy(1.0, 8) == pytest.approx(math.log(7, 8))
    assert q_ary_entropy(1.0, 2) == 0


@pytest.mark.parametrize("Q", [2, 3, 8, 64])
def test_entropy_unimodal(Q):
    peak = (Q - 1) / Q
    up = np.linspace(0, peak, 1200)
    down = np.linspace(peak, 1, 1200)
    assert np.all(np.diff(q_ary_entropy(up, Q)) > 0)
    assert np.all(np.diff(q_ary_entropy(down, Q)) < 0)
    assert q_ary_entropy(peak, Q) == pytest.approx(1, abs=1e-12)


def test_entropy_array_shape_and_range():
    x = np.linspace(0, 1, 101)
    h = q_ary_entropy(x, 5)
    assert h.shape == x.shape
    assert np.all((h >= 0) & (h <= 1 + 1e-15))
    assert not np.any(np.isnan(h))


def test_entropy_clamps_rounding_noise():
    assert q_ary_entropy(-1e-13, 4) == 0
    assert q_ary_entropy(1 + 1e-13, 4) == q_ary_entropy(1.0, 4)


@pytest.mark.parametrize("x, Q", [(-0.1, 2), (1.01, 2), (0.5, 1)])
def test_entropy_domain_errors(x, Q):
    with pytest.raises(DomainError):
        q_ary_entropy(x, Q)


def test_distribution_examples():
    assert entropy_of_distribution([1 / 8] * 8, 8) == pytest.approx(1, abs=1e-12)
    assert entropy_of_distribution([1, 0, 0], 3) == 0
    assert entropy_of_distribution([0.5, 0.5], 2) == pytest.approx(1)


@pytest.mark.parametrize("t, Q", [(5, 2), (64, 8), (7, 7)])
def test_uniform_distribution(t, Q):
    assert entropy_of_distribution([1 / t] * t, Q) == pytest.approx(math.log(t, Q), abs=1e-12)


@pytest.mark.parametrize("probs", [[0.5, 0.6], [1.1, -0.1], [0.3, 0.3]])
def test_distribution_errors(probs):
    with pytest.raises(DomainError):
        entropy_of_distribution(probs, 2)


def test_min_entropy_examples():
    assert min_entropy_lower_bound(1 / 6, 6, 3) == pytest.approx(math.log(6, 3))
    assert min_entropy_lower_bound(1, 1, 2) == 0
    assert min_entropy_lower_bound(0.5, 4, 2) == pytest.approx(1)
    with pytest.raises(DomainError):
        min_entropy_lower_bound(0.2, 4, 2)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.floats(min_value=0, max_value=1, allow_nan=False), min_size=1, max_size=40).filter(lambda v: sum(v) > 1e-6),
    st.sampled_from([2, 3, 8, 64]),
)
def test_min_entropy_is_a_lower_bound(weights, Q):
    p = np.array(weights) / sum(weights)
    p = p / p.sum()
    if abs(p.sum() - 1) > 1e-12:
        return
    bound = min_entropy_lower_bound(min(1.0, p.max()), len(p), Q)
    assert entropy_of_distribution(p, Q) >= bound - 1e-12
