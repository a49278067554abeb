import itertools
import math

import numpy as np
import pytest

from ldpcbound.enumerators import (
    ConstituentSpec,
    WeightEnumerator,
    brute_force_enumerator,
    evaluate_enumerator,
    log_evaluate_enumerator,
    mds_enumerator,
    spc_closed_form,
    spc_enumerator,
    spc_parity_check,
)
from ldpcbound.errors import DomainError, GuardExceededError

HAMMING_7_4 = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]


def itertools_spc(q, n0):
    """Weight distribution of the prime-field SPC code by listing all words."""
    counts = [0] * (n0 + 1)
    for word in itertools.product(range(q), repeat=n0):
        if sum(word) % q == 0:
            counts[sum(1 for x in word if x)] += 1
    return counts


def test_spc_gf3_length4():
    assert itertools_spc(3, 4) == [1, 0, 12, 8, 6]
    assert list(spc_enumerator(3, 4).coeffs) == [1, 0, 12, 8, 6]


def test_spc_binary_length3():
    assert list(spc_enumerator(2, 3).coeffs) == [1, 0, 3, 0]


@pytest.mark.parametrize("q, n0", [(8, 10), (64, 64), (2, 30), (8, 600)])
def test_spc_cardinality(q, n0):
    enum = spc_enumerator(q, n0)
    assert enum.size == q ** (n0 - 1)
    assert enum.coeffs[1] == 0
    assert enum.min_distance == 2


@pytest.mark.parametrize("q", [2, 3, 5, 7])
@pytest.mark.parametrize("n0", [2, 3, 5, 6])
def test_spc_matches_listing_prime_fields(q, n0):
    assert list(spc_enumerator(q, n0).coeffs) == itertools_spc(q, n0)


def test_mds_rejects_impossible_parameters():
    # no binary [8, 5, 4] MDS code: the formula goes negative
    with pytest.raises(DomainError):
        mds_enumerator(2, 8, 4)


def test_mds_reed_solomon_cardinality():
    # [7, 3, 5] RS code over GF(8)
    enum = mds_enumerator(8, 7, 5)
    assert enum.size == 8**3 and enum.min_distance == 5


def test_evaluate_examples():
    spc = spc_enumerator(3, 4)
    assert evaluate_enumerator(spc, 0) == 1
    assert evaluate_enumerator(spc, 1) == pytest.approx(27)
    assert 1 + 12 * 4 + 8 * 8 + 6 * 16 == 209
    assert evaluate_enumerator(spc, 2) == pytest.approx(209, rel=1e-14)
    assert spc_closed_form(3, 4, 2) == pytest.approx(209, rel=1e-14)


@pytest.mark.parametrize("q, n0", [(2, 10), (3, 7), (8, 30), (64, 52)])
@pytest.mark.parametrize("s", [0.01, 0.1, 0.5, 1, 2, 10])
def test_closed_form_matches_coefficients(q, n0, s):
    enum = spc_enumerator(q, n0)
    assert evaluate_enumerator(enum, s) == pytest.approx(spc_closed_form(q, n0, s), rel=1e-10)


def test_closed_form_edges():
    assert spc_closed_form(5, 9, 1) == pytest.approx(5**8)
    assert spc_closed_form(5, 9, 0) == 1


def test_evaluate_without_overflow():
    enum = spc_enumerator(64, 64)
    s = 10**6
    exact = sum(a * s**i for i, a in enumerate(enum.coeffs))
    # exact value exceeds the double range, compare in log space
    log_exact = math.log(exact)
    assert log_evaluate_enumerator(enum, s) == pytest.approx(log_exact, rel=1e-14)
    assert evaluate_enumerator(enum, s) == math.inf
    assert evaluate_enumerator(enum, 1e3) == pytest.approx(float(sum(a * 1000**i for i, a in enumerate(enum.coeffs))), rel=1e-12)


def test_evaluate_rejects_negative():
    with pytest.raises(DomainError):
        evaluate_enumerator(spc_enumerator(2, 3), -1)


def test_brute_force_examples():
    assert list(brute_force_enumerator([[1, 1, 1, 1]], 3).coeffs) == [1, 0, 12, 8, 6]
    assert list(brute_force_enumerator(np.zeros((0, 3), dtype=int), 2).coeffs) == [1, 3, 3, 1]
    assert list(brute_force_enumerator(np.eye(3, dtype=int), 2).coeffs) == [1, 0, 0, 0]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n0", range(2, 9))
def test_brute_force_matches_spc(q, n0):
    assert brute_force_enumerator(spc_parity_check(n0), q).coeffs == spc_enumerator(q, n0).coeffs


@pytest.mark.parametrize("q, n0, seed", [(4, 6, 0), (8, 5, 1), (7, 6, 2)])
def test_weighted_parity_check_has_spc_distribution(q, n0, seed):
    row = np.random.default_rng(seed).integers(1, q, size=(1, n0))
    assert brute_force_enumerator(row, q).coeffs == spc_enumerator(q, n0).coeffs


def test_hamming_enumerator():
    enum = brute_force_enumerator(HAMMING_7_4, 2)
    assert list(enum.coeffs) == [1, 0, 0, 7, 7, 0, 0, 1]
    spec = ConstituentSpec(2, enum)
    assert (spec.n0, spec.k0, spec.m0, spec.d0) == (7, 4, 3, 3)
    assert spec.R0 == pytest.approx(4 / 7)


def test_brute_force_guard():
    with pytest.raises(GuardExceededError):
        brute_force_enumerator(np.zeros((1, 30), dtype=int), 2)


def test_brute_force_bad_matrix():
    with pytest.raises(DomainError):
        brute_force_enumerator([[1, 2, 3]], 3)
    with pytest.raises(DomainError):
        brute_force_enumerator([1, 1, 1], 2)


def test_enumerator_text_round_trip():
    enum = spc_enumerator(8, 10)
    text = enum.dumps(8)
    assert text.splitlines()[0] == "10 8 9"
    back, q, k = WeightEnumerator.loads(text)
    assert (back, q, k) == (enum, 8, 9)


@pytest.mark.parametrize(
    "text",
    ["3 2 1\n1 0 3 0\n", "3 2 2\n1 0 3\n", "3 2\n1 0 3 0\n", "3 2 2\n2 0 3 -1\n", "only one line\n"],
)
def test_enumerator_text_errors(text):
    with pytest.raises(DomainError):
        WeightEnumerator.loads(text)


def test_constituent_validation():
    with pytest.raises(DomainError):
        ConstituentSpec(3, spc_enumerator(3, 4), d0=3)
    with pytest.raises(DomainError):
        ConstituentSpec(6, WeightEnumerator(2, [1, 0, 5]))
    spec = ConstituentSpec.spc(8, 30)
    assert spec.m0 == 1 and spec.R0 == pytest.approx(29 / 30)


def test_complement_counts():
    enum = spc_enumerator(3, 4)
    comp = enum.complement_coeffs(3)
    assert [a + b for a, b in zip(enum.coeffs, comp)] == [math.comb(4, i) * 2**i for i in range(5)]
