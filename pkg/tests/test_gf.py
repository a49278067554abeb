import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldpcbound.errors import DomainError
from ldpcbound.gf import PRIMES, SUPPORTED_ORDERS, get_field, is_prime_power

SMALL = [q for q in SUPPORTED_ORDERS if q <= 16]
LARGE = [q for q in SUPPORTED_ORDERS if q > 16]


def test_supported_orders():
    assert set(SUPPORTED_ORDERS) == set(PRIMES) | {2, 4, 8, 16, 32, 64}
    assert max(PRIMES) == 61


@pytest.mark.parametrize("q", [9, 25, 27, 49, 6, 128])
def test_unsupported_orders(q):
    with pytest.raises(DomainError):
        get_field(q)


def test_is_prime_power():
    assert [q for q in range(2, 30) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


@pytest.mark.parametrize("q", SMALL)
def test_field_axioms_exhaustive(q):
    F = get_field(q)
    add, mul = F.add.astype(int), F.mul.astype(int)
    e = range(q)
    assert (add == add.T).all() and (mul == mul.T).all()
    for a, b, c in itertools.product(e, e, e):
        assert add[add[a, b], c] == add[a, add[b, c]]
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
    assert all(add[0, a] == a and mul[1, a] == a for a in e)
    assert all(add[a, F.neg[a]] == 0 for a in e)
    assert all(mul[a, F.inv[a]] == 1 for a in range(1, q))


@pytest.mark.parametrize("q", LARGE)
def test_field_axioms_randomized(q):
    F = get_field(q)
    rng = np.random.default_rng(q)
    a, b, c = rng.integers(0, q, size=(3, 100_000))
    assert np.array_equal(F.add[F.add[a, b], c], F.add[a, F.add[b, c]])
    assert np.array_equal(F.mul[F.mul[a, b], c], F.mul[a, F.mul[b, c]])
    assert np.array_equal(F.mul[a, F.add[b, c]], F.add[F.mul[a, b], F.mul[a, c]])
    assert np.array_equal(F.add[a, b], F.add[b, a])
    assert np.array_equal(F.mul[a, b], F.mul[b, a])
    nz = np.arange(1, q)
    assert np.all(F.mul[nz, F.inv[nz]] == 1)
    assert np.all(F.add[np.arange(q), F.neg[np.arange(q)]] == 0)


@pytest.mark.parametrize("q", [4, 8, 16, 32, 64])
def test_multiplicative_group_is_cyclic(q):
    # x (the element 2) generates the group: the modulus is primitive
    F = get_field(q)
    seen, x = set(), 1
    for _ in range(q - 1):
        seen.add(x)
        x = int(F.mul[x, 2])
    assert seen == set(range(1, q))


def test_gf4_table():
    F = get_field(4)
    assert F.mul[2, 2] == 3 and F.mul[2, 3] == 1 and F.mul[3, 3] == 2


def test_field_elements():
    F = get_field(3)
    one, two = F(1), F(2)
    assert one + two == 0
    assert two * two == 1
    assert (one - two) == 2
    assert -one == 2
    assert two.inverse() == 2
    assert two / two == 1
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(DomainError):
        F(3)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(SUPPORTED_ORDERS), st.data())
def test_element_arithmetic_matches_tables(q, data):
    F = get_field(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    assert (F(a) + F(b)).value == F.add[a, b]
    assert (F(a) * F(b)).value == F.mul[a, b]
    assert ((F(a) - F(b)) + F(b)).value == a
