"""Finite fields GF(q) for small q, backed by lookup tables.

Supported orders are the primes below 64 and 2**m for m = 1..6. Binary
extension fields use the primitive polynomials in :data:`PRIMITIVE_POLYS`;
an element of GF(2**m) is the integer whose bits are its coefficients in
the polynomial basis, so addition is XOR.
"""

from functools import lru_cache

import numpy as np

from .errors import DomainError

#: x^m + ... as bit masks, one fixed primitive polynomial per degree
PRIMITIVE_POLYS = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
}

PRIMES = tuple(p for p in range(2, 64) if all(p % d for d in range(2, int(p**0.5) + 1)))
SUPPORTED_ORDERS = tuple(sorted(set(PRIMES) | {2**m for m in range(1, 7)}))


def is_prime_power(q):
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


class FieldTable:
    """Addition, multiplication and inversion tables of GF(q).

    Tables are ``uint8`` numpy arrays indexed by element value, so they can
    be applied to whole arrays with fancy indexing (``F.add[a, b]``).
    """

    def __init__(self, q):
        if q not in SUPPORTED_ORDERS:
            raise DomainError(f"unsupported field order q={q}; supported: {SUPPORTED_ORDERS}")
        self.q = q
        a = np.arange(q)
        if q in PRIMES:
            self.characteristic = q
            add = (a[:, None] + a[None, :]) % q
            mul = (a[:, None] * a[None, :]) % q
        else:
            m = q.bit_length() - 1
            self.characteristic = 2
            add = a[:, None] ^ a[None, :]
            mul = _gf2m_mul_table(m)
        self.add = add.astype(np.uint8)
        self.mul = mul.astype(np.uint8)
        self.neg = np.array([int(np.flatnonzero(self.add[x] == 0)[0]) for x in range(q)], dtype=np.uint8)
        self.sub = self.add[:, self.neg]  # sub[a, b] = a + (-b)
        inv = np.zeros(q, dtype=np.uint8)
        for x in range(1, q):
            inv[x] = int(np.flatnonzero(self.mul[x] == 1)[0])
        self.inv = inv
        for t in (self.add, self.mul, self.neg, self.sub, self.inv):
            t.setflags(write=False)

    def __repr__(self):
        return f"FieldTable(q={self.q})"

    def __call__(self, value):
        return FieldElement(value, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.q)]

    def dot(self, u, v):
        """Inner product of two integer vectors over the field."""
        acc = 0
        for x in self.mul[np.asarray(u), np.asarray(v)]:
            acc = self.add[acc, x]
        return int(acc)


def _gf2m_mul_table(m):
    q = 1 << m
    poly = PRIMITIVE_POLYS[m]
    exp = [0] * (2 * q)
    log = [0] * q
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & q:
            x ^= poly
    if x != 1:
        raise AssertionError(f"polynomial {poly:#b} is not primitive")
    for i in range(q - 1, 2 * q):
        exp[i] = exp[i - (q - 1)]
    table = np.zeros((q, q), dtype=np.int64)
    for a in range(1, q):
        for b in range(1, q):
            table[a, b] = exp[log[a] + log[b]]
    return table


@lru_cache(maxsize=None)
def get_field(q):
    """Shared, immutable :class:`FieldTable` for order ``q``."""
    return FieldTable(q)


class FieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value, field):
        if not 0 <= int(value) < field.q:
            raise DomainError(f"{value} is not an element of GF({field.q})")
        self.value = int(value)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise DomainError("elements of different fields")
            return other.value
        return FieldElement(other, self.field).value

    def __add__(self, other):
        return FieldElement(self.field.add[self.value, self._coerce(other)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field.sub[self.value, self._coerce(other)], self.field)

    def __rsub__(self, other):
        return FieldElement(self.field.sub[self._coerce(other), self.value], self.field)

    def __mul__(self, other):
        return FieldElement(self.field.mul[self.value, self._coerce(other)], self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field.neg[self.value], self.field)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.field.inv[self.value], self.field)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.field).inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field.q == other.field.q
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF{self.field.q}({self.value})"
