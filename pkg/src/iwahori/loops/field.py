"""Small finite fields GF(p^k) with table arithmetic.

Elements are ints in ``range(q)``; the int ``a_0 + a_1 p + ... `` stands for
the polynomial ``a_0 + a_1 X + ...`` modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with q = p^k, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


class FiniteField:
    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.k = pk
        self.modulus = self._find_modulus()
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)

    def __repr__(self):
        return f"GF({self.q})"

    # -- construction ----------------------------------------------------

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds):
        return sum(d * self.p**i for i, d in enumerate(ds))

    def _polymul(self, a, b, modulus):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(self._digits(a)):
            if x:
                for j, y in enumerate(self._digits(b)):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus X^k + m_{k-1} X^{k-1} + ... + m_0
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, m in enumerate(modulus):
                    prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return self._undigits(prod[:k])

    def _find_modulus(self):
        if self.k == 1:
            return (0,)
        for tail in itertools.product(range(self.p), repeat=self.k):
            if tail[0] == 0:
                continue
            # a quotient ring is a field iff it has no zero divisors
            if all(self._polymul(a, b, tail) for a in range(1, self.q) for b in range(1, self.q)):
                return tail
        raise AssertionError("no irreducible polynomial found")

    def _slow_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        return self._polymul(a, b, self.modulus)

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.k == 1:
            return -a % self.p
        return self._undigits([-x % self.p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        for _ in range(n):
            out = self._mul[out][a]
        return out

    def from_int(self, n: int):
        """The image of the integer n (in the prime field)."""
        return n % self.p

    def nonzero(self):
        return range(1, self.q)

    def subfield(self, r: int) -> list[int]:
        """Elements of the subfield with r elements: fixed points of a -> a^r."""
        return [a for a in range(self.q) if self.pow(a, r) == a]


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    return FiniteField(q)
