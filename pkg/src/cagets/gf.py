"""Arithmetic in small finite fields GF(q), q a prime power.

Elements are the integers ``0 .. q-1``; for q = p^m an element encodes the
polynomial whose base-p digits are its coefficients (least significant
first), reduced modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

from functools import lru_cache

# Monic irreducible polynomials, coefficients low -> high, leading 1 omitted.
IRREDUCIBLE = {
    4: (2, (1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0)),     # x^3 + x + 1
    9: (3, (1, 0)),        # x^2 + 1
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1
    25: (5, (2, 0)),       # x^2 + 2
    27: (3, (1, 2, 0)),    # x^3 + 2x + 1
}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


class GF:
    """The finite field of order ``q`` with lookup-table arithmetic."""

    def __init__(self, q: int):
        if _is_prime(q):
            p, m, modulus = q, 1, ()
        elif q in IRREDUCIBLE:
            p, modulus = IRREDUCIBLE[q]
            m = len(modulus)
        else:
            raise ValueError(f"unsupported field order {q}")
        self.q, self.p, self.m = q, p, m
        self._modulus = modulus
        self.add_table = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul_table = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.neg_table = [next(b for b in range(q) if self.add_table[a][b] == 0) for a in range(q)]
        self.inv_table = [0] + [next(b for b in range(1, q) if self.mul_table[a][b] == 1)
                                for a in range(1, q)]

    def _digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        p, m = self.p, self.m
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
        # x^m = -(modulus low terms)
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, mi in enumerate(self._modulus):
                    prod[k - m + i] = (prod[k - m + i] - c * mi) % p
        return self._undigits(prod[:m])

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def dot(self, x, y) -> int:
        s = 0
        for a, b in zip(x, y):
            s = self.add_table[s][self.mul_table[a][b]]
        return s

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
