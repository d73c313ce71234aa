from functools import lru_cache
from typing import Sequence

import numpy as np
from sympy import Poly, factorint, symbols

from ggraph.exception import InvalidParameter, NotAPrimePower

# Conway polynomials for every prime power q = p^k <= 128 with k >= 2,
# coefficients listed from the constant term up to the (monic) leading term.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}

FIELD_SIZE_LIMIT = 128


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """q = p^k -> (p, k); raises NotAPrimePower otherwise."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    (p, k), = factors.items()
    return int(p), int(k)


class GaloisField:
    """
    GF(p^k) for p^k <= 128. Elements are the integers 0..q-1 read as base-p digit
    vectors of polynomial coefficients (constant term first) modulo a fixed
    Conway polynomial; 0 and 1 are the field's zero and one.

    Addition, multiplication, negation and inversion are table lookups, so the
    `add` / `mul` arrays can also be indexed with whole numpy arrays.
    """

    def __init__(self, q: int):
        p, k = prime_power_decomposition(q)
        if q > FIELD_SIZE_LIMIT:
            raise InvalidParameter(
                f"GF({q}) is outside the built-in field table (q <= {FIELD_SIZE_LIMIT})"
            )
        self.p = p
        self.k = k
        self.q = q
        self.modulus = CONWAY_POLYNOMIALS.get((p, k), (0, 1))
        self._check_modulus()

        digits = np.array([self._digits(a) for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        self.add = (summed @ weights).astype(np.int64)
        self.neg = ((-digits) % p) @ weights
        self.mul = np.array(
            [[self._poly_mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
        )
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.flatnonzero(self.mul[a] == 1)[0])
        self.primitive_element = self._find_primitive_element()

    def _check_modulus(self):
        if self.k == 1:
            return
        x = symbols("x")
        poly = Poly(list(reversed(self.modulus)), x, modulus=self.p)
        if not poly.is_irreducible:
            raise InvalidParameter(
                f"modulus for GF({self.q}) is reducible: {poly.as_expr()}"
            )

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + int(d) % self.p
        return value

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with the monic modulus, highest degree first
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for i, m in enumerate(self.modulus):
                    prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return self._from_digits(prod[:k])

    def _find_primitive_element(self) -> int:
        for g in range(1, self.q):
            if self.multiplicative_order(g) == self.q - 1:
                return g
        raise InvalidParameter(f"GF({self.q}) has no primitive element")  # unreachable for a field

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
        return n

    def elements(self) -> range:
        return range(self.q)

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = int(self.inv[a]), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def additive_basis(self) -> list[int]:
        """1, g, g^2, ..., g^(k-1) for the primitive element g; spans GF(q) over GF(p)."""
        return [self.power(self.primitive_element, i) for i in range(self.k)]

    def label(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for deg, c in reversed(list(enumerate(self._digits(a)))):
            if not c:
                continue
            coeff = "" if (c == 1 and deg > 0) else str(c)
            if deg == 0:
                terms.append(str(c))
            elif deg == 1:
                terms.append(f"{coeff}x")
            else:
                terms.append(f"{coeff}x^{deg}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def galois_field(q: int) -> GaloisField:
    """Shared, cached field instance (fields are immutable)."""
    return GaloisField(q)
