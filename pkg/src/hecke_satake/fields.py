"""Finite fields F_q via exp/log tables.

Elements are encoded as integers ``0 <= a < q`` whose base-``p`` digits are the
coefficients of a polynomial in a root of a primitive polynomial; ``g`` (the
class of ``x``) generates the multiplicative group.

>>> F = GF(4)
>>> F.exp(3)
1
>>> F.mul(F.g, F.g) == F.exp(2)
True
>>> F.add(F.one, F.one)
0
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

__all__ = ["GF", "gf"]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


class GF:
    """The field with ``q = p**f`` elements (``q <= 2**16``)."""

    def __init__(self, q: int):
        if q > 1 << 16:
            raise ValueError("q too large for table arithmetic")
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = next(d for d in range(2, q + 1) if q % d == 0)
        f, r = 0, q
        while r % p == 0:
            r //= p
            f += 1
        if r != 1 or not _is_prime(p):
            raise ValueError(f"{q} is not a prime power")
        self.q, self.p, self.f = q, p, f
        self.zero, self.one = 0, 1
        self._exp, self._log = self._build_tables()
        self.g = self._exp[1 % (q - 1)] if q > 2 else 1

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _build_tables(self) -> tuple[list[int], dict[int, int]]:
        p, f, q = self.p, self.f, self.q
        if f == 1:
            gen = next(
                g for g in range(1, p)
                if len({pow(g, k, p) for k in range(p - 1)}) == p - 1
            ) if p > 2 else 1
            exp = [pow(gen, k, p) for k in range(q - 1)]
            return exp, {a: k for k, a in enumerate(exp)}
        # search monic primitive polynomials x^f + c_{f-1} x^{f-1} + ... + c_0
        for coeffs in product(range(p), repeat=f):
            if coeffs[0] == 0:
                continue
            exp = self._powers_of_x(coeffs)
            if exp is not None:
                return exp, {a: k for k, a in enumerate(exp)}
        raise RuntimeError("no primitive polynomial found")  # pragma: no cover

    def _powers_of_x(self, low: tuple[int, ...]) -> list[int] | None:
        p, f, q = self.p, self.f, self.q
        cur = [1] + [0] * (f - 1)
        seen = []
        for _ in range(q - 1):
            a = self._from_digits(cur)
            seen.append(a)
            # multiply by x, reduce x^f = -sum low_i x^i
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c - top * low[i]) % p for i, c in enumerate(cur)]
        if len(set(seen)) != q - 1:
            return None
        return seen

    # arithmetic
    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def exp(self, k: int) -> int:
        """``g**k``."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        return self._log[a]

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def scale(self, n: int, a: int) -> int:
        """``n * a`` for an integer ``n``."""
        return self.mul(self.from_int(n), a)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    """Shared (read-only) field instance."""
    return GF(q)
