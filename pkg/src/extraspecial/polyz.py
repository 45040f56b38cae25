"""Dense univariate polynomials with integer coefficients.

Counting quantities in this package are polynomial in the prime p for each
fixed n.  Carrying them symbolically makes coefficient-level facts checkable
(notably non-negativity), independent of evaluation at any particular prime.
"""

from __future__ import annotations


class Poly:
    """Polynomial in one variable over Z; coeffs[i] multiplies x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + Poly(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c: int) -> "Poly":
        return Poly(tuple(c * a for a in self.coeffs))

    def eval(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"


ZERO = Poly()
ONE = Poly.const(1)


def prod(polys) -> Poly:
    acc = ONE
    for q in polys:
        acc = acc * q
    return acc


def gaussian_binomial_poly(n: int, k: int) -> Poly:
    """Gaussian binomial coefficient as a polynomial in the prime.

    Built by the q-Pascal recursion binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k),
    which stays inside Z[q] with no division, so the coefficients are
    manifestly non-negative integers.
    """
    if k < 0 or k > n:
        return ZERO
    row = [ONE]  # binomials for m = 0
    for m in range(1, n + 1):
        new = [ONE]
        for j in range(1, m):
            new.append(row[j - 1] + Poly.x_power(j) * row[j])
        new.append(ONE)
        row = new
    return row[k]
