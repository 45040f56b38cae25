"""Exact counting formulas for the endomorphism and automorphism monoids.

Everything here is closed-form big-integer arithmetic.  The three subspace
series are

    alpha_k : totally isotropic k-subspaces of a 2n-dim symplectic space,
    beta_k  : those lying inside the hyperplane V_1 = {v : v[0] = 0},
    gamma_k : surjective linear maps F_p^{2n} -> F_p^k,

and the endomorphism counts decompose as

    |End| = |Aut| + p^{2n} * X   (es1, X = sum alpha_k gamma_k)
    |End| = |Aut| + p^{2n} * Y   (es2, Y = sum beta_k gamma_k)

with |Aut(es1)| = p^{2n} (p-1) |Sp(2n)| and |Aut(es2)| = p^{2n} * p^{2n-1}
(p-1) |Sp(2n-2)|.  Each formula has a _poly twin returning the counting
polynomial in p, and compute_report pairs a formula value with an
independent brute-force oracle value on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextError
from .groups import ES1, ES2
from .modp import p_binomial
from .polyz import ONE, ZERO, Poly, gaussian_binomial_poly, prod


def sp_order(n: int, p: int) -> int:
    """|Sp(2n, F_p)|; the empty product gives 1 at n = 0."""
    if n < 0:
        raise ContextError("sp_order needs n >= 0")
    out = p ** (n * n)
    for j in range(1, n + 1):
        out *= p ** (2 * j) - 1
    return out


def sp_scalar_order(n: int, p: int) -> int:
    """Order of the group of symplectic similitudes with nonzero multiplier."""
    return (p - 1) * sp_order(n, p)


def im_phi2_order(n: int, p: int) -> int:
    """Order of the constrained similitude group acting on the es2 quotient."""
    if n < 1:
        raise ContextError("im_phi2_order needs n >= 1")
    return p ** (2 * n - 1) * (p - 1) * sp_order(n - 1, p)


def alpha_k(p: int, n: int, k: int) -> int:
    """Totally isotropic k-subspaces of the standard symplectic F_p^{2n}."""
    if k < 0 or k > n:
        return 0
    out = p_binomial(n, k, p)
    for i in range(k):
        out *= p ** (n - i) + 1
    return out


def beta_k(p: int, n: int, k: int) -> int:
    """Totally isotropic k-subspaces contained in the hyperplane v[0] = 0."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return p_binomial(2 * n - 1, 1, p)
    head = (p ** k * (p ** (n - k) + 1) * p_binomial(n - 1, k, p)
            + p_binomial(n - 1, k - 1, p))
    for i in range(1, k):
        head *= p ** (n - i) + 1
    return head


def gamma_k(p: int, n: int, k: int) -> int:
    """Surjective linear maps F_p^{2n} -> F_p^k, by inclusion-exclusion."""
    if k < 0:
        return 0
    vals = [1]
    for m in range(1, k + 1):
        total = p ** (2 * n * m)
        for i in range(m):
            total -= p_binomial(m, i, p) * vals[i]
        vals.append(total)
    return vals[k]


def count_X(p: int, n: int) -> int:
    return sum(alpha_k(p, n, k) * gamma_k(p, n, k) for k in range(n + 1))


def count_Y(p: int, n: int) -> int:
    return sum(beta_k(p, n, k) * gamma_k(p, n, k) for k in range(n + 1))


def aut_order(kind: str, p: int, n: int) -> int:
    if kind == ES1:
        return p ** (2 * n) * (p - 1) * sp_order(n, p)
    if kind == ES2:
        return p ** (2 * n) * im_phi2_order(n, p)
    raise ContextError(f"automorphism count covers es1/es2, got {kind!r}")


def end_order(kind: str, p: int, n: int) -> int:
    if kind == ES1:
        return aut_order(kind, p, n) + p ** (2 * n) * count_X(p, n)
    if kind == ES2:
        return aut_order(kind, p, n) + p ** (2 * n) * count_Y(p, n)
    raise ContextError(f"endomorphism count covers es1/es2, got {kind!r}")


# polynomial twins: same recursions over Z[x], x standing for p

def sp_order_poly(n: int) -> Poly:
    return prod([Poly.x_power(n * n)]
                + [Poly.x_power(2 * j) - ONE for j in range(1, n + 1)])


def im_phi2_order_poly(n: int) -> Poly:
    return prod([Poly.x_power(2 * n - 1), Poly.x_power(1) - ONE,
                 sp_order_poly(n - 1)])


def alpha_poly(n: int, k: int) -> Poly:
    if k < 0 or k > n:
        return ZERO
    return gaussian_binomial_poly(n, k) * prod(
        Poly.x_power(n - i) + ONE for i in range(k))


def beta_poly(n: int, k: int) -> Poly:
    if k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE
    if k == 1:
        return gaussian_binomial_poly(2 * n - 1, 1)
    head = (Poly.x_power(k) * (Poly.x_power(n - k) + ONE)
            * gaussian_binomial_poly(n - 1, k)
            + gaussian_binomial_poly(n - 1, k - 1))
    return head * prod(Poly.x_power(n - i) + ONE for i in range(1, k))


def gamma_poly(n: int, k: int) -> Poly:
    vals = [ONE]
    for m in range(1, k + 1):
        total = Poly.x_power(2 * n * m)
        for i in range(m):
            total = total - gaussian_binomial_poly(m, i) * vals[i]
        vals.append(total)
    return vals[k]


def count_X_poly(n: int) -> Poly:
    out = ZERO
    for k in range(n + 1):
        out = out + alpha_poly(n, k) * gamma_poly(n, k)
    return out


def count_Y_poly(n: int) -> Poly:
    out = ZERO
    for k in range(n + 1):
        out = out + beta_poly(n, k) * gamma_poly(n, k)
    return out


def aut_order_poly(kind: str, n: int) -> Poly:
    base = Poly.x_power(2 * n)
    if kind == ES1:
        return base * (Poly.x_power(1) - ONE) * sp_order_poly(n)
    if kind == ES2:
        return base * im_phi2_order_poly(n)
    raise ContextError(f"automorphism count covers es1/es2, got {kind!r}")


def end_order_poly(kind: str, n: int) -> Poly:
    tail = count_X_poly(n) if kind == ES1 else count_Y_poly(n)
    return aut_order_poly(kind, n) + Poly.x_power(2 * n) * tail


QUANTITIES = ("alpha_k", "beta_k", "gamma_k", "count_X", "count_Y",
              "sp_order", "im_phi2_order", "aut_order", "end_order")
_NEEDS_K = ("alpha_k", "beta_k", "gamma_k")
_NEEDS_GROUP = ("aut_order", "end_order")


@dataclass
class CountReport:
    quantity: str
    group: str | None
    p: int
    n: int
    k: int | None
    formula_value: int
    oracle_value: int | None = None
    match: bool | None = None

    def to_json_dict(self) -> dict:
        return {"quantity": self.quantity, "group": self.group,
                "p": self.p, "n": self.n, "k": self.k,
                "formula": self.formula_value,
                "oracle": self.oracle_value,
                "match": self.match}


def formula_value(quantity: str, p: int, n: int, k: int | None = None,
                  group_kind: str | None = None) -> int:
    if quantity in _NEEDS_K and k is None:
        raise ContextError(f"{quantity} needs a subspace dimension k")
    if quantity in _NEEDS_GROUP and group_kind not in (ES1, ES2):
        raise ContextError(f"{quantity} needs a group kind es1 or es2")
    if quantity == "alpha_k":
        return alpha_k(p, n, k)
    if quantity == "beta_k":
        return beta_k(p, n, k)
    if quantity == "gamma_k":
        return gamma_k(p, n, k)
    if quantity == "count_X":
        return count_X(p, n)
    if quantity == "count_Y":
        return count_Y(p, n)
    if quantity == "sp_order":
        return sp_order(n, p)
    if quantity == "im_phi2_order":
        return im_phi2_order(n, p)
    if quantity == "aut_order":
        return aut_order(group_kind, p, n)
    if quantity == "end_order":
        return end_order(group_kind, p, n)
    raise ContextError(f"unknown quantity {quantity!r}")


def oracle_value(quantity: str, p: int, n: int, k: int | None = None,
                 group_kind: str | None = None, jobs: int = 1) -> int:
    """Independent recomputation by direct scan; raises CapExceeded when big."""
    from . import oracle

    dim = 2 * n
    if quantity == "alpha_k":
        return oracle.scan_subspaces(dim, p, k, isotropic=True)
    if quantity == "beta_k":
        return oracle.scan_subspaces(dim, p, k, isotropic=True, inside_v1=True)
    if quantity == "gamma_k":
        return oracle.scan_surjections(dim, p, k)
    if quantity == "count_X":
        return oracle.scan_matrices(dim, p, oracle.NULL_FORM, jobs=jobs)
    if quantity == "count_Y":
        return oracle.scan_matrices(dim, p, oracle.NULL_FORM,
                                    image_in_v1=True, jobs=jobs)
    if quantity == "sp_order":
        if n == 0:
            return 1
        return oracle.scan_matrices(dim, p, oracle.FIXED_FORM, l=1, jobs=jobs)
    if quantity == "im_phi2_order":
        return sum(oracle.scan_matrices(dim, p, oracle.FIXED_FORM, l=l,
                                        es2_constrained=True, jobs=jobs)
                   for l in range(1, p))
    if quantity == "aut_order":
        return p ** dim * oracle.sigma_scan_count(group_kind, p, n,
                                                  invertible_only=True, jobs=jobs)
    if quantity == "end_order":
        return p ** dim * oracle.sigma_scan_count(group_kind, p, n,
                                                  invertible_only=False, jobs=jobs)
    raise ContextError(f"unknown quantity {quantity!r}")


def compute_report(quantity: str, p: int, n: int, k: int | None = None,
                   group_kind: str | None = None, oracle: bool = False,
                   jobs: int = 1) -> CountReport:
    fv = formula_value(quantity, p, n, k, group_kind)
    rep = CountReport(quantity, group_kind if quantity in _NEEDS_GROUP else None,
                      p, n, k if quantity in _NEEDS_K else None, fv)
    if oracle:
        ov = oracle_value(quantity, p, n, k, group_kind, jobs)
        rep.oracle_value = ov
        rep.match = (ov == fv)
    return rep
