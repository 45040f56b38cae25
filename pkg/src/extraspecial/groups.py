"""Extra-special p-groups of order p^(2n+1) for odd p, in explicit coordinates.

Two families, each with a twisted presentation and a symmetrized "tilde"
presentation:

  es1   exponent p.  Coordinates (u, w, z) in F_p^n x F_p^n x F_p with
        (u1,w1,z1).(u2,w2,z2) = (u1+u2, w1+w2, z1+z2+<u1,w2>).
  es1~  same coordinates, cocycle (1/2)<<(u1;w1),(u2;w2)>> built from the
        standard symplectic form.
  es2   exponent p^2.  Coordinates (u_1, u, w_1, w) in
        Z/p^2 x (Z/p)^(n-1) x Z/p x (Z/p)^(n-1) with first coordinate
        u1_1 + u2_1 + p.w2_1.u1_1 + p.<u1,w2>  (bars denote reduction mod p)
        and the remaining coordinates adding componentwise.
  es2~  same coordinates, cocycle p.(1/2)<<(utilde1;wtilde1),(utilde2;wtilde2)>>.

lambda_iso and delta_iso are the coordinate isomorphisms from each tilde
presentation onto its twisted partner.

Element order, centrality, commutators, and the commutator form f (valued in
the exponent of the central generator) are all computed from the group law
itself, so they stay valid oracles for anything derived from closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .config import cap
from .errors import CapExceeded, ContextError, DimensionError, ParseError
from .modp import half, is_odd_prime

ES1 = "es1"
ES2 = "es2"
ES1_TILDE = "es1~"
ES2_TILDE = "es2~"

_KINDS = (ES1, ES2, ES1_TILDE, ES2_TILDE)


@dataclass(frozen=True)
class GroupId:
    kind: str
    p: int
    n: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ContextError(f"unknown group kind {self.kind!r}")
        if not is_odd_prime(self.p):
            raise ContextError(f"p must be an odd prime, got {self.p}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ContextError(f"n must be a positive integer, got {self.n}")

    def __str__(self):
        return f"{self.kind}({self.p},{self.n})"


@lru_cache(maxsize=None)
def group(kind: str, p: int, n: int) -> "Group":
    return Group(GroupId(kind, p, n))


class Group:
    """One group from the table above; all element ops live here at tuple level."""

    def __init__(self, gid: GroupId):
        self.gid = gid
        self.kind = gid.kind
        self.p = gid.p
        self.n = gid.n
        self.size = gid.p ** (2 * gid.n + 1)
        self.half = half(gid.p)
        self.es2_shaped = gid.kind in (ES2, ES2_TILDE)
        p, n = self.p, self.n
        if self.es2_shaped:
            # (u_1, u_2..u_n, w_1, w_2..w_n): 2n coordinates, first mod p^2
            self.ranges = (p * p,) + (p,) * (2 * n - 1)
        else:
            # (u_1..u_n, w_1..w_n, z): 2n+1 coordinates mod p
            self.ranges = (p,) * (2 * n + 1)
        radix = []
        acc = 1
        for r in reversed(self.ranges):
            radix.append(acc)
            acc *= r
        self.radices = tuple(reversed(radix))
        self._np_cache = None

    # -- element construction ------------------------------------------------

    def identity(self) -> "Element":
        return Element(self, (0,) * len(self.ranges))

    def element(self, coords) -> "Element":
        coords = tuple(coords)
        if len(coords) != len(self.ranges):
            raise DimensionError(
                f"{self.gid} elements have {len(self.ranges)} coordinates, got {len(coords)}")
        return Element(self, tuple(c % r for c, r in zip(coords, self.ranges)))

    def generators(self) -> list:
        """Standard generators x_1..x_n, y_1..y_n in that order."""
        n = self.n
        gens = []
        width = len(self.ranges)
        if self.es2_shaped:
            for i in range(n):  # x_1 has order p^2, x_2..x_n sit in the u block
                c = [0] * width
                c[0 if i == 0 else i] = 1
                gens.append(self.element(c))
            for i in range(n):  # y_1 is the w_1 coordinate, the rest the w block
                c = [0] * width
                c[n + i] = 1
                gens.append(self.element(c))
        else:
            for i in range(n):
                c = [0] * width
                c[i] = 1
                gens.append(self.element(c))
            for i in range(n):
                c = [0] * width
                c[n + i] = 1
                gens.append(self.element(c))
        return gens

    # -- the group laws ------------------------------------------------------

    def mul(self, a: tuple, b: tuple) -> tuple:
        p, n = self.p, self.n
        if self.kind == ES1:
            tw = sum(a[i] * b[n + i] for i in range(n)) % p
            return tuple((x + y) % p for x, y in zip(a[:-1], b[:-1])) + ((a[-1] + b[-1] + tw) % p,)
        if self.kind == ES1_TILDE:
            sym = sum(a[i] * b[n + i] - a[n + i] * b[i] for i in range(n))
            tw = (self.half * sym) % p
            return tuple((x + y) % p for x, y in zip(a[:-1], b[:-1])) + ((a[-1] + b[-1] + tw) % p,)
        if self.kind == ES2:
            tw = (b[n] * (a[0] % p) + sum(a[i] * b[n + i] for i in range(1, n))) % p
            first = (a[0] + b[0] + p * tw) % (p * p)
            return (first,) + tuple((x + y) % p for x, y in zip(a[1:], b[1:]))
        # ES2_TILDE
        au = (a[0] % p,) + a[1:n]
        bu = (b[0] % p,) + b[1:n]
        aw = a[n:]
        bw = b[n:]
        sym = sum(au[i] * bw[i] - bu[i] * aw[i] for i in range(n))
        tw = (self.half * sym) % p
        first = (a[0] + b[0] + p * tw) % (p * p)
        return (first,) + tuple((x + y) % p for x, y in zip(a[1:], b[1:]))

    def inv(self, a: tuple) -> tuple:
        p, n = self.p, self.n
        if self.kind == ES1:
            tw = sum(a[i] * a[n + i] for i in range(n)) % p
            return tuple(-x % p for x in a[:-1]) + ((tw - a[-1]) % p,)
        if self.kind == ES1_TILDE:
            return tuple(-x % p for x in a[:-1]) + (-a[-1] % p,)
        if self.kind == ES2:
            tw = (a[n] * (a[0] % p) + sum(a[i] * a[n + i] for i in range(1, n))) % p
            first = (-a[0] + p * tw) % (p * p)
            return (first,) + tuple(-x % p for x in a[1:])
        # ES2_TILDE: the symmetrized cocycle vanishes on (g, g^-1)
        return (-a[0] % (p * p),) + tuple(-x % p for x in a[1:])

    def power(self, a: tuple, k: int) -> tuple:
        if k < 0:
            return self.power(self.inv(a), -k)
        acc = (0,) * len(self.ranges)
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def commutator(self, a: tuple, b: tuple) -> tuple:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def order(self, a: tuple) -> int:
        e = (0,) * len(self.ranges)
        acc = a
        k = 1
        while acc != e:
            acc = self.mul(acc, a)
            k += 1
            if k > self.p * self.p:
                raise AssertionError("element order exceeded p^2")
        return k

    def is_central(self, a: tuple) -> bool:
        p, n = self.p, self.n
        if self.es2_shaped:
            return a[0] % p == 0 and all(x == 0 for x in a[1:])
        return all(x == 0 for x in a[:-1])

    def center_coords(self) -> list:
        """Coordinates of the p central elements."""
        p = self.p
        width = len(self.ranges)
        out = []
        for c in range(p):
            coords = [0] * width
            if self.es2_shaped:
                coords[0] = p * c
            else:
                coords[-1] = c
            out.append(tuple(coords))
        return out

    def central_generator(self) -> "Element":
        p = self.p
        width = len(self.ranges)
        coords = [0] * width
        if self.es2_shaped:
            coords[0] = p
        else:
            coords[-1] = 1
        return self.element(coords)

    # -- quotient by the center ---------------------------------------------

    def quotient_coords(self, a: tuple) -> tuple:
        """Image in G/Z(G) = F_p^2n, basis (x_1..x_n, y_1..y_n) bar."""
        if self.es2_shaped:
            return (a[0] % self.p,) + a[1:]
        return a[:-1]

    def symplectic_f(self, a: tuple, b: tuple) -> int:
        """Exponent c with [a, b] = z^c for the central generator z."""
        c = self.commutator(a, b)
        if self.es2_shaped:
            q, r = divmod(c[0], self.p)
            assert r == 0 and all(x == 0 for x in c[1:])
            return q
        assert all(x == 0 for x in c[:-1])
        return c[-1]

    # -- enumeration ---------------------------------------------------------

    def elements(self, limit: int | None = None):
        """Yield all coordinate tuples in lexicographic order."""
        limit = cap("ELEMENT_CAP") if limit is None else limit
        if self.size > limit:
            raise CapExceeded(f"{self.gid} has {self.size} elements, cap is {limit}")
        return product(*(range(r) for r in self.ranges))

    def index(self, a: tuple) -> int:
        return sum(c * r for c, r in zip(a, self.radices))

    def coords_at(self, i: int) -> tuple:
        out = []
        for r in self.radices:
            out.append(i // r)
            i %= r
        return tuple(out)

    def coords_matrix(self):
        """All elements as a numpy array, row i = coords_at(i); cached."""
        if self._np_cache is None:
            import numpy as np

            rows = np.array(list(self.elements()), dtype=np.int64)
            self._np_cache = rows
        return self._np_cache

    def __repr__(self):
        return f"Group({self.gid})"


class Element:
    """A group element; thin hashable wrapper over its coordinate tuple."""

    __slots__ = ("group", "coords")

    def __init__(self, group: Group, coords: tuple):
        self.group = group
        self.coords = coords

    def _same(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.group.gid != self.group.gid:
            raise ContextError(f"elements of {self.group.gid} and {other.group.gid} cannot be combined")

    def __mul__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.group, self.group.mul(self.coords, other.coords))

    def __pow__(self, k: int) -> "Element":
        return Element(self.group, self.group.power(self.coords, k))

    def inverse(self) -> "Element":
        return Element(self.group, self.group.inv(self.coords))

    def commutator(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.group, self.group.commutator(self.coords, other.coords))

    def order(self) -> int:
        return self.group.order(self.coords)

    def is_identity(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_central(self) -> bool:
        return self.group.is_central(self.coords)

    def quotient_coords(self) -> tuple:
        return self.group.quotient_coords(self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and other.group.gid == self.group.gid
                and other.coords == self.coords)

    def __hash__(self) -> int:
        return hash((self.group.gid, self.coords))

    def __repr__(self) -> str:
        return format_element(self)

    def __str__(self) -> str:
        return format_element(self)


def symplectic_f(a: Element, b: Element) -> int:
    a._same(b)
    return a.group.symplectic_f(a.coords, b.coords)


def lambda_iso(e: Element) -> Element:
    """Isomorphism es1~ -> es1: (u, w, z) -> (u, w, z + (1/2)<u,w>)."""
    g = e.group
    if g.kind != ES1_TILDE:
        raise ContextError(f"lambda_iso expects an {ES1_TILDE} element, got {g.gid}")
    p, n = g.p, g.n
    a = e.coords
    tw = (g.half * sum(a[i] * a[n + i] for i in range(n))) % p
    target = group(ES1, p, n)
    return target.element(a[:-1] + ((a[-1] + tw) % p,))


def delta_iso(e: Element) -> Element:
    """Isomorphism es2~ -> es2: adds p.(1/2)<utilde, wtilde> to the first coordinate."""
    g = e.group
    if g.kind != ES2_TILDE:
        raise ContextError(f"delta_iso expects an {ES2_TILDE} element, got {g.gid}")
    p, n = g.p, g.n
    a = e.coords
    ut = (a[0] % p,) + a[1:n]
    wt = a[n:]
    tw = (g.half * sum(x * y for x, y in zip(ut, wt))) % p
    target = group(ES2, p, n)
    return target.element(((a[0] + p * tw) % (p * p),) + a[1:])


# -- text syntax -------------------------------------------------------------
#
#   es1(p,n):[u_1,..,u_n|w_1,..,w_n|z]
#   es2(p,n):[u_1|u_2,..,u_n|w_1|w_2,..,w_n]      (n >= 2)
#   es2(p,1):[u_1|w_1]
#
# Output is canonical; parsing accepts optional whitespace around tokens.


def parse_group_spec(text: str, offset: int = 0) -> Group:
    s = text.strip()
    try:
        kind, rest = s.split("(", 1)
        body, tail = rest.split(")", 1)
        if tail.strip():
            raise ValueError
        ps, ns = body.split(",")
        p, n = int(ps), int(ns)
    except ValueError:
        raise ParseError(f"expected group spec like es1(3,1), got {text!r}", offset) from None
    kind = kind.strip()
    if kind not in (ES1, ES2):
        raise ParseError(f"unknown group kind {kind!r}", offset)
    try:
        return group(kind, p, n)
    except ContextError as exc:
        raise ParseError(str(exc), offset) from None


def _parse_csv(seg: str, offset: int) -> tuple:
    seg = seg.strip()
    if not seg:
        return ()
    out = []
    pos = offset
    for tok in seg.split(","):
        try:
            out.append(int(tok.strip()))
        except ValueError:
            raise ParseError(f"expected integer, got {tok.strip()!r}", pos) from None
        pos += len(tok) + 1
    return tuple(out)


def parse_element(text: str) -> Element:
    if ":" not in text:
        raise ParseError("expected ':' separating group spec from coordinates", len(text))
    spec, _, body = text.partition(":")
    g = parse_group_spec(spec)
    body_off = len(spec) + 1
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("coordinates must be enclosed in [...]", body_off)
    inner = body[1:-1]
    segs = inner.split("|")
    n = g.n
    if g.kind == ES1:
        if len(segs) != 3:
            raise ParseError(f"es1 elements use [u|w|z] with 3 segments, got {len(segs)}", body_off)
        u = _parse_csv(segs[0], body_off + 1)
        w = _parse_csv(segs[1], body_off + 2 + len(segs[0]))
        z = _parse_csv(segs[2], body_off + 3 + len(segs[0]) + len(segs[1]))
        if len(u) != n or len(w) != n or len(z) != 1:
            raise ParseError(f"es1({g.p},{n}) needs {n}+{n}+1 coordinates", body_off)
        return g.element(u + w + z)
    if len(segs) == 2 and n == 1:
        u1 = _parse_csv(segs[0], body_off + 1)
        w1 = _parse_csv(segs[1], body_off + 2 + len(segs[0]))
        if len(u1) != 1 or len(w1) != 1:
            raise ParseError("es2(p,1) elements use [u1|w1]", body_off)
        return g.element(u1 + w1)
    if len(segs) != 4:
        raise ParseError(f"es2 elements use [u1|u|w1|w] with 4 segments, got {len(segs)}", body_off)
    off = body_off + 1
    parts = []
    for seg in segs:
        parts.append(_parse_csv(seg, off))
        off += len(seg) + 1
    u1, u, w1, w = parts
    if len(u1) != 1 or len(u) != n - 1 or len(w1) != 1 or len(w) != n - 1:
        raise ParseError(f"es2({g.p},{n}) needs 1+{n - 1}+1+{n - 1} coordinates", body_off)
    return g.element(u1 + u + w1 + w)


def format_element(e: Element) -> str:
    g = e.group
    n = g.n
    c = e.coords
    spec = f"{g.kind}({g.p},{g.n})"
    if g.kind in (ES1, ES1_TILDE):
        u = ",".join(map(str, c[:n]))
        w = ",".join(map(str, c[n:2 * n]))
        return f"{spec}:[{u}|{w}|{c[-1]}]"
    if n == 1:
        return f"{spec}:[{c[0]}|{c[1]}]"
    u = ",".join(map(str, c[1:n]))
    w = ",".join(map(str, c[n + 1:]))
    return f"{spec}:[{c[0]}|{u}|{c[n]}|{w}]"
