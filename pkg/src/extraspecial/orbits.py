"""Automorphism orbits, endomorphism images, and the degeneration relation.

For es1 the orbits under the automorphism group are {e}, Z(G)\\{e}, and
G\\Z(G); the endomorphism image of an element is correspondingly {e}, Z(G),
or G, and "lies in the image of" is a total order on the three orbits.

For es2 write H for the index-p subgroup of p-th powers' preimages
(first coordinate divisible by p) and K = Z(H) (u and w blocks zero).
The orbits are {e}, Z(G)\\{e}, one orbit O_b = pZ/p^2 x {0} x {b} x {0}
for each b != 0, all of G\\H, and (when n > 1) H\\K.  Elements of
H\\Z(G) share the endomorphism image H even though they fall into p
distinct orbits, which kills any partial order on orbits: two different
O_b orbits degenerate onto each other without being automorphic.

orbits_bruteforce recomputes the partition by applying every automorphism
to every element, so the closed-form classifier above can be checked
against it wholesale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, ContextError
from .groups import ES1, ES2, Element, Group
from .modp import Mat, inv_mod
from .morphisms import (build_endo_es2, enumerate_automorphisms,
                        enumerate_endomorphisms)

IDENTITY = "IDENTITY"
CENTRAL_NONID = "CENTRAL_NONID"
ES1_NONCENTRAL = "ES1_NONCENTRAL"
ES2_ORDER_P2 = "ES2_ORDER_P2"
ES2_H_MINUS_K = "ES2_H_MINUS_K"

TRIVIAL = "TRIVIAL"
CENTER = "CENTER"
SUBGROUP_H = "SUBGROUP_H"
WHOLE_GROUP = "WHOLE_GROUP"

PARTIAL_ORDER = "PARTIAL_ORDER"
NO_PARTIAL_ORDER = "NO_PARTIAL_ORDER"


@dataclass(frozen=True)
class OrbitLabel:
    tag: str
    b: int | None = None  # the w_1 value for ES2_OB orbits

    def __str__(self):
        if self.b is not None:
            return f"{self.tag}({self.b})"
        return self.tag


def ob_label(b: int) -> OrbitLabel:
    return OrbitLabel("ES2_OB", b)


def _plain_only(g: Group):
    if g.kind not in (ES1, ES2):
        raise ContextError(f"orbit classification covers es1/es2 only, got {g.gid}")


def in_h(e: Element) -> bool:
    """Membership in the index-p subgroup H of es2 (first coordinate in pZ)."""
    g = e.group
    if g.kind != ES2:
        raise ContextError(f"H is defined inside es2 groups, got {g.gid}")
    return e.coords[0] % g.p == 0


def in_k(e: Element) -> bool:
    """Membership in K = Z(H): first coordinate in pZ, u and w blocks zero."""
    g = e.group
    if g.kind != ES2:
        raise ContextError(f"K is defined inside es2 groups, got {g.gid}")
    c = e.coords
    n = g.n
    return c[0] % g.p == 0 and all(x == 0 for x in c[1:n]) and all(x == 0 for x in c[n + 1:])


def classify(e: Element) -> OrbitLabel:
    """Closed-form automorphism-orbit label of an element."""
    g = e.group
    _plain_only(g)
    if e.is_identity():
        return OrbitLabel(IDENTITY)
    if e.is_central():
        return OrbitLabel(CENTRAL_NONID)
    if g.kind == ES1:
        return OrbitLabel(ES1_NONCENTRAL)
    if not in_h(e):
        return OrbitLabel(ES2_ORDER_P2)
    if in_k(e):
        return ob_label(e.coords[g.n])  # w_1 != 0 here, else e would be central
    return OrbitLabel(ES2_H_MINUS_K)


def orbit_labels(g: Group) -> list[OrbitLabel]:
    """All orbit labels of g, identity first, largest orbit last."""
    _plain_only(g)
    out = [OrbitLabel(IDENTITY), OrbitLabel(CENTRAL_NONID)]
    if g.kind == ES1:
        out.append(OrbitLabel(ES1_NONCENTRAL))
        return out
    out.extend(ob_label(b) for b in range(1, g.p))
    if g.n > 1:
        out.append(OrbitLabel(ES2_H_MINUS_K))
    out.append(OrbitLabel(ES2_ORDER_P2))
    return out


def orbit_cardinality(label: OrbitLabel, g: Group) -> int:
    _plain_only(g)
    p, n = g.p, g.n
    if label.tag == IDENTITY:
        return 1
    if label.tag == CENTRAL_NONID:
        return p - 1
    if label.tag == ES1_NONCENTRAL:
        if g.kind != ES1:
            raise ContextError("ES1_NONCENTRAL is an es1 label")
        return p ** (2 * n + 1) - p
    if g.kind != ES2:
        raise ContextError(f"{label} is an es2 label")
    if label.tag == "ES2_OB":
        if not 1 <= label.b <= p - 1:
            raise ContextError(f"ES2_OB parameter must be a unit mod {p}")
        return p
    if label.tag == ES2_ORDER_P2:
        return p ** (2 * n + 1) - p ** (2 * n)
    if label.tag == ES2_H_MINUS_K:
        if n == 1:
            raise ContextError("H = K when n = 1; no such orbit")
        return p ** (2 * n) - p * p
    raise ContextError(f"unknown label {label}")


def endo_image_class(e: Element) -> str:
    """Which subgroup {m(e) : m an endomorphism} fills out."""
    g = e.group
    _plain_only(g)
    if e.is_identity():
        return TRIVIAL
    if e.is_central():
        return CENTER
    if g.kind == ES2 and in_h(e):
        return SUBGROUP_H
    return WHOLE_GROUP


def image_contains(g: Group, image_class: str, coords: tuple) -> bool:
    if image_class == TRIVIAL:
        return all(c == 0 for c in coords)
    if image_class == CENTER:
        return g.is_central(coords)
    if image_class == SUBGROUP_H:
        return coords[0] % g.p == 0
    if image_class == WHOLE_GROUP:
        return True
    raise ContextError(f"unknown image class {image_class}")


def image_subgroup_coords(g: Group, image_class: str) -> set:
    return {c for c in g.elements() if image_contains(g, image_class, c)}


def endo_image_set_bruteforce(e: Element, limit: int | None = None) -> set:
    """Coordinates of m(e) over every endomorphism m, by full enumeration."""
    g = e.group
    return {m.apply_coords(e.coords) for m in enumerate_endomorphisms(g, limit)}


def degeneration(a: Element, b: Element) -> bool:
    """True when some endomorphism sends a to b (closed form via image classes)."""
    if a.group.gid != b.group.gid:
        raise ContextError("degeneration compares elements of one group")
    return image_contains(a.group, endo_image_class(a), b.coords)


def orbits_bruteforce(g: Group, limit: int | None = None) -> list[frozenset]:
    """The exact orbit partition under the full automorphism group.

    Each automorphism contributes its whole image row per element; since the
    automorphisms form a group, the accumulated image sets are precisely the
    orbits.  Rows of members are asserted identical before returning.
    """
    import numpy as np

    _plain_only(g)
    if g.size > 1024:
        raise CapExceeded(f"orbit brute force on {g.gid} with {g.size} elements")
    N = g.size
    reach = np.zeros((N, N), dtype=bool)
    rows = np.arange(N)
    for m in enumerate_automorphisms(g, limit):
        reach[rows, m.table()] = True
    partition: dict[bytes, list] = {}
    for i in range(N):
        partition.setdefault(reach[i].tobytes(), []).append(i)
    classes = []
    for key, members in partition.items():
        support = set(np.flatnonzero(np.frombuffer(key, dtype=bool)).tolist())
        if support != set(members):
            raise AssertionError("image rows do not form a partition")
        classes.append(frozenset(g.coords_at(i) for i in members))
    return sorted(classes, key=lambda c: (len(c), min(c)))


@dataclass
class DegenerationReport:
    group: str
    verdict: str
    order_chains: tuple  # strict (lower, higher) label-string pairs, es1 only
    witness: tuple | None  # (Element, Element) in distinct mutually-degenerate orbits
    witness_endos: tuple | None  # morphisms sending witness[0]->witness[1] and back
    verified: bool

    def to_json_dict(self) -> dict:
        d = {"group": self.group, "verdict": self.verdict,
             "order_chains": [list(c) for c in self.order_chains],
             "verified": self.verified}
        if self.witness is not None:
            d["witness"] = [str(w) for w in self.witness]
        if self.witness_endos is not None:
            d["witness_endos"] = [m.to_json_dict() for m in self.witness_endos]
        return d


def _es2_witness(g: Group):
    """O_1 and O_2 representatives plus explicit endomorphisms between them.

    With A = C = D = 0, a = 0 the parametrization degenerates to
    (u_1, u, w_1, w) -> (p beta(wtilde), 0, B wtilde); taking beta = 0 and
    B = c Id moves w_1 = 1 to w_1 = c, so c = 2 and c = inv(2) swap the
    representatives.
    """
    p, n = g.p, g.n
    zero = Mat.zeros(p, n, n)
    g1 = g.element((0,) * n + (1,) + (0,) * (n - 1))
    g2 = g.element((0,) * n + (2,) + (0,) * (n - 1))
    fwd = build_endo_es2(g, zero, Mat.identity(p, n).scale(2), zero, zero,
                         (0,) * (n - 1), (0,) * n, 0)
    back = build_endo_es2(g, zero, Mat.identity(p, n).scale(inv_mod(2, p)), zero, zero,
                          (0,) * (n - 1), (0,) * n, 0)
    return g1, g2, fwd, back


def partial_order_report(g: Group, verify: bool = True,
                         limit: int | None = None) -> DegenerationReport:
    """Does degeneration order the orbits?  Yes for es1, no for es2.

    With verify=True the verdict is checked at desk scale: for es1 the brute
    orbit partition and brute image sets must realize the stated total chain;
    for es2 the witness pair must be exchanged by the exhibited endomorphisms
    yet lie in different orbits of the full automorphism group.
    """
    _plain_only(g)
    if g.kind == ES1:
        chains = ((IDENTITY, CENTRAL_NONID), (IDENTITY, ES1_NONCENTRAL),
                  (CENTRAL_NONID, ES1_NONCENTRAL))
        verified = False
        if verify:
            _verify_es1_total_order(g, limit)
            verified = True
        return DegenerationReport(str(g.gid), PARTIAL_ORDER, chains, None, None, verified)
    g1, g2, fwd, back = _es2_witness(g)
    verified = False
    if verify:
        if fwd.apply(g1) != g2 or back.apply(g2) != g1:
            raise AssertionError("witness endomorphisms do not exchange the witness pair")
        for m in enumerate_automorphisms(g, limit):
            if m.apply_coords(g1.coords) == g2.coords:
                raise AssertionError("witness pair unexpectedly automorphic")
        verified = True
    return DegenerationReport(str(g.gid), NO_PARTIAL_ORDER, (), (g1, g2), (fwd, back), verified)


def _verify_es1_total_order(g: Group, limit: int | None):
    """Exhaustively confirm the degeneration chain on a desk-scale es1 group."""
    if g.size > 128:
        raise CapExceeded(f"es1 partial-order verification on {g.gid} with {g.size} elements")
    endos = list(enumerate_endomorphisms(g, limit))
    elems = [Element(g, c) for c in g.elements()]
    images = {e.coords: {m.apply_coords(e.coords) for m in endos} for e in elems}
    # brute degeneration must agree with the closed form everywhere
    for a in elems:
        for b in elems:
            if (b.coords in images[a.coords]) != degeneration(a, b):
                raise AssertionError("brute degeneration disagrees with image classes")
    # on orbits: reflexive, antisymmetric, total
    partition = orbits_bruteforce(g, limit)
    reps = [next(iter(sorted(c))) for c in partition]
    orbit_of = {c: i for i, cls in enumerate(partition) for c in cls}
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            fwd = s in images[r]
            bwd = r in images[s]
            if i == j and not fwd:
                raise AssertionError("degeneration not reflexive on an orbit")
            if i != j and fwd and bwd:
                raise AssertionError("two distinct orbits degenerate onto each other")
            if not fwd and not bwd:
                raise AssertionError("two orbits are incomparable; no total order")
    # membership in an orbit never depends on the chosen representative
    for a in elems:
        for b in elems:
            if orbit_of[a.coords] == orbit_of[b.coords]:
                if images[a.coords] != images[b.coords]:
                    raise AssertionError("image set varies inside an orbit")
