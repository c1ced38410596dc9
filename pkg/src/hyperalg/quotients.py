"""Quotient hyperrings R/G of finite rings by unit subgroups, the group
extension hyperfields over the two-element base, and the incidence geometry
attached to a vector space over it."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactmath.gfpoly import GF, FpPoly, is_prime
from .hypercore import GroupTable, HyperTable


class FiniteRing:
    """A finite commutative ring presented elementwise: either F_{p^k} (via a
    monic irreducible modulus) or Z/n. Elements are opaque hashables with a
    stable label map."""

    def __init__(self, kind: str, **params):
        self.kind = kind
        if kind == "gf":
            p, k = params["p"], params["k"]
            self._gf = GF(p, k, params.get("modulus"))
            self._elements = list(self._gf.elements())
        elif kind == "zmod":
            n = params["n"]
            if n < 2:
                raise ValueError("modulus must be at least 2")
            self.n = n
            self._elements = list(range(n))
        else:
            raise ValueError(f"unknown ring kind {kind!r}")

    @staticmethod
    def gf(p: int, k: int, modulus: FpPoly | None = None) -> "FiniteRing":
        return FiniteRing("gf", p=p, k=k, modulus=modulus)

    @staticmethod
    def zmod(n: int) -> "FiniteRing":
        return FiniteRing("zmod", n=n)

    # -- elementwise ops --------------------------------------------------------

    def elements(self) -> list:
        return list(self._elements)

    @property
    def zero(self):
        return () if self.kind == "gf" else 0

    @property
    def one(self):
        return (1,) if self.kind == "gf" else 1

    def add(self, a, b):
        return self._gf.add(a, b) if self.kind == "gf" else (a + b) % self.n

    def neg(self, a):
        return self._gf.neg(a) if self.kind == "gf" else (-a) % self.n

    def mul(self, a, b):
        return self._gf.mul(a, b) if self.kind == "gf" else (a * b) % self.n

    def units(self) -> list:
        if self.kind == "gf":
            return [a for a in self._elements if a != ()]
        from math import gcd
        return [a for a in self._elements if gcd(a, self.n) == 1]

    def label(self, a) -> str:
        if self.kind == "zmod":
            return str(a)
        # polynomial-basis coordinates, low degree first
        return "(" + ",".join(str(c) for c in a) + ")" if a else "(0)"


def subgroup_closure(ring: FiniteRing, generators) -> frozenset:
    """Multiplicative closure of the generators inside the unit group."""
    units = set(ring.units())
    for g in generators:
        if g not in units:
            raise ValueError(f"generator {ring.label(g)} is not a unit")
    seen = {ring.one}
    frontier = list(generators)
    while frontier:
        g = frontier.pop()
        if g in seen:
            continue
        seen.add(g)
        frontier.extend(ring.mul(g, h) for h in list(seen))
    # closure under inverse is automatic in a finite monoid of units
    return frozenset(seen)


def _check_subgroup(ring: FiniteRing, group: frozenset) -> None:
    if ring.one not in group:
        raise ValueError("subgroup must contain 1")
    units = set(ring.units())
    for g in group:
        if g not in units:
            raise ValueError("subgroup contains a non-unit")
        for h in group:
            if ring.mul(g, h) not in group:
                raise ValueError("generators do not close under multiplication")


def quotient_hyperring(ring: FiniteRing, group: frozenset) -> HyperTable:
    """The hyperring R/G: orbits of G acting by multiplication, with orbit-set
    hyperaddition (xG + yG)/G and representative multiplication."""
    group = frozenset(group)
    _check_subgroup(ring, group)

    orbit_of = {}
    orbits = []
    for a in ring.elements():
        if a in orbit_of:
            continue
        orb = frozenset(ring.mul(a, g) for g in group) | ({a} if a == ring.zero else set())
        if a == ring.zero:
            orb = frozenset({ring.zero})
        orbits.append(orb)
        for b in orb:
            orbit_of[b] = orb

    def lab(orb) -> str:
        return "{" + ",".join(sorted(ring.label(x) for x in orb)) + "}"

    label = {orb: lab(orb) for orb in orbits}
    add = {}
    mul = {}
    for o1 in orbits:
        for o2 in orbits:
            sums = {label[orbit_of[ring.add(a, b)]] for a in o1 for b in o2}
            add[(label[o1], label[o2])] = sums
            r1, r2 = next(iter(o1)), next(iter(o2))
            mul[(label[o1], label[o2])] = label[orbit_of[ring.mul(r1, r2)]]
    zero = label[orbit_of[ring.zero]]
    one = label[orbit_of[ring.one]]
    neg = {label[o]: label[orbit_of[ring.neg(next(iter(o)))]] for o in orbits}
    return HyperTable([label[o] for o in orbits], zero, add, neg=neg, mul=mul, one=one)


def contains_krasner(ring: FiniteRing, group: frozenset):
    """Whether {0} u G is a subfield of the ring (the criterion for the
    two-element hyperfield to embed in R/G).

    Returns (flag, certificate): the certificate lists the candidate subfield
    on success or the additive-closure violation on failure. Requires
    |G| >= 2; the degenerate G = {1} is excluded.
    """
    group = frozenset(group)
    _check_subgroup(ring, group)
    if len(group) < 2:
        raise ValueError("edge case excluded: need |G| >= 2 (see open-questions note)")
    s = group | {ring.zero}
    for a in s:
        for b in s:
            if ring.add(a, b) not in s:
                certificate = {
                    "closed": False,
                    "witness": (ring.label(a), ring.label(b), ring.label(ring.add(a, b))),
                }
                return False, certificate
    # additively closed, 0 and 1 present, multiplicatively a group: a field
    return True, {"closed": True, "subfield": sorted(ring.label(x) for x in s)}


def kg_hyperfield(group: GroupTable) -> HyperTable:
    """Hyperfield on G u {0} extending the zero/nonzero arithmetic: the group
    law multiplies, 0 is absorbing, and hyperaddition is

        x + y = {x, y}        for distinct nonzero x, y
        x + x = {0} u G
        0 + x = {x}.

    For trivial G this is exactly the two-element hyperfield. (The variant
    with x+x = {0,x} fails associativity for any nontrivial G: with the
    witness (1,1,g) one side contains 0 and the other does not.)
    """
    zero = "0"
    if zero in group.elements:
        raise ValueError("group labels must not contain '0'")
    carrier = [zero] + list(group.elements)
    full = set(carrier)
    add = {}
    mul = {}
    for x in carrier:
        for y in carrier:
            if x == zero:
                add[(x, y)] = {y}
            elif y == zero:
                add[(x, y)] = {x}
            elif x == y:
                add[(x, y)] = set(full)
            else:
                add[(x, y)] = {x, y}
            if zero in (x, y):
                mul[(x, y)] = zero
            else:
                mul[(x, y)] = group.op[(x, y)]
    neg = {x: x for x in carrier}
    return HyperTable(carrier, zero, add, neg=neg, mul=mul, one=group.identity)


@dataclass(frozen=True)
class Geometry:
    """Points and lines; the pair axiom (two distinct points on exactly one
    line) is verified at construction time."""

    points: frozenset
    lines: frozenset

    def __post_init__(self):
        for line in self.lines:
            if len(line) < 2:
                raise ValueError("every line needs at least 2 points")
            if not line <= self.points:
                raise ValueError("line leaves the point set")
        for x, y in combinations(sorted(self.points), 2):
            through = [line for line in self.lines if x in line and y in line]
            if len(through) != 1:
                raise ValueError(f"points {x},{y} lie on {len(through)} lines")

    def min_line_size(self) -> int:
        return min((len(line) for line in self.lines), default=0)

    def all_lines_at_least(self, k: int) -> bool:
        return all(len(line) >= k for line in self.lines)


def prenowitz_geometry(table: HyperTable) -> Geometry:
    """The projective geometry of a vector space over the two-element
    hyperfield: points are the nonzero elements and the line through x, y is
    (x+y) u {x, y}.

    Preconditions (checked): the table is a canonical hypergroup and
    x+x = {0,x} for nonzero x.
    """
    from .hypercore import check_canonical_hypergroup

    report = check_canonical_hypergroup(table)
    if not report.passed:
        raise ValueError(f"not a canonical hypergroup: {report.summary()}")
    z = table.zero
    for x in table.carrier:
        if x != z and table.add[(x, x)] != frozenset({z, x}):
            raise ValueError(f"x+x must be {{0,x}}; fails at {x}")
    points = frozenset(c for c in table.carrier if c != z)
    lines = set()
    for x, y in combinations(sorted(points), 2):
        lines.add(frozenset(table.add[(x, y)] | {x, y}))
    return Geometry(points, frozenset(lines))


def rebuild_addition_from_geometry(geom: Geometry, zero: str = "0") -> dict:
    """Inverse of prenowitz_geometry: x+y = L(x,y) minus {x,y} for distinct
    points, x+x = {0,x}; used for the round-trip checks."""
    add = {}
    points = sorted(geom.points)
    for x in points:
        add[(x, x)] = {zero, x}
        add[(x, zero)] = {x}
        add[(zero, x)] = {x}
    add[(zero, zero)] = {zero}
    for x, y in combinations(points, 2):
        line = next(l for l in geom.lines if x in l and y in l)
        add[(x, y)] = set(line - {x, y})
        add[(y, x)] = add[(x, y)]
    return add
