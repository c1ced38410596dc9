"""The characteristic-one hyperfield structure on the rational line: the
sign-convex hyperaddition c(x,y), finite unions of points and open intervals
as values, exponentiation automorphisms, and the generic ordered-group
construction S(G) that specializes back to it.

All set endpoints are exact rationals, with float('inf') sentinels for the
unbounded ends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

INF = float("inf")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _fmt_q(q) -> str:
    if q == INF:
        return "inf"
    if q == -INF:
        return "-inf"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Point:
    value: Fraction

    def __str__(self):
        return "{" + _fmt_q(self.value) + "}"


@dataclass(frozen=True)
class OpenInterval:
    lo: object  # Fraction or -inf
    hi: object  # Fraction or +inf

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo},{self.hi})")

    def __str__(self):
        return f"({_fmt_q(self.lo)},{_fmt_q(self.hi)})"


def _atom_inf(a):
    return a.value if isinstance(a, Point) else a.lo


def _order_key(v):
    """Total-order key over Fraction endpoints and the two infinities."""
    if v == -INF:
        return (-1, 0)
    if v == INF:
        return (1, 0)
    return (0, v)


class SignConvexSet:
    """A finite union of rational points and open rational intervals, kept in
    a canonical sorted, disjoint, maximally-merged form."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        self.atoms = self._canonicalize(list(atoms))

    @staticmethod
    def point(q) -> "SignConvexSet":
        return SignConvexSet([Point(Fraction(q))])

    @staticmethod
    def points(qs) -> "SignConvexSet":
        return SignConvexSet([Point(Fraction(q)) for q in qs])

    @staticmethod
    def interval(lo, hi) -> "SignConvexSet":
        lo = lo if lo == -INF else Fraction(lo)
        hi = hi if hi == INF else Fraction(hi)
        return SignConvexSet([OpenInterval(lo, hi)])

    @staticmethod
    def _canonicalize(atoms: list) -> tuple:
        intervals = []
        points = set()
        for a in atoms:
            if isinstance(a, Point):
                points.add(a.value)
            else:
                intervals.append((a.lo, a.hi))
        # merge overlapping intervals, and intervals joined by a point atom
        merged = []
        for lo, hi in sorted(intervals, key=lambda ab: _order_key(ab[0])):
            if merged and lo < merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            elif merged and lo == merged[-1][1] and lo in points:
                points.discard(lo)
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        out = []
        for lo, hi in merged:
            points -= {v for v in points if lo < v < hi}
            out.append(OpenInterval(lo, hi))
        out.extend(Point(v) for v in points)
        out.sort(key=lambda a: (_order_key(_atom_inf(a)), isinstance(a, OpenInterval)))
        return tuple(out)

    # -- set algebra ---------------------------------------------------------------

    def union(self, other: "SignConvexSet") -> "SignConvexSet":
        return SignConvexSet(self.atoms + other.atoms)

    def __contains__(self, q) -> bool:
        q = Fraction(q)
        for a in self.atoms:
            if isinstance(a, Point):
                if a.value == q:
                    return True
            elif a.lo < q < a.hi:
                return True
        return False

    def __eq__(self, other) -> bool:
        return isinstance(other, SignConvexSet) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def scaled(self, a) -> "SignConvexSet":
        """Image under multiplication by the rational a."""
        a = Fraction(a)
        if a == 0:
            return SignConvexSet.point(0)

        def end(v):
            if v == INF:
                return INF if a > 0 else -INF
            if v == -INF:
                return -INF if a > 0 else INF
            return v * a

        out = []
        for atom in self.atoms:
            if isinstance(atom, Point):
                out.append(Point(atom.value * a))
            else:
                lo, hi = end(atom.lo), end(atom.hi)
                out.append(OpenInterval(min(lo, hi), max(lo, hi)))
        return SignConvexSet(out)

    def negated(self) -> "SignConvexSet":
        return self.scaled(-1)

    def sample_rationals(self) -> list:
        """One simple rational from each atom (plus each point value)."""
        out = []
        for a in self.atoms:
            if isinstance(a, Point):
                out.append(a.value)
            else:
                out.append(simplest_rational_between(a.lo, a.hi))
        return out

    def __str__(self):
        if not self.atoms:
            return "{}"
        return " u ".join(str(a) for a in self.atoms)

    __repr__ = __str__


def simplest_rational_between(lo, hi) -> Fraction:
    """The Stern-Brocot simplest rational strictly between lo and hi."""
    if lo == -INF and hi == INF:
        return Fraction(0)
    if lo == -INF:
        return Fraction(_floor_strict(hi))
    if hi == INF:
        return Fraction(_ceil_strict(lo))
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_rational_between(-hi, -lo)
    # 0 <= lo < hi: walk the Stern-Brocot tree
    a, b, c, d = 0, 1, 1, 0
    while True:
        m = Fraction(a + c, b + d)
        if m <= lo:
            a, b = m.numerator, m.denominator
        elif m >= hi:
            c, d = m.numerator, m.denominator
        else:
            return m


def _floor_strict(x) -> int:
    """Largest integer strictly below x."""
    x = Fraction(x)
    n = x.numerator // x.denominator
    return n - 1 if Fraction(n) == x else n


def _ceil_strict(x) -> int:
    x = Fraction(x)
    return -_floor_strict(-x)


# -- the hyperaddition case table ------------------------------------------------


def c_add(x, y) -> SignConvexSet:
    """Hypersum of two rationals in closed form.

    0 is neutral; x+x = {x}; x+(-x) = {-x,0,x}; same-sign pairs give the open
    interval between them; for x < 0 < y the result is (x,0) u (y,inf) when
    -x < y and (-inf,x) u (0,y) when -x > y.
    """
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        return SignConvexSet.point(y)
    if y == 0:
        return SignConvexSet.point(x)
    if x == y:
        return SignConvexSet.point(x)
    if x == -y:
        return SignConvexSet.points([-abs(x), 0, abs(x)])
    if _sgn(x) == _sgn(y):
        return SignConvexSet.interval(min(x, y), max(x, y))
    neg, pos = (x, y) if x < 0 else (y, x)
    if -neg < pos:
        return SignConvexSet.interval(neg, 0).union(SignConvexSet.interval(pos, INF))
    return SignConvexSet.interval(-INF, neg).union(SignConvexSet.interval(0, pos))


def c_add_membership_oracle(x, y, z, grid: int = 200) -> bool:
    """Definitional witness search: is there a pair of positive rationals
    (alpha, beta), numerators and denominators at most `grid`, with
    alpha*x + beta*y = z and sign(alpha*x + beta*y) = alpha*sign(x) +
    beta*sign(y)? Used purely as a test oracle for c_add.

    The two constraints form a linear system, so the search is realized by
    solving it exactly: in nondegenerate directions the witness is unique,
    and the degenerate directions (a zero input or y = +-x) reduce to
    one-dimensional families with canonical small witnesses."""
    if grid < 1:
        raise ValueError("grid must be at least 1")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    sx, sy, sz = _sgn(x), _sgn(y), _sgn(z)

    def on_grid(q: Fraction) -> bool:
        return q > 0 and q.numerator <= grid and q.denominator <= grid

    det = x * sy - y * sx
    if det != 0:
        alpha = Fraction(z * sy - y * sz, det)
        beta = Fraction(x * sz - z * sx, det)
        return on_grid(alpha) and on_grid(beta) and alpha * x + beta * y == z
    if x == 0 and y == 0:
        return z == 0
    if x == 0:  # beta*sy = sz forces beta = 1 and z = y
        return z == y
    if y == 0:
        return z == x
    if y == x:  # total weight alpha+beta = 1, so z = x with witness (1/2, 1/2)
        return z == x and on_grid(Fraction(1, 2))
    # y = -x: alpha - beta = sz*sx with z = (alpha-beta)*x
    if z == 0:
        return on_grid(Fraction(1))
    d = sz * sx
    return z == d * x and on_grid(Fraction(2)) and on_grid(Fraction(1))


# -- hypersums of whole sets -------------------------------------------------------


def _split_sign_pure(s: SignConvexSet) -> list:
    """Rewrite atoms so intervals never straddle 0 (insert the point 0)."""
    out = []
    for a in s.atoms:
        if isinstance(a, OpenInterval) and a.lo < 0 < a.hi:
            out.extend([OpenInterval(a.lo, Fraction(0)), Point(Fraction(0)),
                        OpenInterval(Fraction(0), a.hi)])
        else:
            out.append(a)
    return out


def _pt_iv(a: Fraction, j: OpenInterval) -> SignConvexSet:
    """Union of c(a, t) over t in the sign-pure open interval j."""
    if a == 0:
        return SignConvexSet([j])
    if a < 0:
        return _pt_iv(-a, OpenInterval(-j.hi, -j.lo)).negated()
    u, v = j.lo, j.hi
    out = []
    if u >= 0:  # same sign
        lo_piece_hi = min(v, a)
        if u < lo_piece_hi:  # t < a part: union of (t, a)
            out.append(OpenInterval(u, a))
        hi_piece_lo = max(u, a)
        if hi_piece_lo < v:  # t > a part: union of (a, t)
            out.append(OpenInterval(a, v))
        if u < a < v:
            out.append(Point(a))
    else:  # j negative, a positive
        # t in (-a, 0): c(a,t) = (t,0) u (a,inf)
        s = max(u, -a)
        if s < v:
            out.append(OpenInterval(s, Fraction(0)))
            out.append(OpenInterval(a, INF))
        # t = -a: three points
        if u < -a < v:
            out.extend([Point(-a), Point(Fraction(0)), Point(a)])
        # t in (-inf, -a): c(a,t) = (-inf,t) u (0,a)
        t_hi = min(v, -a)
        if u < t_hi:
            out.append(OpenInterval(-INF, t_hi))
            out.append(OpenInterval(Fraction(0), a))
    return SignConvexSet(out)


def _iv_iv(j1: OpenInterval, j2: OpenInterval) -> SignConvexSet:
    """Union of c(x, y) over x in j1, y in j2, both sign-pure."""
    n1 = j1.hi <= 0
    n2 = j2.hi <= 0
    if n1 and n2:
        return _iv_iv(OpenInterval(-j1.hi, -j1.lo), OpenInterval(-j2.hi, -j2.lo)).negated()
    if not n1 and not n2:
        lo = min(j1.lo, j2.lo)
        hi = max(j1.hi, j2.hi)
        return SignConvexSet([OpenInterval(lo, hi)])
    if n2:
        j1, j2 = j2, j1  # now j1 negative, j2 positive
    u1, v1 = j1.lo, j1.hi
    u2, v2 = j2.lo, j2.hi
    out = []
    # pairs with -x < y: (x,0) and (y,inf) pieces
    if -v1 < v2:
        s = max(u1, -v2) if u1 != -INF else -v2
        out.append(OpenInterval(s, Fraction(0)))
        s2 = max(u2, -v1)
        out.append(OpenInterval(s2, INF))
    # pairs with -x = y: symmetric triple band
    s = max(-v1, u2)
    t = min(-u1, v2) if u1 != -INF else v2
    if s < t:
        out.append(OpenInterval(s, t))
        out.append(OpenInterval(-t, -s))
        out.append(Point(Fraction(0)))
    # pairs with -x > y: (-inf,x) and (0,y) pieces
    if (-u1 if u1 != -INF else INF) > u2:
        out.append(OpenInterval(-INF, min(v1, -u2)))
        out.append(OpenInterval(Fraction(0), min(v2, -u1) if u1 != -INF else v2))
    return SignConvexSet(out)


def c_add_set(a: SignConvexSet, b: SignConvexSet) -> SignConvexSet:
    """Pointwise hypersum of two sets, computed atom pair by atom pair in
    closed form; needed for associativity checking."""
    result = SignConvexSet()
    for x in _split_sign_pure(a):
        for y in _split_sign_pure(b):
            if isinstance(x, Point) and isinstance(y, Point):
                piece = c_add(x.value, y.value)
            elif isinstance(x, Point):
                piece = _pt_iv(x.value, y)
            elif isinstance(y, Point):
                piece = _pt_iv(y.value, x)
            else:
                piece = _iv_iv(x, y)
            result = result.union(piece)
    return result


# -- exponentiation automorphisms ---------------------------------------------------


def theta(lam, x):
    """sign(x) * |x|^lam: exact Fraction for integer lam, float otherwise."""
    if lam == 0:
        raise ValueError("exponent must be nonzero")
    if isinstance(lam, int) or (isinstance(lam, Fraction) and lam.denominator == 1):
        lam = int(lam)
        x = Fraction(x)
        if x == 0:
            return Fraction(0)
        mag = abs(x) ** lam if lam > 0 else Fraction(1) / abs(x) ** (-lam)
        return _sgn(x) * mag
    xf = float(x)
    if xf == 0.0:
        return 0.0
    return _sgn(xf) * abs(xf) ** float(lam)


def theta_set(lam, s: SignConvexSet) -> SignConvexSet:
    """Image of a set under theta_lam (integer lam): monotone on each side of
    zero, so intervals map endpoint-to-endpoint."""
    lam = int(lam)

    def ext(q, side: int):
        # side: sign of the interval body, used for the 0 and inf limits
        if q == INF:
            return INF if lam > 0 else Fraction(0)
        if q == -INF:
            return -INF if lam > 0 else Fraction(0)
        if q == 0:
            if lam > 0:
                return Fraction(0)
            return INF if side > 0 else -INF
        return theta(lam, q)

    out = []
    for a in s.atoms:
        if isinstance(a, Point):
            out.append(Point(theta(lam, a.value)))
        else:
            side = 1 if a.hi > 0 else -1
            p, q = ext(a.lo, side), ext(a.hi, side)
            lo, hi = (p, q) if p < q else (q, p)
            out.append(OpenInterval(lo, hi))
    return SignConvexSet(out)


# -- the generic ordered-group construction -----------------------------------------


@dataclass
class OrderedGroup:
    """A dense totally ordered abelian group with no extremes, given
    behaviorally: compare, compose, inverse, identity, plus a density witness
    (between) and unboundedness witnesses (above/below)."""

    name: str
    compare: Callable
    compose: Callable
    inverse: Callable
    identity: object
    between: Callable
    above: Callable
    below: Callable

    def lt(self, a, b) -> bool:
        return self.compare(a, b) < 0


def positive_rationals() -> OrderedGroup:
    return OrderedGroup(
        name="Q_>0 (multiplicative)",
        compare=lambda a, b: (a > b) - (a < b),
        compose=lambda a, b: a * b,
        inverse=lambda a: 1 / Fraction(a),
        identity=Fraction(1),
        between=lambda a, b: (Fraction(a) + Fraction(b)) / 2,
        above=lambda a: 2 * Fraction(a),
        below=lambda a: Fraction(a) / 2,
    )


# S(G) elements: (sign, g) with sign in {-1, +1}, or SG_ZERO
SG_ZERO = (0, None)


def sg_element(sign: int, g) -> tuple:
    if sign == 0:
        return SG_ZERO
    return (sign, g)


@dataclass(frozen=True)
class SgPoint:
    sign: int
    g: object


@dataclass(frozen=True)
class SgZero:
    pass


@dataclass(frozen=True)
class SgInterval:
    """{t : glo < t < ghi} inside the sign-tagged copy of G, open."""
    sign: int
    glo: object
    ghi: object


@dataclass(frozen=True)
class SgRayAbove:
    """{t : t > g} inside the sign-tagged copy."""
    sign: int
    g: object


@dataclass(frozen=True)
class SgRayBelow:
    """{t : t < g} inside the sign-tagged copy."""
    sign: int
    g: object


def _sg_negate(atoms: list) -> list:
    out = []
    for a in atoms:
        if isinstance(a, SgZero):
            out.append(a)
        elif isinstance(a, SgPoint):
            out.append(SgPoint(-a.sign, a.g))
        elif isinstance(a, SgInterval):
            out.append(SgInterval(-a.sign, a.glo, a.ghi))
        elif isinstance(a, SgRayAbove):
            out.append(SgRayAbove(-a.sign, a.g))
        else:
            out.append(SgRayBelow(-a.sign, a.g))
    return out


def sg_add(x: tuple, y: tuple, group: OrderedGroup) -> frozenset:
    """Hypersum in S(G) = -G u {0} u G, as a set of symbolic atoms.

    Positive pairs give the open order-interval (or the point itself when
    equal); opposite pairs of equal magnitude give {0, x, -x}; opposite pairs
    of different magnitude give a ray above the larger magnitude with that
    magnitude's sign, together with the opposite-signed ray below the smaller
    magnitude. The mixed rule is forced by negation symmetry.
    """
    sx, gx = x
    sy, gy = y
    if sx == 0:
        return frozenset({SgPoint(sy, gy) if sy else SgZero()})
    if sy == 0:
        return frozenset({SgPoint(sx, gx)})
    if sx < 0 and sy < 0:
        return frozenset(_sg_negate(list(sg_add((1, gx), (1, gy), group))))
    if sx < 0:  # commute so the first argument is positive
        x, y = y, x
        sx, gx = x
        sy, gy = y
    if sy > 0:
        cmp = group.compare(gx, gy)
        if cmp == 0:
            return frozenset({SgPoint(1, gx)})
        lo, hi = (gx, gy) if cmp < 0 else (gy, gx)
        return frozenset({SgInterval(1, lo, hi)})
    # x positive, y negative
    cmp = group.compare(gx, gy)
    if cmp == 0:
        return frozenset({SgZero(), SgPoint(1, gx), SgPoint(-1, gx)})
    if cmp > 0:  # |x| > |y|
        return frozenset({SgRayAbove(1, gx), SgRayBelow(-1, gy)})
    return frozenset({SgRayBelow(1, gx), SgRayAbove(-1, gy)})


def sg_to_sign_convex(atoms: frozenset) -> SignConvexSet:
    """Transport an S(Q_>0) value to the rational line: (+,g) -> g,
    (-,g) -> -g, rays toward the identity edge become (0,g) or (-g,0)."""
    out = []
    for a in atoms:
        if isinstance(a, SgZero):
            out.append(Point(Fraction(0)))
        elif isinstance(a, SgPoint):
            out.append(Point(a.sign * Fraction(a.g)))
        elif isinstance(a, SgInterval):
            lo, hi = Fraction(a.glo), Fraction(a.ghi)
            out.append(OpenInterval(lo, hi) if a.sign > 0 else OpenInterval(-hi, -lo))
        elif isinstance(a, SgRayAbove):
            g = Fraction(a.g)
            out.append(OpenInterval(g, INF) if a.sign > 0 else OpenInterval(-INF, -g))
        else:
            g = Fraction(a.g)
            out.append(OpenInterval(Fraction(0), g) if a.sign > 0 else OpenInterval(-g, Fraction(0)))
    return SignConvexSet(out)


def _rational_to_sg(q: Fraction) -> tuple:
    q = Fraction(q)
    if q == 0:
        return SG_ZERO
    return (1, q) if q > 0 else (-1, -q)


def sg_matches_rconvex(samples: int = 1000, seed: int = 0) -> dict:
    """Sampled agreement check between the S(Q_>0) rules and the rational
    case table, under the sign/magnitude identification."""
    rng = random.Random(seed)
    group = positive_rationals()
    agree = 0
    mismatches = []
    for i in range(samples):
        if i % 5 == 0:
            x = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
            y = -x if i % 10 == 0 else x
        else:
            x = Fraction(rng.randint(-60, 60), rng.randint(1, 40))
            y = Fraction(rng.randint(-60, 60), rng.randint(1, 40))
        via_sg = sg_to_sign_convex(sg_add(_rational_to_sg(x), _rational_to_sg(y), group))
        direct = c_add(x, y)
        if via_sg == direct:
            agree += 1
        elif len(mismatches) < 5:
            mismatches.append((x, y, str(via_sg), str(direct)))
    return {"samples": samples, "agree": agree, "mismatches": mismatches}
