"""Functions on the spectrum of the sign hyperfield: sign evaluations at real
algebraic points, their one-sided limits, the two points at infinity, the
Dedekind-cut real part, and the fiberwise hyperoperations, together with the
glued hypergroup that describes the resulting structure.

A finite point is omega_alpha (kernel = minimal polynomial of alpha) or
omega_alpha^{+-} (trivial kernel, one-sided limit): evaluation sends P to
sign P(alpha) or lim sign P(alpha +- eps).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .exactmath.algebraic import AlgebraicReal, refine_to_select, sign_at
from .exactmath.factorization import factor_q
from .exactmath.poly import IntPoly, poly_divmod_q, count_real_roots, root_bound
from .hypercore import GroupTable, HyperTable


@dataclass(frozen=True, eq=False)
class SignPoint:
    """A sign evaluation point: kind 'omega' (two-sided), 'side' (one-sided
    limit at an algebraic number) or 'inf' (limit at +-infinity).

    side is 0 for 'omega', else +-1; alpha is None for 'inf'.
    """

    kind: str
    alpha: AlgebraicReal | None = None
    side: int = 0

    def __post_init__(self):
        if self.kind not in ("omega", "side", "inf"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "inf":
            if self.alpha is not None or self.side not in (-1, 1):
                raise ValueError("infinite points carry only a sign")
        else:
            if not isinstance(self.alpha, AlgebraicReal):
                raise TypeError("finite points need an AlgebraicReal")
            if self.kind == "omega" and self.side != 0:
                raise ValueError("two-sided points have side 0")
            if self.kind == "side" and self.side not in (-1, 1):
                raise ValueError("one-sided points need side +-1")

    # -- constructors -------------------------------------------------------------

    @staticmethod
    def omega(alpha) -> "SignPoint":
        if not isinstance(alpha, AlgebraicReal):
            alpha = AlgebraicReal.from_rational(Fraction(alpha))
        return SignPoint("omega", alpha, 0)

    @staticmethod
    def one_sided(alpha, side: int) -> "SignPoint":
        if not isinstance(alpha, AlgebraicReal):
            alpha = AlgebraicReal.from_rational(Fraction(alpha))
        return SignPoint("side", alpha, side)

    @staticmethod
    def at(alpha, side: int) -> "SignPoint":
        """side 0 gives the two-sided point, else the one-sided one."""
        return SignPoint.omega(alpha) if side == 0 else SignPoint.one_sided(alpha, side)

    @staticmethod
    def infinity(sign: int) -> "SignPoint":
        return SignPoint("inf", None, sign)

    # -- identity -------------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind != "inf"

    def __eq__(self, other):
        if not isinstance(other, SignPoint):
            return NotImplemented
        if self.kind != other.kind or self.side != other.side:
            return False
        if self.kind == "inf":
            return True
        return self.alpha == other.alpha

    def __hash__(self):
        return hash((self.kind, self.side,
                     None if self.alpha is None else self.alpha.minpoly))

    def root_index(self) -> int:
        """1-based index of alpha among the sorted real roots of its minimal
        polynomial; stable canonical identifier."""
        if self.alpha is None:
            raise ValueError("infinite point")
        m = self.alpha.minpoly
        if m.degree == 1:
            return 1
        bound = root_bound(m)
        return count_real_roots(m, -bound - 1, self.alpha.lo) + 1

    def __str__(self):
        tag = {0: "", 1: "+", -1: "-"}[self.side]
        if self.kind == "inf":
            return f"omega{tag}:inf"
        return f"omega{tag}:{self.alpha.minpoly.to_text()}:#{self.root_index()}"

    def __repr__(self):
        return f"SignPoint({self})"


def _cmp_points(a: SignPoint, b: SignPoint) -> int:
    order = {"omega": 0, "side": 1, "inf": 2}
    if a.kind == "inf" or b.kind == "inf":
        if a.kind == b.kind:
            return (a.side > b.side) - (a.side < b.side)
        return 1 if a.kind == "inf" else -1
    if a.alpha == b.alpha:
        key = (a.side, order[a.kind]), (b.side, order[b.kind])
        return (key[0] > key[1]) - (key[0] < key[1])
    return -1 if a.alpha < b.alpha else 1


def sorted_points(points) -> list:
    return sorted(points, key=cmp_to_key(_cmp_points))


# -- evaluation ------------------------------------------------------------------


def evaluate(x: SignPoint, poly: IntPoly) -> int:
    """The sign the point assigns to an integer polynomial."""
    if poly.is_zero:
        return 0
    if x.kind == "inf":
        s = 1 if poly.lc > 0 else -1
        if x.side < 0 and poly.degree % 2 == 1:
            s = -s
        return s
    if x.kind == "omega":
        return sign_at(poly, x.alpha)
    # one-sided: split off the full power of the minimal polynomial
    a = x.alpha.minpoly
    k = 0
    rem_poly = poly.fraction_coeffs()
    while True:
        q, r = poly_divmod_q(rem_poly, a.fraction_coeffs())
        if r:
            break
        rem_poly = q
        k += 1
    if k == 0:
        return sign_at(poly, x.alpha)
    # clearing denominators by a positive constant preserves the sign
    den = _common_denominator(rem_poly)
    cofactor = IntPoly([int(c * den) for c in rem_poly])
    base = sign_at(cofactor, x.alpha)
    slope = sign_at(a.derivative(), x.alpha)
    return base * (slope * x.side) ** k


def _common_denominator(fracs) -> int:
    from math import lcm

    den = 1
    for c in fracs:
        den = lcm(den, c.denominator)
    return den


def real_part(x: SignPoint):
    """The Dedekind-cut real part: sup of rationals a with x(T-a) = +1.
    Returns the AlgebraicReal for finite points, +-inf otherwise."""
    if x.kind == "inf":
        return float("inf") if x.side > 0 else float("-inf")
    return x.alpha


# -- hyperoperations ----------------------------------------------------------------


def sign_hyperadd(s: int, t: int) -> frozenset:
    """Hyperaddition in the three-element hyperfield of signs."""
    if s == t:
        return frozenset({s})
    if s == 0:
        return frozenset({t})
    if t == 0:
        return frozenset({s})
    return frozenset({-1, 0, 1})


def _require_finite(*points):
    for x in points:
        if not x.is_finite:
            raise ValueError("hyperoperations with the infinite points are not defined")


def s_add(x: SignPoint, y: SignPoint) -> frozenset:
    """Hypersum: the underlying values add exactly; the side tags add in the
    sign hyperfield (two-sided = tag 0), so a one-sided pair of opposite
    sides produces all three points at the sum."""
    _require_finite(x, y)
    alpha = x.alpha + y.alpha
    tags = sign_hyperadd(x.side, y.side)
    return frozenset(SignPoint.at(alpha, t) for t in tags)


def s_mul(x: SignPoint, y: SignPoint) -> frozenset:
    """Hyperproduct: values multiply; at nonzero values the side tags combine
    as sign(alpha2)*s1 + sign(alpha1)*s2 in the sign hyperfield; a point at 0
    is absorbing up to the side rule s = s1 * y(T)."""
    _require_finite(x, y)
    if x.alpha.sign() == 0:
        s = x.side * evaluate(y, IntPoly([0, 1]))
        return frozenset({SignPoint.at(AlgebraicReal.from_rational(0), s)})
    if y.alpha.sign() == 0:
        s = y.side * evaluate(x, IntPoly([0, 1]))
        return frozenset({SignPoint.at(AlgebraicReal.from_rational(0), s)})
    alpha = x.alpha * y.alpha
    tags = sign_hyperadd(y.alpha.sign() * x.side, x.alpha.sign() * y.side)
    return frozenset(SignPoint.at(alpha, t) for t in tags)


def quotient_to_reals(x: SignPoint) -> AlgebraicReal:
    """The class of a finite point in the quotient by the kernel ideal of
    points over 0: determined by the real part alone."""
    _require_finite(x)
    return x.alpha


# -- first-order infinitesimal oracle ------------------------------------------------


_SIDE_REPS = {0: (Fraction(0),), 1: (Fraction(1), Fraction(2)),
              -1: (Fraction(-1), Fraction(-2))}


def epsilon_add_tags(x: SignPoint, y: SignPoint) -> frozenset:
    """Tags achievable for the hypersum by representing the points as
    alpha + t*eps to first order in eps: sign(t1 + t2) over representative
    slopes with the correct signs."""
    _require_finite(x, y)
    out = set()
    for t1 in _SIDE_REPS[x.side]:
        for t2 in _SIDE_REPS[y.side]:
            v = t1 + t2
            out.add((v > 0) - (v < 0))
    return frozenset(out)


def epsilon_mul_tags(x: SignPoint, y: SignPoint) -> frozenset:
    """Tags achievable for the hyperproduct to first order in eps: the slope
    of (alpha1 + t1 eps)(alpha2 + t2 eps) is t1*alpha2 + t2*alpha1 with real
    slopes t_j of the required signs.

    Rational slope pairs are decided exactly (interval refinement, with the
    exact-cancellation case detected through a rational rescaling equality);
    the magnitude-matched pair |t1| = |alpha1|, |t2| = |alpha2| contributes
    sign(s1*sign(alpha2) + s2*sign(alpha1)) and is what reaches the kernel
    member when the transported signs are opposite."""
    _require_finite(x, y)
    a1, a2 = x.alpha, y.alpha
    out = set()
    for t1 in _SIDE_REPS[x.side]:
        for t2 in _SIDE_REPS[y.side]:
            out.add(_slope_sign(a1, a2, t1, t2))
    if x.side != 0 and y.side != 0 and a1.sign() != 0 and a2.sign() != 0:
        # slope = |alpha1*alpha2| * (s1*sign(alpha2) + s2*sign(alpha1))
        out.add(_int_sign(x.side * a2.sign() + y.side * a1.sign()))
    return frozenset(out)


def _slope_sign(a1: AlgebraicReal, a2: AlgebraicReal, t1: Fraction, t2: Fraction) -> int:
    """Exact sign of t1*a2 + t2*a1."""
    if t1 == 0 and t2 == 0:
        return 0
    if t1 == 0:
        return _int_sign(t2) * a1.sign()
    if t2 == 0:
        return _int_sign(t1) * a2.sign()
    # exact cancellation iff a2 == -(t2/t1) * a1
    if a2 == a1.scale(-Fraction(t2, t1)):
        return 0
    u = a2.scale(t1).copy()
    v = a1.scale(t2).copy()
    while True:
        lo = u.lo + v.lo
        hi = u.hi + v.hi
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        u.refine()
        v.refine()


def _int_sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


# -- the glued hypergroup ------------------------------------------------------------


def glue_build(group: GroupTable, subgroup) -> HyperTable:
    """The quotient of (A x signs) identifying (a, s) with (a, 0) off the
    subgroup B, with hyperaddition computed over representatives: the
    carrier keeps three sign classes over B and one over its complement."""
    sub = frozenset(str(b) for b in subgroup)
    if group.identity not in sub:
        raise ValueError("subgroup must contain the identity")
    for a in sub:
        if group.inverse[a] not in sub:
            raise ValueError("subgroup not closed under inverse")
        for b in sub:
            if group.op[(a, b)] not in sub:
                raise ValueError("subgroup not closed under the group law")

    tag = {-1: "-", 0: "0", 1: "+"}

    def lab(a: str, s: int) -> str:
        return f"{a}|{tag[s]}"

    carrier = []
    reps = {}
    for a in group.elements:
        if a in sub:
            for s in (-1, 0, 1):
                carrier.append(lab(a, s))
                reps[lab(a, s)] = [(a, s)]
        else:
            carrier.append(lab(a, 0))
            reps[lab(a, 0)] = [(a, -1), (a, 0), (a, 1)]

    def project(a: str, s: int) -> str:
        return lab(a, s if a in sub else 0)

    add = {}
    for xl in carrier:
        for yl in carrier:
            out = set()
            for (a, s) in reps[xl]:
                for (b, t) in reps[yl]:
                    c = group.op[(a, b)]
                    for u in sign_hyperadd(s, t):
                        out.add(project(c, u))
            add[(xl, yl)] = out
    zero = lab(group.identity, 0)
    neg = {}
    for xl in carrier:
        a, s = reps[xl][0] if len(reps[xl]) == 1 else (reps[xl][1][0], 0)
        neg[xl] = project(group.inverse[a], -s)
    return HyperTable(carrier, zero, add, neg=neg)


# -- consistency sweep over the multiplicative bookkeeping ----------------------------


def sigma_check(samples: int = 60, seed: int = 0) -> dict:
    """Sampled verification that the product bookkeeping matches the glued
    multiplicative picture: sigma(omega_alpha^s) = (alpha, sign(alpha)*s)
    turns the hyperproduct into the componentwise rule (values multiply,
    transported tags hyperadd), and the T -> -T symmetry negates real parts."""
    rng = random.Random(seed)
    pool = _sample_pool()
    agree = 0
    sign_flip_ok = 0
    mismatches = []
    probes = [IntPoly.from_text(t) for t in ("T", "T^2-2", "T^3-1", "2*T+1", "T^2+T+1")]
    for _ in range(samples):
        a1 = rng.choice(pool)
        a2 = rng.choice(pool)
        s1 = rng.choice((-1, 0, 1))
        s2 = rng.choice((-1, 0, 1))
        x = SignPoint.at(a1, s1)
        y = SignPoint.at(a2, s2)
        got = {(p.alpha, p.alpha.sign() * p.side) for p in s_mul(x, y)}
        t1 = a1.sign() * s1
        t2 = a2.sign() * s2
        want_alpha = a1 * a2
        want = {(want_alpha, u) for u in sign_hyperadd(t1, t2)}
        if got == want:
            agree += 1
        elif len(mismatches) < 5:
            mismatches.append((str(x), str(y)))
        # T -> -T conjugation: evaluate at mirrored arguments
        mirrored = SignPoint.at(-a1, -s1)
        if all(evaluate(mirrored, q) == evaluate(x, q.reversed_roots()) for q in probes):
            sign_flip_ok += 1
    return {
        "samples": samples,
        "product_agree": agree,
        "mirror_agree": sign_flip_ok,
        "mismatches": mismatches,
    }


def _sample_pool() -> list:
    roots = []
    from .exactmath.algebraic import isolate_real_roots

    for text in ("T^2-2", "T^2-3", "T^3-2", "T^2-2*T-1", "T^3-3*T-1"):
        roots.extend(isolate_real_roots(IntPoly.from_text(text)))
    roots.extend(AlgebraicReal.from_rational(Fraction(n, d))
                 for n, d in ((1, 1), (-2, 1), (3, 2), (-5, 3)))
    return [r for r in roots if r.sign() != 0]
