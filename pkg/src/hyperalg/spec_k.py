"""Functions on the spectrum of the two-element hyperfield: points of
Spec(Z[T]) organized by fiber over Spec(Z), with the fiberwise hyperaddition
and hypermultiplication computed through resultants and factorization.

A point is either the generic point of its fiber (trivial kernel) or a
closed point, labeled by the canonical generator of its kernel: a primitive
irreducible integer polynomial with positive leading coefficient in
characteristic zero, or a monic irreducible polynomial over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import mpmath

from .exactmath.factorization import factor_fp, factor_q, is_irreducible_q
from .exactmath.gfpoly import GF, FpPoly, fp_gcd, is_irreducible, is_prime
from .exactmath.poly import (
    IntPoly,
    poly_divmod_q,
    product_combination_poly,
    squarefree_part,
    sum_combination_poly,
)


class OracleInconclusive(ArithmeticError):
    """Raised when float root rounding cannot be trusted."""


@dataclass(frozen=True)
class SpecKPoint:
    """A point of Spec(Z[T]) as seen by the two-element hyperfield.

    fiber: 0 for characteristic zero, else the prime p.
    poly: None for the generic point of the fiber; otherwise the canonical
    kernel generator (IntPoly over fiber 0, FpPoly over fiber p).
    """

    fiber: int
    poly: object = None

    def __post_init__(self):
        if self.fiber == 0:
            if self.poly is not None:
                q = self.poly
                if not isinstance(q, IntPoly):
                    raise TypeError("fiber-0 closed points take an IntPoly")
                if not q.is_primitive():
                    raise ValueError("kernel generator must be primitive with lc > 0")
                if not is_irreducible_q(q):
                    raise ValueError(f"{q.to_text()} is not irreducible over Q")
        else:
            if not is_prime(self.fiber):
                raise ValueError(f"fiber {self.fiber} is not prime")
            if self.poly is not None:
                a = self.poly
                if not isinstance(a, FpPoly) or a.p != self.fiber:
                    raise TypeError("fiber-p closed points take an FpPoly mod p")
                if a.is_zero or a.lc != 1:
                    raise ValueError("kernel generator must be monic")
                if not is_irreducible(a):
                    raise ValueError("kernel generator must be irreducible")

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def generic(fiber: int = 0) -> "SpecKPoint":
        return SpecKPoint(fiber, None)

    @staticmethod
    def closed0(q: IntPoly) -> "SpecKPoint":
        return SpecKPoint(0, q.primitive())

    @staticmethod
    def closedp(p: int, a: FpPoly) -> "SpecKPoint":
        return SpecKPoint(p, a.monic())

    # -- queries ----------------------------------------------------------------

    @property
    def is_generic(self) -> bool:
        return self.poly is None

    @property
    def is_zero_point(self) -> bool:
        """The class of the zero element: kernel (T) in its fiber."""
        if self.poly is None:
            return False
        return tuple(self.poly.coeffs) == (0, 1)

    def negated(self) -> "SpecKPoint":
        """The point whose roots are the negatives: kernel generator q(-T)."""
        if self.poly is None:
            return self
        if self.fiber == 0:
            return SpecKPoint(0, self.poly.reversed_roots().primitive())
        flipped = FpPoly(self.fiber,
                         [c if i % 2 == 0 else -c for i, c in enumerate(self.poly.coeffs)])
        return SpecKPoint(self.fiber, flipped.monic())

    def sort_key(self):
        if self.poly is None:
            return (self.fiber, 0, ())
        return (self.fiber, 1 + self.poly.degree, tuple(self.poly.coeffs))

    def __str__(self):
        if self.fiber == 0:
            return "delta" if self.poly is None else self.poly.to_text()
        if self.poly is None:
            return f"delta_{self.fiber}"
        return self.poly.to_int_poly().to_text()


def fiber_of(x: SpecKPoint) -> int:
    """0 for characteristic-zero points, else the residue prime."""
    return x.fiber


@dataclass(frozen=True)
class HyperResult:
    """Value of a hyperoperation on Spec points: a finite set, a whole fiber,
    a fiber minus its zero class, or empty (mixed fibers).

    kind: 'finite' | 'fiber_all' | 'fiber_nonzero' | 'empty'.
    """

    kind: str
    fiber: int | None = None
    points: frozenset = frozenset()

    @staticmethod
    def finite(points) -> "HyperResult":
        pts = frozenset(points)
        if not pts:
            raise ValueError("finite results must be nonempty")
        return HyperResult("finite", None, pts)

    @staticmethod
    def fiber_all(fiber: int) -> "HyperResult":
        return HyperResult("fiber_all", fiber)

    @staticmethod
    def fiber_nonzero(fiber: int) -> "HyperResult":
        return HyperResult("fiber_nonzero", fiber)

    @staticmethod
    def empty() -> "HyperResult":
        return HyperResult("empty")

    def __contains__(self, point: SpecKPoint) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "finite":
            return point in self.points
        if point.fiber != self.fiber:
            return False
        if self.kind == "fiber_all":
            return True
        return not point.is_zero_point

    def sorted_points(self) -> list:
        if self.kind != "finite":
            raise ValueError("only finite results enumerate points")
        return sorted(self.points, key=SpecKPoint.sort_key)

    def __str__(self):
        if self.kind == "empty":
            return "EMPTY"
        if self.kind == "fiber_all":
            return "FIBER_ALL"
        if self.kind == "fiber_nonzero":
            return "FIBER_NONZERO"
        return " ".join(str(p) for p in self.sorted_points())


# -- the fiberwise pipelines -------------------------------------------------------


def _lift(a: FpPoly) -> IntPoly:
    return IntPoly(a.coeffs)


def _closed_points_0(combined: IntPoly) -> frozenset:
    flat = squarefree_part(combined)
    _, factors = factor_q(flat)
    return frozenset(SpecKPoint(0, m) for m, _ in factors)


def _closed_points_p(combined: IntPoly, p: int) -> frozenset:
    reduced = FpPoly.from_int_poly(combined, p)
    if reduced.is_zero:
        raise ArithmeticError("resultant vanished mod p")
    return frozenset(SpecKPoint(p, irr) for irr, _ in factor_fp(reduced))


def spec_add(x: SpecKPoint, y: SpecKPoint) -> HyperResult:
    """Fiberwise hypersum of two points.

    Mixed fibers give the empty set. In fiber 0, two closed points combine
    through the resultant of q1(T) and q2(Z-T) (square-free part, factored);
    the generic point absorbs everything except rational closed partners,
    which return the generic point alone. In fiber p the generic point is
    idempotent against every closed point.
    """
    if x.fiber != y.fiber:
        return HyperResult.empty()
    p = x.fiber
    if x.is_generic and y.is_generic:
        return HyperResult.fiber_all(p)
    if x.is_generic or y.is_generic:
        closed = y if x.is_generic else x
        if p == 0:
            if closed.poly.degree == 1:
                return HyperResult.finite({SpecKPoint.generic(0)})
            return HyperResult.fiber_all(0)
        return HyperResult.finite({SpecKPoint.generic(p)})
    if p == 0:
        combined = sum_combination_poly(x.poly, y.poly)
        return HyperResult.finite(_closed_points_0(combined))
    combined = sum_combination_poly(_lift(x.poly), _lift(y.poly))
    return HyperResult.finite(_closed_points_p(combined, p))


def spec_mul(x: SpecKPoint, y: SpecKPoint) -> HyperResult:
    """Fiberwise hyperproduct of two points.

    The zero class absorbs. In fiber 0 a closed point combines with the
    generic point to {generic} exactly when some power of its roots is
    rational (is_qroot); otherwise the result is the whole fiber minus the
    zero class. Closed pairs go through the resultant of q1(T) and
    T^m q2(Z/T).
    """
    if x.fiber != y.fiber:
        return HyperResult.empty()
    p = x.fiber
    zero = _zero_point(p)
    if x.is_zero_point or y.is_zero_point:
        return HyperResult.finite({zero})
    if x.is_generic and y.is_generic:
        return HyperResult.fiber_nonzero(p)
    if x.is_generic or y.is_generic:
        closed = y if x.is_generic else x
        if p == 0:
            if is_qroot(closed.poly):
                return HyperResult.finite({SpecKPoint.generic(0)})
            return HyperResult.fiber_nonzero(0)
        return HyperResult.finite({SpecKPoint.generic(p)})
    if p == 0:
        combined = product_combination_poly(x.poly, y.poly)
        return HyperResult.finite(_closed_points_0(combined))
    combined = product_combination_poly(_lift(x.poly), _lift(y.poly))
    return HyperResult.finite(_closed_points_p(combined, p))


def _zero_point(p: int) -> SpecKPoint:
    if p == 0:
        return SpecKPoint(0, IntPoly([0, 1]))
    return SpecKPoint(p, FpPoly(p, [0, 1]))


def is_qroot(q: IntPoly, bound: int | None = None) -> bool:
    """Whether the roots of the irreducible q have a rational power: is there
    n >= 1 with T^n congruent to a constant mod q? Searched up to `bound`
    (default 2*deg^2; the minimal such n has no proven a-priori bound here,
    so exhaustiveness beyond the bound is not claimed)."""
    if tuple(q.coeffs) == (0, 1):
        raise ValueError("the zero class has no root powers")
    d = q.degree
    if d == 1:
        return True
    if bound is None:
        bound = 2 * d * d
    mq = q.fraction_coeffs()
    power = [Fraction(0), Fraction(1)]  # T
    for _ in range(bound):
        if len(power) - 1 <= 0:
            return True
        # multiply by T, reduce mod q
        power = [Fraction(0)] + power
        _, power = poly_divmod_q(power, mq)
        if len(power) <= 1:
            return True
    return False


# -- brute-force oracles (independent verification paths) ---------------------------


def brute_oracle_fiber0(q1: IntPoly, q2: IntPoly, op: str, dps: int = 60) -> frozenset:
    """Numerical root oracle for fiber 0: combine high-precision complex
    roots pairwise, re-expand the monic polynomial, rescale by the known
    denominator lc1^deg2 * lc2^deg1 and round to integers."""
    if op not in ("sum", "product"):
        raise ValueError("op must be 'sum' or 'product'")
    if q1.degree > 6 or q2.degree > 6:
        raise ValueError("oracle limited to degree <= 6")
    with mpmath.workdps(dps):
        r1 = mpmath.polyroots([mpmath.mpf(c) for c in reversed(q1.coeffs)], maxsteps=200, extraprec=120)
        r2 = mpmath.polyroots([mpmath.mpf(c) for c in reversed(q2.coeffs)], maxsteps=200, extraprec=120)
        combos = []
        for a in r1:
            for b in r2:
                combos.append(a + b if op == "sum" else a * b)
        poly = [mpmath.mpc(1)]
        for v in combos:
            nxt = [mpmath.mpc(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= c * v
            poly = nxt
        scale = q1.lc ** q2.degree * q2.lc ** q1.degree
        coeffs = []
        for c in poly:
            target = c * scale
            nearest = mpmath.nint(target.real)
            if abs(target.real - nearest) > 1e-6 or abs(target.imag) > 1e-6:
                raise OracleInconclusive(f"coefficient {target} too far from an integer")
            coeffs.append(int(nearest))
    combined = IntPoly(coeffs)
    flat = squarefree_part(combined)
    _, factors = factor_q(flat)
    return frozenset(m for m, _ in factors)


def brute_oracle_fiberp(a: FpPoly, b: FpPoly, op: str) -> frozenset:
    """Exhaustive oracle for fiber p: enumerate the roots inside F_{p^k},
    k = lcm of the degrees, combine them, and take Frobenius-orbit minimal
    polynomials."""
    if op not in ("sum", "product"):
        raise ValueError("op must be 'sum' or 'product'")
    if a.p != b.p:
        raise ValueError("mixed characteristics")
    p = a.p
    k = lcm(max(a.degree, 1), max(b.degree, 1))
    if p**k > 10**6:
        raise ValueError(f"field F_{p}^{k} too large for enumeration")
    field = GF(p, k)
    roots_a = field.roots_of(a)
    roots_b = field.roots_of(b)
    if len(roots_a) != a.degree or len(roots_b) != b.degree:
        raise ArithmeticError("input not separable of full degree in the chosen field")
    out = set()
    for ra in roots_a:
        for rb in roots_b:
            v = field.add(ra, rb) if op == "sum" else field.mul(ra, rb)
            out.add(field.minimal_polynomial(v))
    return frozenset(out)


# -- characteristic-p additive/multiplicative scaffolding ----------------------------


def char_p_identities(p: int, a: FpPoly) -> dict:
    """Verify the divisibility and additivity facts that drive the fiber-p
    generic-point rules: with n = deg a, a divides T^(p^n) - T; when a is not
    the zero class, a divides T^(p^n - 1) - 1; and T^(p^n) - T is additive,
    checked by expanding (X+Y)^(p^n) mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a.p != p or not is_irreducible(a):
        raise ValueError("need an irreducible polynomial mod p")
    n = a.degree
    q = p**n
    s_m = FpPoly(p, [0, -1] + [0] * (q - 2) + [1])  # T^(p^n) - T
    report = {
        "degree": n,
        "s_divides": (s_m % a).is_zero,
        "u_divides": None,
        "s_additive": True,
    }
    if tuple(a.coeffs) != (0, 1):
        u_k = FpPoly(p, [-1] + [0] * (q - 2) + [1])  # T^(p^n - 1) - 1
        report["u_divides"] = (u_k % a).is_zero
    from math import comb

    for i in range(1, q):
        if comb(q, i) % p:
            report["s_additive"] = False
            break
    return report


def canonical_witnesses() -> dict:
    """The standing witness polynomials used by the generic-point table
    checks: rational, quadratic irrational, non-root-power unit, root of
    unity, and the zero class."""
    return {
        "sqrt2": IntPoly.from_text("T^2-2"),
        "half": IntPoly.from_text("2*T-1"),
        "silver": IntPoly.from_text("T^2-2*T-1"),
        "omega": IntPoly.from_text("T^2+T+1"),
        "zero": IntPoly.from_text("T"),
    }
