"""Exact real algebraic numbers: minimal polynomial plus isolating interval.

Every value is represented by a primitive irreducible IntPoly with positive
leading coefficient and a rational interval (lo, hi) containing exactly one
real root, with minpoly(lo) and minpoly(hi) nonzero. Rationals always carry
the linear polynomial den*T - num, so equality is decidable by minimal
polynomial comparison plus a root count on the interval overlap.
"""

from __future__ import annotations

from fractions import Fraction

from .factorization import factor_q
from .poly import (
    IntPoly,
    count_real_roots,
    is_squarefree,
    poly_divmod_q,
    product_combination_poly,
    root_bound,
    squarefree_part,
    sturm_chain,
    sturm_variations,
    sum_combination_poly,
)


class AlgebraicReal:
    """A real algebraic number in canonical (minpoly, isolating interval) form."""

    __slots__ = ("minpoly", "lo", "hi")

    def __init__(self, minpoly: IntPoly, lo, hi, _trusted: bool = False):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if minpoly.degree == 1:
            # canonical rational form: den*T - num in lowest terms
            val = Fraction(-minpoly.coeffs[0], minpoly.coeffs[1])
            self.minpoly = IntPoly([-val.numerator, val.denominator])
            self.lo = val - 1
            self.hi = val + 1
            return
        if not _trusted:
            if not minpoly.is_primitive():
                raise ValueError("minimal polynomial must be primitive with lc > 0")
            if minpoly(lo) == 0 or minpoly(hi) == 0:
                raise ValueError("interval endpoints must not be roots")
            if count_real_roots(minpoly, lo, hi) != 1:
                raise ValueError("interval does not isolate exactly one root")
        self.minpoly = minpoly
        self.lo = lo
        self.hi = hi

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "AlgebraicReal":
        q = Fraction(q)
        return AlgebraicReal(IntPoly([-q.numerator, q.denominator]), q - 1, q + 1)

    # -- queries ----------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational value")
        return Fraction(-self.minpoly.coeffs[0], self.minpoly.coeffs[1])

    def interval(self) -> tuple:
        if self.is_rational:
            v = self.rational_value()
            return (v, v)
        return (self.lo, self.hi)

    def refine(self) -> None:
        """Halve the isolating interval (in place; the represented value is
        unchanged, so callers holding shared instances work on copies)."""
        if self.is_rational:
            v = self.rational_value()
            self.lo = (self.lo + v) / 2
            self.hi = (v + self.hi) / 2
            return
        mid = (self.lo + self.hi) / 2
        if self.minpoly(self.lo) * self.minpoly(mid) < 0:
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            self.refine()

    def sign(self) -> int:
        """Sign of the number itself."""
        if self.is_rational:
            v = self.rational_value()
            return (v > 0) - (v < 0)
        work = self.copy()
        while work.lo < 0 < work.hi:
            work.refine()
        return 1 if work.lo >= 0 else -1

    def __float__(self) -> float:
        if self.is_rational:
            return float(self.rational_value())
        a, b = self.lo, self.hi
        # refine a copy to float precision
        tmp = AlgebraicReal(self.minpoly, a, b, _trusted=True)
        tmp.refine_below(Fraction(1, 10**20))
        return float((tmp.lo + tmp.hi) / 2)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"AlgebraicReal({self.rational_value()})"
        return f"AlgebraicReal({self.minpoly.to_text()}, ({self.lo}, {self.hi}))"

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self.is_rational:
            return True
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo >= hi:
            return False
        if self.minpoly(lo) == 0 or self.minpoly(hi) == 0:
            # nudge: count on the closed overlap via slightly widened Sturm
            return count_real_roots(self.minpoly, lo - Fraction(1, 10**9), hi) == 1
        return count_real_roots(self.minpoly, lo, hi) == 1

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __lt__(self, other) -> bool:
        if not isinstance(other, AlgebraicReal):
            other = AlgebraicReal.from_rational(other)
        if self == other:
            return False
        a = self.copy()
        b = other.copy()
        while True:
            alo, ahi = a.interval()
            blo, bhi = b.interval()
            if ahi <= blo:  # equality excluded above, so touching is decisive
                return True
            if bhi <= alo:
                return False
            a.refine()
            b.refine()

    def __le__(self, other):
        return self == other or self < other

    def copy(self) -> "AlgebraicReal":
        return AlgebraicReal(self.minpoly, self.lo, self.hi, _trusted=True)

    # -- exact transforms -----------------------------------------------------------

    def __neg__(self) -> "AlgebraicReal":
        if self.is_rational:
            return AlgebraicReal.from_rational(-self.rational_value())
        m = self.minpoly.reversed_roots().primitive()
        return AlgebraicReal(m, -self.hi, -self.lo, _trusted=True)

    def scale(self, r) -> "AlgebraicReal":
        """self * r for rational r."""
        r = Fraction(r)
        if r == 0:
            return AlgebraicReal.from_rational(0)
        if self.is_rational:
            return AlgebraicReal.from_rational(self.rational_value() * r)
        m = self.minpoly.scale_roots(r)
        lo, hi = self.lo * r, self.hi * r
        if r < 0:
            lo, hi = hi, lo
        return AlgebraicReal(m, lo, hi, _trusted=True)

    def shift(self, a) -> "AlgebraicReal":
        """self + a for rational a."""
        a = Fraction(a)
        if self.is_rational:
            return AlgebraicReal.from_rational(self.rational_value() + a)
        m = self.minpoly.translate_roots(a)
        return AlgebraicReal(m, self.lo + a, self.hi + a, _trusted=True)

    def __add__(self, other) -> "AlgebraicReal":
        if isinstance(other, AlgebraicReal) and other.is_rational:
            return self.shift(other.rational_value())
        if isinstance(other, AlgebraicReal):
            if self.is_rational:
                return other.shift(self.rational_value())
            return _combine(self, other, "sum")
        return self.shift(other)

    def __mul__(self, other) -> "AlgebraicReal":
        if isinstance(other, AlgebraicReal) and other.is_rational:
            return self.scale(other.rational_value())
        if isinstance(other, AlgebraicReal):
            if self.is_rational:
                return other.scale(self.rational_value())
            return _combine(self, other, "product")
        return self.scale(other)


# -- root isolation ------------------------------------------------------------


def _isolate_irreducible(m: IntPoly) -> list:
    """Isolating intervals for all real roots of an irreducible m, sorted."""
    if m.degree == 1:
        return [AlgebraicReal.from_rational(Fraction(-m.coeffs[0], m.coeffs[1]))]
    chain = sturm_chain(m)
    bound = root_bound(m)
    out = []

    def go(lo: Fraction, hi: Fraction, vlo: int, vhi: int):
        count = vlo - vhi
        if count == 0:
            return
        if count == 1:
            out.append(AlgebraicReal(m, lo, hi, _trusted=True))
            return
        mid = (lo + hi) / 2
        vmid = sturm_variations(chain, mid)
        go(lo, mid, vlo, vmid)
        go(mid, hi, vmid, vhi)

    lo, hi = -bound, bound
    go(lo, hi, sturm_variations(chain, lo), sturm_variations(chain, hi))
    out.sort(key=lambda a: a.lo)
    return out


def isolate_real_roots(f: IntPoly) -> list:
    """All real roots of a square-free f as AlgebraicReal, sorted increasing,
    with pairwise disjoint isolating intervals."""
    if f.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(f):
        raise ValueError("input must be square-free; take squarefree_part first")
    _, factors = factor_q(f)
    roots = []
    for m, _ in factors:
        roots.extend(_isolate_irreducible(m))
    roots.sort()
    # shrink stored intervals until pairwise disjoint (roots are distinct,
    # so refinement terminates)
    for a, b in zip(roots, roots[1:]):
        while a.hi > b.lo:
            a.refine()
            b.refine()
    return roots


# -- sign evaluation -------------------------------------------------------------


def sign_at(poly: IntPoly, alpha: AlgebraicReal) -> int:
    """Exact sign of poly(alpha): 0 iff minpoly(alpha) divides poly."""
    if poly.is_zero:
        return 0
    if alpha.is_rational:
        v = poly(alpha.rational_value())
        return (v > 0) - (v < 0)
    _, rem = poly_divmod_q(poly.fraction_coeffs(), alpha.minpoly.fraction_coeffs())
    if not rem:
        return 0
    work = alpha.copy()
    while True:
        lo, hi = poly.eval_interval(work.lo, work.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        work.refine()


# -- combining two algebraic numbers ----------------------------------------------


def refine_to_select(candidates: list, x: AlgebraicReal, y: AlgebraicReal,
                     combine: str) -> AlgebraicReal:
    """Pick, among candidate irreducible polynomials, the one vanishing at
    x+y (combine='sum') or x*y (combine='product'), and return that value
    with an isolating interval obtained by interval arithmetic."""
    if combine not in ("sum", "product"):
        raise ValueError("combine must be 'sum' or 'product'")
    # the combined value is a root of this polynomial; candidates that do not
    # divide it can never carry the result
    if combine == "sum":
        reference = sum_combination_poly(x.minpoly, y.minpoly)
    else:
        reference = product_combination_poly(x.minpoly, y.minpoly)
    candidates = [m for m in candidates if m.divides(reference)]
    if not candidates:
        raise ArithmeticError("no candidate divides the combination polynomial")
    xs = x.copy()
    ys = y.copy()
    chains = [(m, sturm_chain(m)) for m in candidates]
    for _ in range(10_000):
        xlo, xhi = xs.interval()
        ylo, yhi = ys.interval()
        if combine == "sum":
            lo, hi = xlo + ylo, xhi + yhi
        else:
            corners = (xlo * ylo, xlo * yhi, xhi * ylo, xhi * yhi)
            lo, hi = min(corners), max(corners)
        if lo == hi:
            # both inputs rational
            v = Fraction(lo)
            for m, _ in chains:
                if m(v) == 0:
                    return AlgebraicReal.from_rational(v)
            raise ArithmeticError("no candidate vanishes at the combined value")
        hits = []
        usable = True
        for m, chain in chains:
            if m(lo) == 0 or m(hi) == 0:
                usable = False
                break
            n = sturm_variations(chain, lo) - sturm_variations(chain, hi)
            if n:
                hits.append((m, n))
        if usable and len(hits) == 1 and hits[0][1] == 1:
            m = hits[0][0]
            if m.degree == 1:
                return AlgebraicReal.from_rational(Fraction(-m.coeffs[0], m.coeffs[1]))
            return AlgebraicReal(m, lo, hi, _trusted=True)
        if usable and not hits:
            raise ArithmeticError("no candidate vanishes at the combined value")
        xs.refine()
        ys.refine()
    raise ArithmeticError("failed to separate candidate roots")


def _combine(x: AlgebraicReal, y: AlgebraicReal, op: str) -> AlgebraicReal:
    if op == "sum":
        res = sum_combination_poly(x.minpoly, y.minpoly)
    else:
        if x.sign() == 0 or y.sign() == 0:
            return AlgebraicReal.from_rational(0)
        res = product_combination_poly(x.minpoly, y.minpoly)
    res = squarefree_part(res)
    _, factors = factor_q(res)
    return refine_to_select([m for m, _ in factors], x, y, op)
