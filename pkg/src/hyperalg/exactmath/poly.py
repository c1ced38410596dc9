"""Dense univariate polynomials over Z, with the exact algorithms the rest of
the package is built on: pseudo-division, primitive-PRS gcd, resultants,
square-free parts, Sturm chains and root counting.

Coefficients are arbitrary-precision Python ints, stored lowest degree first.
Bivariate resultants (needed to combine algebraic numbers) reuse the same
machinery with coefficients that are themselves IntPoly values.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence, Union

Coeff = Union[int, "IntPoly"]


def _strip(coeffs: list) -> tuple:
    while coeffs and _is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _is_zero(c) -> bool:
    return c.is_zero if isinstance(c, IntPoly) else c == 0


def _exdiv(a: Coeff, b: Coeff) -> Coeff:
    """Exact division in the coefficient domain; raises if not exact."""
    if isinstance(a, IntPoly) or isinstance(b, IntPoly):
        if not isinstance(a, IntPoly):
            a = IntPoly([a])
        if not isinstance(b, IntPoly):
            b = IntPoly([b])
        return a.exact_div(b)
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division {a} / {b}")
    return q


class IntPoly:
    """A polynomial with integer coefficients, immutable.

    ``coeffs[k]`` is the coefficient of T^k; the leading coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple = _strip(list(coeffs))

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly([1])

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly([c])

    @staticmethod
    def t_power(k: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * k + [c])

    # -- basic queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by T^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float, complex, mpf..."""
        acc = 0 * x if not isinstance(x, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple:
        """Image bounds of [lo, hi] under the polynomial, by interval Horner."""
        alo, ahi = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            p1, p2, p3, p4 = alo * lo, alo * hi, ahi * lo, ahi * hi
            alo = min(p1, p2, p3, p4) + c
            ahi = max(p1, p2, p3, p4) + c
        return alo, ahi

    # -- calculus / normal forms ------------------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def is_primitive(self) -> bool:
        return not self.is_zero and self.content() == 1 and self.lc > 0

    # -- division --------------------------------------------------------------

    def divmod_exact(self, other: "IntPoly") -> tuple:
        """Quotient and remainder when all divisions stay in Z (e.g. monic or
        exactly dividing denominators); raises ArithmeticError otherwise."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lc = other.lc
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            c, r = divmod(rem[-1], lc)
            if r:
                raise ArithmeticError("inexact polynomial division")
            k = len(rem) - 1 - d
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] -= c * oc
        return IntPoly(q), IntPoly(rem)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "IntPoly") -> bool:
        """True when self divides other in Q[T] (fraction-field division)."""
        if self.is_zero:
            return other.is_zero
        _, r = poly_divmod_q(other.fraction_coeffs(), self.fraction_coeffs())
        return not r

    def fraction_coeffs(self) -> list:
        return [Fraction(c) for c in self.coeffs]

    # -- transforms ------------------------------------------------------------

    def reversed_roots(self) -> "IntPoly":
        """T -> -T: roots are negated."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def scale_roots(self, r: Fraction) -> "IntPoly":
        """Primitive polynomial whose roots are r * (roots of self), r != 0."""
        r = Fraction(r)
        if r == 0:
            raise ValueError("root scale must be nonzero")
        n = self.degree
        p, q = r.numerator, r.denominator
        # coefficient of T^k picks up p^(n-k) q^k
        out = [c * p ** (n - k) * q**k for k, c in enumerate(self.coeffs)]
        return IntPoly(out).primitive()

    def translate_roots(self, a: Fraction) -> "IntPoly":
        """Primitive polynomial whose roots are (roots of self) + a."""
        a = Fraction(a)
        # evaluate self at (T - a) with Fraction coefficients, then clear
        acc = [Fraction(0)]
        for c in reversed(self.coeffs):
            acc = _frac_mul_linear(acc, -a)
            acc[0] += c
        return poly_from_fractions(acc)

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text: descending powers, explicit '*', no spaces."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                t = "T" if k == 1 else f"T^{k}"
                body = t if mag == 1 else f"{mag}*{t}"
            parts.append(sign + body)
        return "".join(parts)

    @staticmethod
    def from_text(text: str) -> "IntPoly":
        """Parse the canonical text format (whitespace ignored)."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return IntPoly()
        token = re.compile(
            r"(?P<sign>[+-]?)"
            r"(?:(?P<coef>\d+)\*?)?"
            r"(?P<var>T(?:\^(?P<exp>\d+))?)?"
        )
        pos = 0
        coeffs: dict = {}
        while pos < len(s):
            m = token.match(s, pos)
            if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
                raise ValueError(f"bad polynomial text at {s[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coef = int(m.group("coef")) if m.group("coef") else 1
            if m.group("var"):
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, 0) + sign * coef
            pos = m.end()
        out = [0] * (max(coeffs) + 1)
        for k, v in coeffs.items():
            out[k] = v
        return IntPoly(out)


# -- Fraction-coefficient helpers (internal) -------------------------------

def _frac_mul_linear(acc: list, root_shift: Fraction) -> list:
    """acc(T) * (T + root_shift) over Fractions."""
    out = [Fraction(0)] * (len(acc) + 1)
    for i, c in enumerate(acc):
        out[i + 1] += c
        out[i] += c * root_shift
    return out


def poly_from_fractions(coeffs: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and return the primitive integer polynomial."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return IntPoly()
    den = 1
    for c in coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    return IntPoly([int(c * den) for c in coeffs]).primitive()


def poly_divmod_q(a: list, b: list) -> tuple:
    """divmod of Fraction coefficient lists (low-first); returns (q, r) lists."""
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        while a and a[-1] == 0:
            a.pop()
    return q, a


# -- pseudo-division and PRS machinery (generic in the coefficient domain) --

def _gen_prem(f: list, g: list) -> list:
    """Pseudo-remainder of dense coefficient lists over any integral domain:
    rem(lc(g)^(deg f - deg g + 1) * f, g), computed without fractions."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    steps = 0
    n = len(f) - 1 - dg + 1
    while len(f) - 1 >= dg and f:
        lf = f[-1]
        k = len(f) - 1 - dg
        f = [c * lg for c in f]
        for i, gc in enumerate(g):
            f[k + i] = f[k + i] - gc * lf
        while f and _is_zero(f[-1]):
            f.pop()
        steps += 1
    if steps < n:
        mult = lg
        for _ in range(n - steps - 1):
            mult = mult * lg
        f = [c * mult for c in f]
    return f


def _gen_resultant(f: list, g: list):
    """Resultant of dense coefficient lists by the exact-division recursion
    (Cohen, Computer Algebra and Symbolic Computation, p. 283)."""
    m = len(f) - 1
    n = len(g) - 1
    if m < n:
        s = _gen_resultant(g, f)
        return -s if (m * n) % 2 else s
    if n == 0:
        return g[0] ** m
    r = _gen_prem(f, g)
    if not r:
        return IntPoly() if isinstance(f[0], IntPoly) else 0
    delta = m - n + 1
    w = _gen_resultant(g, r)
    if (m * n) % 2:
        w = -w
    s = len(r) - 1
    k = delta * n - m + s
    if k == 0:
        return w
    return _exdiv(w, g[-1] ** k)


def _as_poly(c) -> IntPoly:
    return c if isinstance(c, IntPoly) else IntPoly([c])


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res_T(f, g) as an exact integer."""
    if f.is_zero or g.is_zero:
        raise ValueError("undefined resultant of the zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return 1
    return _gen_resultant(list(f.coeffs), list(g.coeffs))


def resultant_bivariate(f: list, g: list) -> IntPoly:
    """Resultant in T of two polynomials whose coefficients are IntPoly in a
    second variable; ``f``/``g`` are lists of IntPoly, lowest T-degree first.
    Returns an IntPoly in the surviving variable."""
    f = [_as_poly(c) for c in f]
    g = [_as_poly(c) for c in g]
    while f and f[-1].is_zero:
        f.pop()
    while g and g[-1].is_zero:
        g.pop()
    if not f or not g:
        raise ValueError("undefined resultant of the zero polynomial")
    if len(f) == 1 and len(g) == 1:
        return IntPoly.one()
    out = _gen_resultant(f, g)
    return _as_poly(out)


# -- Sylvester matrix / Bareiss determinant (test oracle path) ----------------

def sylvester_matrix(f: Sequence[Coeff], g: Sequence[Coeff]) -> list:
    """Sylvester matrix of two dense coefficient lists (low first)."""
    m = len(f) - 1
    n = len(g) - 1
    if m < 0 or n < 0:
        raise ValueError("undefined resultant of the zero polynomial")
    size = m + n
    frow = list(reversed(f))
    grow = list(reversed(g))
    zero = IntPoly() if isinstance(f[0], IntPoly) else 0
    rows = []
    for i in range(n):
        rows.append([zero] * i + frow + [zero] * (size - i - len(frow)))
    for i in range(m):
        rows.append([zero] * i + grow + [zero] * (size - i - len(grow)))
    return rows


def bareiss_determinant(matrix: list):
    """Fraction-free determinant; entries may be ints or IntPoly."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [row[:] for row in matrix]
    sign = 1
    prev = IntPoly.one() if isinstance(a[0][0], IntPoly) else 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly() if isinstance(prev, IntPoly) else 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exdiv(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the Sylvester determinant; independent check path."""
    if f.is_zero or g.is_zero:
        raise ValueError("undefined resultant of the zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return 1
    return bareiss_determinant(sylvester_matrix(list(f.coeffs), list(g.coeffs)))


# -- gcd / square-free --------------------------------------------------------

def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[T] via the primitive PRS."""
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = IntPoly(_gen_prem(list(a.coeffs), list(b.coeffs)))
        a, b = b, r.primitive() if not r.is_zero else IntPoly()
    return a.primitive()


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors of f, primitive with
    positive leading coefficient."""
    if f.is_zero:
        raise ValueError("square-free part of the zero polynomial")
    p = f.primitive()
    if p.degree <= 0:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    return p.exact_div(g).primitive()


def is_squarefree(f: IntPoly) -> bool:
    if f.is_zero:
        return False
    if f.degree <= 0:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_decomposition(f: IntPoly) -> list:
    """[(g, m)] with f = unit * content * prod g^m over distinct square-free
    primitive g with positive leading coefficients (gcd-chain method)."""
    if f.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial")
    p = f.primitive()
    out = []
    m = 1
    while p.degree > 0:
        g = poly_gcd(p, p.derivative())
        flat = p.exact_div(g).primitive()  # product of the distinct factors of p
        p = g
        # factors of multiplicity exactly m: flat / gcd(flat, remaining)
        nxt = poly_gcd(flat, p)
        exact = flat.exact_div(nxt).primitive()
        if exact.degree > 0:
            out.append((exact, m))
        m += 1
    return out


# -- Sturm chains -------------------------------------------------------------

def _positive_scale(p: IntPoly) -> IntPoly:
    """Divide out the (positive) content, preserving the sign."""
    if p.is_zero:
        return p
    g = p.content()
    return IntPoly([c // g for c in p.coeffs])


def sturm_chain(f: IntPoly) -> list:
    """Sturm chain of a square-free polynomial; entries are scaled only by
    positive constants so the sign-variation counts are the classical ones."""
    chain = [_positive_scale(f), _positive_scale(f.derivative())]
    if chain[1].is_zero:
        return chain[:1]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = IntPoly(_gen_prem(list(a.coeffs), list(b.coeffs)))
        if r.is_zero:
            break
        # prem = lc(b)^k * (a mod b); flip once more for the Sturm negation
        k = a.degree - b.degree + 1
        s = -1 if (b.lc < 0 and k % 2 == 1) else 1
        r = _positive_scale(r)
        chain.append(IntPoly([-s * c for c in r.coeffs]))
    return chain


def _sign_at_rational(p: IntPoly, x: Fraction) -> int:
    v = p(Fraction(x))
    return (v > 0) - (v < 0)


def _sign_at_inf(p: IntPoly, positive: bool) -> int:
    if p.is_zero:
        return 0
    s = (p.lc > 0) - (p.lc < 0)
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs: list) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_variations(chain: list, x) -> int:
    if x == "-inf":
        return _variations([_sign_at_inf(p, False) for p in chain])
    if x == "+inf":
        return _variations([_sign_at_inf(p, True) for p in chain])
    return _variations([_sign_at_rational(p, x) for p in chain])


def count_real_roots(f: IntPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of square-free f in (lo, hi]; the whole
    line when bounds are omitted."""
    chain = sturm_chain(f)
    vlo = sturm_variations(chain, "-inf" if lo is None else Fraction(lo))
    vhi = sturm_variations(chain, "+inf" if hi is None else Fraction(hi))
    return vlo - vhi


def root_bound(f: IntPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    if f.degree < 1:
        return Fraction(1)
    m = max(abs(c) for c in f.coeffs[:-1]) if f.degree >= 1 else 0
    return 1 + Fraction(m, abs(f.lc))


# -- bivariate builders for combining algebraic numbers -----------------------

def compose_sub_t(g: IntPoly) -> list:
    """g(Z - T) as a polynomial in T whose coefficients are IntPoly in Z."""
    z = IntPoly([0, 1])
    acc = [IntPoly()]  # T-coefficients of the running Horner value, in Z[Z]
    for c in reversed(g.coeffs):
        out = [IntPoly() for _ in range(len(acc) + 1)]
        for i, p in enumerate(acc):  # acc * (Z - T)
            out[i] = out[i] + p * z
            out[i + 1] = out[i + 1] - p
        out[0] = out[0] + IntPoly([c])
        while len(out) > 1 and out[-1].is_zero:
            out.pop()
        acc = out
    return acc


def compose_div_t(g: IntPoly) -> list:
    """T^deg(g) * g(Z / T) in T with IntPoly-in-Z coefficients."""
    m = g.degree
    out = [IntPoly() for _ in range(m + 1)]
    for j, c in enumerate(g.coeffs):
        if c:
            # c * Z^j * T^(m-j)
            out[m - j] = out[m - j] + IntPoly([0] * j + [c])
    while len(out) > 1 and out[-1].is_zero:
        out.pop()
    return out


def sum_combination_poly(q1: IntPoly, q2: IntPoly) -> IntPoly:
    """Integer polynomial in Z whose roots include every alpha + beta with
    q1(alpha) = 0, q2(beta) = 0 (resultant construction)."""
    f = [_as_poly(c) for c in q1.coeffs]
    g = compose_sub_t(q2)
    return resultant_bivariate(f, g)


def product_combination_poly(q1: IntPoly, q2: IntPoly) -> IntPoly:
    """Same for products alpha * beta; q2 must not vanish at 0 unless the
    zero root is meant to be kept (the caller strips T factors first)."""
    f = [_as_poly(c) for c in q1.coeffs]
    g = compose_div_t(q2)
    return resultant_bivariate(f, g)
