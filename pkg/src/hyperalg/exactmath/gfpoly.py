"""Polynomials over prime fields F_p and arithmetic in finite extensions
F_{p^k}, used by the modular factoring routines and the fiber-p machinery."""

from __future__ import annotations

import random
from typing import Iterable

from .poly import IntPoly


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


class FpPoly:
    """Dense polynomial over F_p, lowest degree first, 0 <= c < p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_int_poly(f: IntPoly, p: int) -> "FpPoly":
        return FpPoly(p, f.coeffs)

    def to_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def lift_symmetric(self, modulus: int | None = None) -> IntPoly:
        """Lift with coefficients in (-m/2, m/2]."""
        m = modulus if modulus is not None else self.p
        return IntPoly([c - m if c > m // 2 else c for c in self.coeffs])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.to_int_poly().to_text()!r})"

    def _check(self, other: "FpPoly"):
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPoly(self.p, out)

    def __neg__(self):
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "FpPoly"):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        inv = pow(other.lc, p - 2, p)
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        while len(rem) - 1 >= d:
            c = rem[-1] * inv % p
            k = len(rem) - 1 - d
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - c * oc) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return FpPoly(p, q), FpPoly(p, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "FpPoly":
        if self.is_zero or self.lc == 1:
            return self
        inv = pow(self.lc, self.p - 2, self.p)
        return self * inv

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        result = FpPoly(self.p, [1])
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def fp_x(p: int) -> FpPoly:
    return FpPoly(p, [0, 1])


def is_irreducible(f: FpPoly) -> bool:
    """Rabin test: T^(p^n) == T mod f and gcd(T^(p^(n/q)) - T, f) = 1 for
    prime divisors q of n."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    p = f.p
    x = fp_x(p)
    h = x.pow_mod(p**n, f)
    if h != x % f:
        return False
    for q in _prime_divisors(n):
        h = x.pow_mod(p ** (n // q), f)
        if fp_gcd(h - x, f).degree != 0:
            return False
    return True


def _prime_divisors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def find_irreducible(p: int, k: int, seed: int = 0) -> FpPoly:
    """Some monic irreducible of degree k over F_p (deterministic per seed)."""
    if k == 1:
        return fp_x(p)
    rng = random.Random((p, k, seed).__hash__())
    while True:
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        f = FpPoly(p, coeffs)
        if is_irreducible(f):
            return f


class GF:
    """The field F_{p^k} presented as F_p[T] mod a monic irreducible."""

    def __init__(self, p: int, k: int, modulus: FpPoly | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.k = k
        self.modulus = modulus if modulus is not None else find_irreducible(p, k)
        if self.modulus.degree != k:
            raise ValueError("modulus degree mismatch")
        if not is_irreducible(self.modulus):
            raise ValueError("modulus is reducible")
        self.size = p**k

    # elements are coefficient tuples of length <= k (normalized: no top zeros)

    def element(self, coeffs) -> tuple:
        f = FpPoly(self.p, coeffs) % self.modulus
        return f.coeffs

    @property
    def zero(self) -> tuple:
        return ()

    @property
    def one(self) -> tuple:
        return (1,)

    def elements(self):
        """All p^k elements, in lexicographic coefficient order."""
        p, k = self.p, self.k
        for idx in range(self.size):
            coeffs = []
            v = idx
            for _ in range(k):
                coeffs.append(v % p)
                v //= p
            yield FpPoly(p, coeffs).coeffs

    def add(self, a: tuple, b: tuple) -> tuple:
        return (FpPoly(self.p, a) + FpPoly(self.p, b)).coeffs

    def neg(self, a: tuple) -> tuple:
        return (-FpPoly(self.p, a)).coeffs

    def sub(self, a: tuple, b: tuple) -> tuple:
        return (FpPoly(self.p, a) - FpPoly(self.p, b)).coeffs

    def mul(self, a: tuple, b: tuple) -> tuple:
        return (FpPoly(self.p, a) * FpPoly(self.p, b) % self.modulus).coeffs

    def inv(self, a: tuple) -> tuple:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.size - 2)

    def pow(self, a: tuple, e: int) -> tuple:
        return FpPoly(self.p, a).pow_mod(e, self.modulus).coeffs

    def frobenius(self, a: tuple) -> tuple:
        return self.pow(a, self.p)

    def eval_fp_poly(self, f: FpPoly, a: tuple) -> tuple:
        """Evaluate f (over F_p) at the extension element a."""
        acc = self.zero
        for c in reversed(f.coeffs):
            acc = self.add(self.mul(acc, a), (c,) if c else ())
        return acc

    def roots_of(self, f: FpPoly) -> list:
        """All roots of f in this field, by exhaustive search."""
        return [a for a in self.elements() if not self.eval_fp_poly(f, a)]

    def minimal_polynomial(self, a: tuple) -> FpPoly:
        """Monic minimal polynomial of a over F_p via its Frobenius orbit."""
        orbit = [a]
        cur = self.frobenius(a)
        while cur != a:
            orbit.append(cur)
            cur = self.frobenius(cur)
        # product of (T - c) over the orbit, computed in GF[T]
        prod = [self.one]  # coefficients in GF, lowest first
        for c in orbit:
            nxt = [self.zero] * (len(prod) + 1)
            for i, q in enumerate(prod):
                nxt[i + 1] = self.add(nxt[i + 1], q)
                nxt[i] = self.sub(nxt[i], self.mul(q, c))
            prod = nxt
        out = []
        for q in prod:
            if len(q) > 1:
                raise ArithmeticError("orbit product left the prime field")
            out.append(q[0] if q else 0)
        return FpPoly(self.p, out)
