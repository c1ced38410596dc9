"""Polynomial factorization: over F_p (square-free split, distinct-degree,
equal-degree, Berlekamp) and over Q (Berlekamp mod a good prime, Hensel
lifting, Zassenhaus subset recombination)."""

from __future__ import annotations

import math
import random
from itertools import combinations

from .gfpoly import FpPoly, fp_gcd, fp_x, is_irreducible, is_prime
from .poly import IntPoly, poly_gcd, squarefree_decomposition, resultant


# -- factorization over F_p ----------------------------------------------------


def _fp_squarefree_decomposition(f: FpPoly) -> list:
    """[(g, m)] with f monic = prod g^m, g monic square-free, pairwise coprime."""
    p = f.p
    if f.degree <= 0:
        return []
    out = []
    df = f.derivative()
    if df.is_zero:
        # f = u(T^p); the p-th root has the same coefficients (Frobenius fixes F_p)
        root = FpPoly(p, f.coeffs[::p])
        return [(g, p * m) for g, m in _fp_squarefree_decomposition(root)]
    c = fp_gcd(f, df)
    w = (f // c).monic()
    i = 1
    while w.degree > 0:
        y = fp_gcd(w, c)
        z = (w // y).monic()
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = (c // y).monic()
        i += 1
    if c.degree > 0:
        root = FpPoly(p, c.coeffs[::p])
        out.extend((g, p * m) for g, m in _fp_squarefree_decomposition(root))
    return out


def _ddf(f: FpPoly) -> list:
    """Distinct-degree split of a monic square-free f: [(product, degree)]."""
    p = f.p
    x = fp_x(p)
    out = []
    h = x % f
    g = f
    d = 1
    while g.degree >= 2 * d:
        h = h.pow_mod(p, g)
        common = fp_gcd(h - (x % g), g)
        if common.degree > 0:
            out.append((common, d))
            g = (g // common).monic()
            h = h % g
        d += 1
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _edf(f: FpPoly, d: int, rng: random.Random) -> list:
    """Cantor-Zassenhaus equal-degree split of monic square-free f whose
    irreducible factors all have degree d."""
    if f.degree == d:
        return [f]
    p = f.p
    n = f.degree
    while True:
        r = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if r.degree < 1:
            continue
        if p == 2:
            s = r % f
            cur = s
            for _ in range(d - 1):
                cur = cur * cur % f
                s = (s + cur) % f
            g = fp_gcd(s, f)
        else:
            e = (p**d - 1) // 2
            s = r.pow_mod(e, f) - FpPoly(p, [1])
            g = fp_gcd(s, f)
        if 0 < g.degree < f.degree:
            return _edf(g, d, rng) + _edf((f // g).monic(), d, rng)


def factor_fp(f: FpPoly) -> list:
    """Factor f over F_p into monic irreducibles with multiplicities.

    Returns a sorted list of (factor, multiplicity); the unit is lc(f).
    """
    if not is_prime(f.p):
        raise ValueError(f"modulus {f.p} is not prime")
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(hash((f.p, f.coeffs)) & 0xFFFFFFFF)
    out = []
    for g, m in _fp_squarefree_decomposition(f.monic()):
        for prod, d in _ddf(g):
            for irr in _edf(prod, d, rng):
                out.append((irr, m))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


# -- Berlekamp (used for the modular step of the rational factorization) -------


def _nullspace_fp(a: list, p: int) -> list:
    """Basis of the right nullspace of the matrix a over F_p."""
    n = len(a)
    m = [row[:] for row in a]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [(c - factor * d) % p for c, d in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    free_cols = [c for c in range(n) if c not in pivots]
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for col, r in pivots.items():
            v[col] = (-m[r][fc]) % p
        basis.append(v)
    return basis


def berlekamp_factor_squarefree(f: FpPoly) -> list:
    """Monic irreducible factors of a monic square-free f over F_p."""
    n = f.degree
    p = f.p
    if n <= 1:
        return [f]
    x = fp_x(p)
    rows = []
    xp = x.pow_mod(p, f)
    cur = FpPoly(p, [1])
    for _ in range(n):
        rows.append(list(cur.coeffs) + [0] * (n - len(cur.coeffs)))
        cur = cur * xp % f
    # nullspace of (Q^T - I): vectors v with v(T)^p = v(T) mod f
    a = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _nullspace_fp(a, p)
    r = len(basis)
    factors = {f}
    if r == 1:
        return [f]
    for v in basis:
        vpoly = FpPoly(p, v)
        if vpoly.degree < 1:
            continue
        for c in range(p):
            if len(factors) == r:
                break
            shifted = vpoly - FpPoly(p, [c])
            nxt = set()
            for h in factors:
                if h.degree <= 1:
                    nxt.add(h)
                    continue
                g = fp_gcd(h, shifted % h)
                if 0 < g.degree < h.degree:
                    nxt.add(g)
                    nxt.add((h // g).monic())
                else:
                    nxt.add(h)
            factors = nxt
        if len(factors) == r:
            break
    if len(factors) != r:
        raise ArithmeticError("Berlekamp splitting did not separate all factors")
    return sorted(factors, key=lambda g: (g.degree, g.coeffs))


# -- Hensel lifting -------------------------------------------------------------


def _mp_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _mp_trim(out)


def _mp_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _mp_trim(out)


def _mp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % m
    return _mp_trim(out)


def _mp_divmod_monic(a, b, m):
    """divmod by a monic b over Z/m."""
    rem = [c % m for c in a]
    _mp_trim(rem)
    d = len(b) - 1
    q = [0] * max(0, len(rem) - d)
    while len(rem) - 1 >= d and rem:
        c = rem[-1]
        k = len(rem) - 1 - d
        q[k] = c
        for i, bc in enumerate(b):
            rem[k + i] = (rem[k + i] - c * bc) % m
        _mp_trim(rem)
    return _mp_trim(q), rem


def _fp_egcd(a: FpPoly, b: FpPoly):
    """(g, s, t) with s*a + t*b = g, g monic gcd."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = FpPoly(p, [1]), FpPoly(p)
    t0, t1 = FpPoly(p), FpPoly(p, [1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(r0.lc, p - 2, p)
    return r0 * inv, s0 * inv, t0 * inv


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: inputs mod m, outputs mod m**2.

    Preconditions: f = g*h (mod m), s*g + t*h = 1 (mod m), h monic,
    deg f = deg g + deg h, deg s < deg h, deg t < deg g.
    """
    m2 = m * m
    f = [c % m2 for c in f]
    e = _mp_sub(f, _mp_mul(g, h, m2), m2)
    q, r = _mp_divmod_monic(_mp_mul(s, e, m2), h, m2)
    g1 = _mp_add(_mp_add(g, _mp_mul(t, e, m2), m2), _mp_mul(q, g, m2), m2)
    h1 = _mp_add(h, r, m2)
    b = _mp_sub(_mp_add(_mp_mul(s, g1, m2), _mp_mul(t, h1, m2), m2), [1], m2)
    c, d = _mp_divmod_monic(_mp_mul(s, b, m2), h1, m2)
    s1 = _mp_sub(s, d, m2)
    t1 = _mp_sub(_mp_sub(t, _mp_mul(t, b, m2), m2), _mp_mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _lift_pair(fm: list, gbar: FpPoly, hbar: FpPoly, p: int, target: int):
    """Lift the coprime split fm = gbar*hbar (mod p) to modulus `target`
    (a power p^(2^j)); returns (g, h) mod target, h and g monic."""
    _, s, t = _fp_egcd(gbar, hbar)
    g = list(gbar.coeffs)
    h = list(hbar.coeffs)
    s = list(s.coeffs)
    t = list(t.coeffs)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(fm, g, h, s, t, m)
        m = m * m
    return g, h


def _lift_tree(fm: list, factors: list, p: int, target: int) -> list:
    """Multifactor Hensel lifting of monic fm (mod target) along the monic
    factorization mod p given by `factors`."""
    if len(factors) == 1:
        return [fm]
    mid = len(factors) // 2
    gbar = FpPoly(p, [1])
    for q in factors[:mid]:
        gbar = gbar * q
    hbar = FpPoly(p, [1])
    for q in factors[mid:]:
        hbar = hbar * q
    g, h = _lift_pair(fm, gbar, hbar, p, target)
    return _lift_tree(g, factors[:mid], p, target) + _lift_tree(h, factors[mid:], p, target)


# -- Zassenhaus over Z ----------------------------------------------------------


def _good_prime(g: IntPoly) -> int:
    """Smallest prime >= 3 dividing neither lc(g) nor the discriminant-scale
    resultant Res(g, g'), so g stays square-free of full degree mod p."""
    disc_scale = resultant(g, g.derivative())
    if disc_scale == 0:
        raise ValueError("input not square-free")
    p = 3
    while g.lc % p == 0 or disc_scale % p == 0:
        p += 2
        while not is_prime(p):
            p += 2
    return p


def _mignotte_exponent(g: IntPoly, p: int) -> int:
    n = g.degree
    height = max(abs(c) for c in g.coeffs)
    bound = (2**n) * (math.isqrt(n + 1) + 1) * height * abs(g.lc)
    k = 1
    while p**k < 2 * bound + 1:
        k += 1
    return k


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def zassenhaus_squarefree(g: IntPoly) -> list:
    """Irreducible factors of a primitive square-free g with lc > 0."""
    n = g.degree
    if n <= 1:
        return [g] if n == 1 else []
    p = _good_prime(g)
    gbar = FpPoly.from_int_poly(g, p).monic()
    modular = berlekamp_factor_squarefree(gbar)
    if len(modular) == 1:
        return [g]
    k = _mignotte_exponent(g, p)
    # lift at moduli p^(2^j); fix the working modulus as the first one >= p^k
    target = p
    while target < p**k:
        target = target * target
    lc_inv = pow(g.lc, -1, target)
    fm = _mp_trim([c * lc_inv % target for c in g.coeffs])
    lifted = _lift_tree(fm, modular, p, target)

    found = []
    pool = list(range(len(lifted)))
    current = g
    s = 1
    while 2 * s <= len(pool):
        hit = None
        for subset in combinations(pool, s):
            cand = [current.lc % target]
            for i in subset:
                cand = _mp_mul(cand, lifted[i], target)
            h = IntPoly([_symmetric(c, target) for c in cand]).primitive()
            if h.degree == 0:
                continue
            if h.divides(current):
                hit = (subset, h)
                break
        if hit is None:
            s += 1
            continue
        subset, h = hit
        found.append(h)
        current = current.exact_div(h).primitive()
        pool = [i for i in pool if i not in subset]
        # keep s; smaller subsets may still combine among the remaining factors
    if current.degree > 0:
        found.append(current)
    return found


def factor_q(f: IntPoly):
    """Factor f over Q: returns (content, [(irreducible, multiplicity)...]).

    content * prod(factor^mult) == f; each factor is primitive, irreducible
    over Q, with positive leading coefficient. The list is sorted canonically.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content = f.content() * (1 if f.lc > 0 else -1)
    prim = f.primitive()
    if prim.degree == 0:
        return content, []
    out = []
    for g, m in squarefree_decomposition(prim):
        for irr in zassenhaus_squarefree(g):
            out.append((irr, m))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return content, out


def is_irreducible_q(f: IntPoly) -> bool:
    """Irreducibility over Q of a nonconstant polynomial."""
    if f.degree < 1:
        return False
    _, factors = factor_q(f)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == f.degree


__all__ = [
    "factor_fp",
    "factor_q",
    "berlekamp_factor_squarefree",
    "zassenhaus_squarefree",
    "is_irreducible_q",
    "is_irreducible",
]
