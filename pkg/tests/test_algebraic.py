import random
from fractions import Fraction

import mpmath
import pytest

from hyperalg.exactmath import (
    AlgebraicReal,
    IntPoly,
    count_real_roots,
    factor_q,
    isolate_real_roots,
    refine_to_select,
    sign_at,
    squarefree_part,
    sum_combination_poly,
)

P = IntPoly.from_text


def sqrt_n(n: int, positive=True) -> AlgebraicReal:
    roots = isolate_real_roots(IntPoly([-n, 0, 1]))
    return roots[-1] if positive else roots[0]


# -- isolation ---------------------------------------------------------------------


def bisection_real_roots(f: IntPoly, lo=-64.0, hi=64.0, depth=40):
    """Independent float bisection oracle on a sign-sampled grid."""
    import numpy as np

    xs = np.linspace(lo, hi, 8193)
    vals = [f(float(x)) for x in xs]
    roots = []
    for a, b, va, vb in zip(xs, xs[1:], vals, vals[1:]):
        if va == 0:
            roots.append(float(a))
        elif va * vb < 0:
            x, y = float(a), float(b)
            for _ in range(depth):
                m = (x + y) / 2
                if f(x) * f(m) <= 0:
                    y = m
                else:
                    x = m
            roots.append((x + y) / 2)
    if vals[-1] == 0:
        roots.append(float(xs[-1]))
    return roots


def test_isolation_contract_examples():
    roots = isolate_real_roots(P("T^2-2"))
    assert len(roots) == 2
    assert abs(float(roots[0]) + 1.41421356237) < 1e-9
    assert abs(float(roots[1]) - 1.41421356237) < 1e-9
    assert isolate_real_roots(P("T^2+1")) == []
    vals = [float(r) for r in isolate_real_roots(P("T^3-T"))]
    assert vals == [-1.0, 0.0, 1.0]


def test_isolation_requires_squarefree():
    with pytest.raises(ValueError):
        isolate_real_roots(P("T^2-2*T+1"))


def test_isolation_matches_bisection_oracle_and_sturm():
    rng = random.Random(31)
    for _ in range(40):
        f = IntPoly([rng.randint(-12, 12) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 12)])
        f = squarefree_part(f)
        if f.degree < 1:
            continue
        roots = isolate_real_roots(f)
        # count invariant: matches the Sturm variation difference at +-infinity
        assert len(roots) == count_real_roots(f)
        approx = bisection_real_roots(f)
        assert len(approx) == len(roots)
        for r, a in zip(roots, approx):
            assert abs(float(r) - a) < 1e-6
        # disjoint stored intervals, sorted
        for u, v in zip(roots, roots[1:]):
            assert u.hi <= v.lo


def test_rational_roots_canonical_form():
    (r,) = isolate_real_roots(P("2*T-1"))
    assert r.is_rational and r.rational_value() == Fraction(1, 2)
    assert r.minpoly == P("2*T-1")


# -- ordering and equality -------------------------------------------------------------


def test_equality_same_poly_different_intervals():
    a = sqrt_n(2)
    b = AlgebraicReal(P("T^2-2"), Fraction(1), Fraction(3, 2))
    assert a == b
    c = sqrt_n(2, positive=False)
    assert a != c
    assert c < a
    assert AlgebraicReal.from_rational(Fraction(7, 5)) < a
    assert a < AlgebraicReal.from_rational(Fraction(3, 2))


def test_arithmetic_golden_values():
    s2, s3 = sqrt_n(2), sqrt_n(3)
    s = s2 + s3
    assert s.minpoly == P("T^4-10*T^2+1")
    assert abs(float(s) - 3.14626436994) < 1e-9
    p = s2 * s2
    assert p.is_rational and p.rational_value() == 2
    d = s2 + (-s2)
    assert d.is_rational and d.rational_value() == 0
    scaled = s2.scale(Fraction(-3, 2))
    assert scaled.minpoly == P("2*T^2-9")
    shifted = s2.shift(1)
    assert shifted.minpoly == P("T^2-2*T-1")


# -- sign evaluation ---------------------------------------------------------------------


def test_sign_at_contract_examples():
    s2 = sqrt_n(2)
    assert sign_at(P("T^2-3"), s2) == -1
    assert sign_at(P("T^2-2"), s2) == 0
    assert sign_at(P("T^3-3"), s2) == -1


def test_sign_at_against_100bit_evaluation():
    rng = random.Random(33)
    pool = []
    for text in ("T^2-2", "T^2-3", "T^3-2", "T^3-3*T-1", "T^2-2*T-1", "5*T^2-3"):
        pool.extend(isolate_real_roots(P(text)))
    pool.extend(AlgebraicReal.from_rational(Fraction(rng.randint(-20, 20), rng.randint(1, 20)))
                for _ in range(6))
    with mpmath.workprec(100):
        for _ in range(500):
            alpha = rng.choice(pool)
            poly = IntPoly([rng.randint(-30, 30) for _ in range(rng.randint(1, 6))])
            if poly.is_zero:
                continue
            got = sign_at(poly, alpha)
            work = alpha.copy()
            work.refine_below(Fraction(1, 2**130))
            mid = (mpmath.mpf(work.lo.numerator) / work.lo.denominator
                   + mpmath.mpf(work.hi.numerator) / work.hi.denominator) / 2
            val = poly(mid)
            if got == 0:
                # exact zero must come from divisibility of the minimal polynomial
                assert alpha.minpoly.divides(poly)
            else:
                assert abs(val) > mpmath.mpf(2) ** -90
                assert (1 if val > 0 else -1) == got


# -- factor selection ----------------------------------------------------------------------


def test_refine_to_select_contract_examples():
    s2, s3 = sqrt_n(2), sqrt_n(3)
    out = refine_to_select([P("T^4-10*T^2+1")], s2, s3, "sum")
    assert out.minpoly == P("T^4-10*T^2+1") and abs(float(out) - (2**0.5 + 3**0.5)) < 1e-9

    res = squarefree_part(sum_combination_poly(P("T^2-2"), P("T^2-2")))
    cands = [m for m, _ in factor_q(res)[1]]
    out = refine_to_select(cands, s2, s2, "sum")
    assert out.minpoly == P("T^2-8") and float(out) > 0

    out = refine_to_select([P("T-2"), P("T+2")], s2, s2, "product")
    assert out.is_rational and out.rational_value() == 2


def test_refine_to_select_rejects_when_nothing_vanishes():
    s2 = sqrt_n(2)
    with pytest.raises(ArithmeticError):
        refine_to_select([P("T-5")], s2, s2, "sum")
