import random

import pytest

from hyperalg.exactmath import FpPoly, IntPoly, is_irreducible_q, factor_q, sum_combination_poly
from hyperalg.spec_k import (
    HyperResult,
    SpecKPoint,
    brute_oracle_fiber0,
    brute_oracle_fiberp,
    canonical_witnesses,
    char_p_identities,
    fiber_of,
    is_qroot,
    spec_add,
    spec_mul,
)

P = IntPoly.from_text
W = canonical_witnesses()


def pt(text: str) -> SpecKPoint:
    return SpecKPoint.closed0(P(text))


DELTA = SpecKPoint.generic(0)


def finite_polys(result: HyperResult):
    return frozenset(p.poly for p in result.points)


# -- points and fibers ---------------------------------------------------------------


def test_fiber_of():
    assert fiber_of(pt("T^2-2")) == 0
    assert fiber_of(SpecKPoint.generic(7)) == 7
    assert fiber_of(DELTA) == 0


def test_point_validation():
    with pytest.raises(ValueError):
        SpecKPoint.closed0(P("T^2-1"))  # reducible
    with pytest.raises(ValueError):
        SpecKPoint(4, None)  # composite fiber
    with pytest.raises(ValueError):
        SpecKPoint.closedp(2, FpPoly(2, [1, 1, 1, 1]))  # (T+1)^3-ish reducible


def test_negation_canonical():
    assert pt("T^2-2*T-1").negated() == pt("T^2+2*T-1")
    assert pt("T^2-2").negated() == pt("T^2-2")
    assert DELTA.negated() == DELTA


# -- hypersum ------------------------------------------------------------------------


def test_spec_add_closed_examples():
    assert finite_polys(spec_add(pt("T^2-2"), pt("T^2-3"))) == {P("T^4-10*T^2+1")}
    assert finite_polys(spec_add(pt("T^2-2"), pt("T^2-2"))) == {P("T"), P("T^2-8")}


def test_spec_add_generic_rows():
    assert spec_add(DELTA, DELTA) == HyperResult.fiber_all(0)
    assert spec_add(DELTA, pt("T^2-2")) == HyperResult.fiber_all(0)
    assert spec_add(DELTA, pt("2*T-1")) == HyperResult.finite({DELTA})


def test_spec_add_fiber_p():
    a = SpecKPoint.closedp(2, FpPoly(2, [1, 1, 1]))
    out = spec_add(a, a)
    assert finite_polys(out) == {FpPoly(2, [0, 1]), FpPoly(2, [1, 1])}
    assert spec_add(SpecKPoint.generic(2), a) == HyperResult.finite({SpecKPoint.generic(2)})
    assert spec_add(SpecKPoint.generic(3), SpecKPoint.generic(3)) == HyperResult.fiber_all(3)


def test_cross_fiber_is_empty_for_all_variant_combinations():
    a2 = SpecKPoint.closedp(2, FpPoly(2, [1, 1]))
    candidates = [DELTA, pt("T^2-2"), SpecKPoint.generic(5), a2]
    for x in candidates:
        for y in candidates:
            if x.fiber != y.fiber:
                assert spec_add(x, y) == HyperResult.empty()
                assert spec_mul(x, y) == HyperResult.empty()


# -- hyperproduct ----------------------------------------------------------------------


def test_spec_mul_closed_examples():
    assert finite_polys(spec_mul(pt("T^2-2"), pt("T^2-2"))) == {P("T-2"), P("T+2")}


def test_spec_mul_generic_rows():
    assert spec_mul(DELTA, DELTA) == HyperResult.fiber_nonzero(0)
    assert spec_mul(DELTA, pt("T^2-2")) == HyperResult.finite({DELTA})
    assert spec_mul(DELTA, pt("T^2-2*T-1")) == HyperResult.fiber_nonzero(0)
    assert spec_mul(DELTA, pt("T^2+T+1")) == HyperResult.finite({DELTA})
    assert spec_mul(DELTA, pt("2*T-1")) == HyperResult.finite({DELTA})


def test_zero_class_absorbs():
    zero = pt("T")
    for x in (DELTA, pt("T^2-2"), zero):
        assert spec_mul(x, zero) == HyperResult.finite({zero})
    zp = SpecKPoint.closedp(5, FpPoly(5, [0, 1]))
    assert spec_mul(SpecKPoint.generic(5), zp) == HyperResult.finite({zp})


def test_is_qroot_examples():
    assert is_qroot(P("T^2-2"))
    assert not is_qroot(P("T^2-2*T-1"))
    assert is_qroot(P("T^2+T+1"))
    assert is_qroot(P("2*T-1"))
    with pytest.raises(ValueError):
        is_qroot(P("T"))


# -- membership and reversibility ---------------------------------------------------------


def test_fiber_all_membership():
    out = spec_add(DELTA, pt("T^2-2"))
    assert pt("T-1") in out and DELTA in out and pt("T") in out
    assert SpecKPoint.generic(5) not in out


def test_fiber_nonzero_membership_excludes_zero_class():
    out = spec_mul(DELTA, DELTA)
    assert pt("T^2-2") in out and DELTA in out
    assert pt("T") not in out


def test_reversibility_fails_with_the_generic_point():
    # 1 lies in delta - sqrt2, yet sqrt2 does not lie in delta - 1
    lhs = spec_add(DELTA, pt("T^2-2").negated())
    assert pt("T-1") in lhs
    rhs = spec_add(DELTA, pt("T-1").negated())
    assert rhs == HyperResult.finite({DELTA})
    assert pt("T^2-2") not in rhs


# -- commutativity / associativity samples --------------------------------------------------


def rand_irreducible(rng, max_deg, height):
    while True:
        d = rng.randint(1, max_deg)
        f = IntPoly([rng.randint(-height, height) for _ in range(d)] + [rng.randint(1, height)])
        f = f.primitive()
        if f.degree == d and is_irreducible_q(f):
            return f


def test_commutativity_sampled():
    rng = random.Random(50)
    for _ in range(12):
        x = SpecKPoint.closed0(rand_irreducible(rng, 3, 8))
        y = SpecKPoint.closed0(rand_irreducible(rng, 3, 8))
        assert spec_add(x, y) == spec_add(y, x)
        assert spec_mul(x, y) == spec_mul(y, x)


def flatten_add(result: HyperResult, z: SpecKPoint) -> frozenset:
    out = set()
    for p in result.points:
        out |= spec_add(p, z).points
    return frozenset(out)


def test_associativity_on_closed_points_sampled():
    rng = random.Random(51)
    for _ in range(30):
        x = SpecKPoint.closed0(rand_irreducible(rng, 2, 6))
        y = SpecKPoint.closed0(rand_irreducible(rng, 2, 6))
        z = SpecKPoint.closed0(rand_irreducible(rng, 2, 6))
        left = flatten_add(spec_add(x, y), z)
        right = flatten_add(spec_add(y, z), x)
        assert left == right, (x, y, z)


def test_degree_accounting_of_the_sum_resultant():
    rng = random.Random(52)
    for _ in range(20):
        q1 = rand_irreducible(rng, 3, 8)
        q2 = rand_irreducible(rng, 3, 8)
        combined = sum_combination_poly(q1, q2)
        assert combined.degree == q1.degree * q2.degree
        _, factors = factor_q(combined)
        assert sum(m.degree * mult for m, mult in factors) == q1.degree * q2.degree


# -- brute-force oracles ---------------------------------------------------------------------


def test_oracle_fiber0_examples():
    assert brute_oracle_fiber0(P("T^2-2"), P("T^2-3"), "sum") == {P("T^4-10*T^2+1")}
    assert brute_oracle_fiber0(P("T-1"), P("T-1"), "sum") == {P("T-2")}
    assert brute_oracle_fiber0(P("T^2-2"), P("T"), "product") == {P("T")}


def test_oracle_fiberp_examples():
    a = FpPoly(2, [1, 1, 1])
    assert brute_oracle_fiberp(a, a, "sum") == {FpPoly(2, [0, 1]), FpPoly(2, [1, 1])}
    b = FpPoly(2, [1, 1])
    assert brute_oracle_fiberp(b, b, "sum") == {FpPoly(2, [0, 1])}
    assert brute_oracle_fiberp(FpPoly(3, [0, 1]), a and FpPoly(3, [1, 1]), "product") == {FpPoly(3, [0, 1])}


def test_pipeline_matches_oracle_small_battery():
    rng = random.Random(53)
    for _ in range(10):
        q1 = rand_irreducible(rng, 4, 10)
        q2 = rand_irreducible(rng, 4, 10)
        x, y = SpecKPoint.closed0(q1), SpecKPoint.closed0(q2)
        assert finite_polys(spec_add(x, y)) == brute_oracle_fiber0(q1, q2, "sum")
        if not x.is_zero_point and not y.is_zero_point:
            assert finite_polys(spec_mul(x, y)) == brute_oracle_fiber0(q1, q2, "product")


def rand_irreducible_fp(rng, p, max_deg):
    from hyperalg.exactmath import is_irreducible

    while True:
        d = rng.randint(1, max_deg)
        f = FpPoly(p, [rng.randrange(p) for _ in range(d)] + [1])
        if f.degree == d and is_irreducible(f):
            return f


def test_fiber_p_pipeline_matches_enumeration_small_battery():
    rng = random.Random(54)
    for p in (2, 3, 5):
        for _ in range(5):
            a = rand_irreducible_fp(rng, p, 3)
            b = rand_irreducible_fp(rng, p, 3)
            x, y = SpecKPoint.closedp(p, a), SpecKPoint.closedp(p, b)
            assert finite_polys(spec_add(x, y)) == brute_oracle_fiberp(a, b, "sum")
            if not x.is_zero_point and not y.is_zero_point:
                assert finite_polys(spec_mul(x, y)) == brute_oracle_fiberp(a, b, "product")


# -- characteristic-p identities ----------------------------------------------------------------


def test_char_p_identity_examples():
    rep = char_p_identities(2, FpPoly(2, [1, 1, 1]))
    assert rep["s_divides"] and rep["u_divides"] and rep["s_additive"]
    rep = char_p_identities(3, FpPoly(3, [1, 1]))
    assert rep["s_divides"] and rep["u_divides"] and rep["s_additive"]
    rep = char_p_identities(2, FpPoly(2, [0, 1]))
    assert rep["s_divides"] and rep["u_divides"] is None


def test_char_p_identities_random():
    rng = random.Random(55)
    for p in (2, 3, 5):
        for _ in range(7):
            a = rand_irreducible_fp(rng, p, 3)
            rep = char_p_identities(p, a)
            assert rep["s_divides"] and rep["s_additive"]
            if tuple(a.coeffs) != (0, 1):
                assert rep["u_divides"]
