import pytest

from hyperalg.hypercore import (
    GroupTable,
    check_canonical_hypergroup,
    check_hom,
    check_hyperring,
    krasner_table,
)
from hyperalg.quotients import (
    FiniteRing,
    contains_krasner,
    kg_hyperfield,
    prenowitz_geometry,
    quotient_hyperring,
    rebuild_addition_from_geometry,
    subgroup_closure,
)


def full_units(p):
    return [(c,) for c in range(1, p)]


def quotient(p, k):
    ring = FiniteRing.gf(p, k)
    group = subgroup_closure(ring, full_units(p))
    return ring, group, quotient_hyperring(ring, group)


# -- quotient hyperrings --------------------------------------------------------


def test_f9_quotient_is_a_5_element_hyperfield():
    _, _, t = quotient(3, 2)
    assert t.size() == 5
    assert check_hyperring(t).passed
    one = t.one
    assert t.add[(one, one)] == frozenset({t.zero, one})


@pytest.mark.parametrize("p,k,expected", [(3, 2, 5), (5, 2, 7), (3, 3, 14), (7, 2, 9)])
def test_quotient_sizes_and_axioms(p, k, expected):
    _, _, t = quotient(p, k)
    assert t.size() == expected
    assert check_hyperring(t).passed


def test_trivial_group_recovers_field():
    ring = FiniteRing.gf(2, 2)
    t = quotient_hyperring(ring, frozenset({(1,)}))
    assert t.size() == 4
    assert all(len(s) == 1 for s in t.add.values())


def test_krasner_embeds_when_certificate_true():
    ring, group, t = quotient(3, 2)
    flag, cert = contains_krasner(ring, group)
    assert flag and cert["subfield"] == ["(0)", "(1)", "(2)"]
    k = krasner_table()
    embed = {"0": t.zero, "1": t.one}
    assert check_hom(embed, k, t).passed


def test_contains_krasner_examples():
    ring, group, _ = quotient(27 and 3, 3)
    assert contains_krasner(ring, group)[0]
    z8 = FiniteRing.zmod(8)
    g8 = subgroup_closure(z8, [3])
    flag, cert = contains_krasner(z8, g8)
    assert not flag
    a, b, c = cert["witness"]
    assert (int(a) + int(b)) % 8 == int(c) and int(c) not in {0, 1, 3}


def test_contains_krasner_excludes_trivial_group():
    ring = FiniteRing.gf(2, 2)
    with pytest.raises(ValueError):
        contains_krasner(ring, frozenset({(1,)}))


# -- the group extension hyperfields ----------------------------------------------


def relabeled_cyclic(n):
    g = GroupTable.cyclic(n)
    els = [f"g{e}" for e in g.elements]
    op = {(f"g{a}", f"g{b}"): f"g{g.op[(a, b)]}" for a in g.elements for b in g.elements}
    return GroupTable(els, op, "g0")


def test_kg_trivial_group_is_krasner():
    t = kg_hyperfield(relabeled_cyclic(1))
    assert t.size() == 2
    assert t.add[(t.one, t.one)] == frozenset({t.zero, t.one})
    assert check_hyperring(t).passed


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_kg_cyclic_passes_axioms(n):
    t = kg_hyperfield(relabeled_cyclic(n))
    assert t.size() == n + 1
    assert check_hyperring(t).passed


def test_kg_klein_four_passes_axioms():
    g2 = GroupTable.cyclic(2)
    g = GroupTable.direct_product(g2, g2)
    els = [f"g{e}" for e in g.elements]
    op = {(f"g{a}", f"g{b}"): f"g{g.op[(a, b)]}" for a in g.elements for b in g.elements}
    t = kg_hyperfield(GroupTable(els, op, f"g{g.identity}"))
    assert t.size() == 5
    assert check_hyperring(t).passed


def test_kg_distinct_sum_rule():
    t = kg_hyperfield(relabeled_cyclic(3))
    assert t.add[("g1", "g2")] == frozenset({"g1", "g2"})
    assert t.add[("g1", "g1")] == frozenset(t.carrier)


def test_spec_stated_self_sum_variant_fails_associativity():
    # the x+x = {0,x} variant is refuted by the checker: witness (1,1,g)
    g = relabeled_cyclic(3)
    carrier = ["0"] + list(g.elements)
    add = {}
    for x in carrier:
        for y in carrier:
            if x == "0":
                add[(x, y)] = {y}
            elif y == "0":
                add[(x, y)] = {x}
            elif x == y:
                add[(x, y)] = {"0", x}
            else:
                add[(x, y)] = {x, y}
    t = __import__("hyperalg.hypercore", fromlist=["HyperTable"]).HyperTable(
        carrier, "0", add, neg={x: x for x in carrier})
    report = check_canonical_hypergroup(t)
    assert not report.passed
    assert any(a == "H2" for a, _ in report.violations)


# -- incidence geometry ---------------------------------------------------------------


@pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_prenowitz_geometry_invariants(p, k):
    _, _, t = quotient(p, k)
    geo = prenowitz_geometry(t)
    assert len(geo.points) == (p**k - 1) // (p - 1)
    assert all(len(line) == p + 1 for line in geo.lines)
    assert geo.all_lines_at_least(4)
    rebuilt = rebuild_addition_from_geometry(geo, zero=t.zero)
    for x in t.carrier:
        for y in t.carrier:
            assert rebuilt[(x, y)] == set(t.add[(x, y)])


def test_f27_quotient_is_projective_plane_over_f3():
    _, _, t = quotient(3, 3)
    geo = prenowitz_geometry(t)
    assert len(geo.points) == 13
    assert len(geo.lines) == 13
    assert all(len(line) == 4 for line in geo.lines)


def test_krasner_geometry_has_no_lines():
    geo = prenowitz_geometry(krasner_table())
    assert len(geo.points) == 1 and len(geo.lines) == 0


def test_prenowitz_rejects_wrong_self_sum():
    t = kg_hyperfield(relabeled_cyclic(3))
    with pytest.raises(ValueError):
        prenowitz_geometry(t)
