"""Finite hyperstructures as explicit tables, exhaustive axiom checking, and
orbit constructions.

A canonical hypergroup is a commutative multivalued addition with a neutral
element, unique inverses (0 in x+y for exactly one y per x) and reversibility
(x in y+z implies z in x-y). A hyperring adds a multiplicative monoid that
distributes over the hyperaddition as set equality, with 0 absorbing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping

HYPERGROUP_AXIOMS = ("H1", "H2", "H3", "H4", "H5")
HYPERRING_AXIOMS = ("R-a", "R-b", "R-c", "R-d", "R-e")


@dataclass
class AxiomReport:
    """Outcome of an axiom sweep: passed iff no violations were recorded.

    Each violation is (axiom id, witness tuple); only the first witness per
    axiom is kept.
    """

    passed: bool = True
    violations: list = field(default_factory=list)
    checked: int = 0
    sampled: bool = False

    def record(self, axiom: str, witness: tuple) -> None:
        if not any(a == axiom for a, _ in self.violations):
            self.violations.append((axiom, witness))
        self.passed = False

    def summary(self) -> str:
        if self.passed:
            return "PASS"
        return "FAIL " + "; ".join(f"{a} at {w}" for a, w in self.violations)


class HyperTable:
    """An explicit finite hyperstructure.

    carrier: element labels (strings); zero: the additive neutral label;
    one: multiplicative identity label or None for additive-only tables;
    add: total map (x, y) -> nonempty frozenset of labels;
    neg: the (expected) inverse map; mul: total single-valued map or None.
    """

    def __init__(self, carrier: Iterable[str], zero: str, add: Mapping,
                 neg: Mapping | None = None, mul: Mapping | None = None,
                 one: str | None = None):
        self.carrier = tuple(str(c) for c in carrier)
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("duplicate carrier labels")
        self.zero = str(zero)
        self.one = None if one is None else str(one)
        if self.zero not in self.carrier:
            raise ValueError("zero not in carrier")
        if self.one is not None and self.one not in self.carrier:
            raise ValueError("one not in carrier")
        self.add = {}
        for x in self.carrier:
            for y in self.carrier:
                try:
                    s = add[(x, y)] if (x, y) in add else add[(y, x)]
                except (KeyError, TypeError):
                    raise ValueError(f"addition table missing entry ({x},{y})")
                s = frozenset(str(e) for e in s)
                if not s:
                    raise ValueError(f"empty hypersum at ({x},{y})")
                if not s <= set(self.carrier):
                    raise ValueError(f"hypersum at ({x},{y}) leaves the carrier")
                self.add[(x, y)] = s
        if neg is None:
            neg = self._derive_neg()
        self.neg = {str(k): str(v) for k, v in neg.items()}
        self.mul = None
        if mul is not None:
            self.mul = {}
            for x in self.carrier:
                for y in self.carrier:
                    try:
                        v = mul[(x, y)] if (x, y) in mul else mul[(y, x)]
                    except (KeyError, TypeError):
                        raise ValueError(f"multiplication table missing entry ({x},{y})")
                    self.mul[(x, y)] = str(v)

    def _derive_neg(self) -> dict:
        neg = {}
        for x in self.carrier:
            for y in self.carrier:
                if self.zero in self.add[(x, y)]:
                    neg.setdefault(x, y)
        return neg

    # -- set-level helpers ------------------------------------------------------

    def add_sets(self, xs: Iterable[str], ys: Iterable[str]) -> frozenset:
        out = set()
        for x in xs:
            for y in ys:
                out |= self.add[(x, y)]
        return frozenset(out)

    def size(self) -> int:
        return len(self.carrier)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "carrier": list(self.carrier),
            "zero": self.zero,
            "one": self.one,
            "neg": {x: self.neg.get(x) for x in self.carrier},
            "add": {x: {y: sorted(self.add[(x, y)]) for y in self.carrier} for x in self.carrier},
        }
        if self.mul is not None:
            data["mul"] = {x: {y: self.mul[(x, y)] for y in self.carrier} for x in self.carrier}
        return json.dumps(data, indent=1, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "HyperTable":
        data = json.loads(text)
        add = {(x, y): set(s) for x, row in data["add"].items() for y, s in row.items()}
        mul = None
        if "mul" in data:
            mul = {(x, y): v for x, row in data["mul"].items() for y, v in row.items()}
        return HyperTable(
            data["carrier"], data["zero"], add,
            neg=data.get("neg"), mul=mul, one=data.get("one"),
        )

    def __repr__(self):
        kind = "hyperring" if self.mul is not None else "hypergroup"
        return f"HyperTable({kind}, n={len(self.carrier)})"


def _triples(t: HyperTable, cap: int, samples: int, seed: int):
    n = len(t.carrier)
    if n <= cap and n**3 <= 8_000_000:
        yield from product(t.carrier, t.carrier, t.carrier)
        return
    rng = random.Random(seed)
    for _ in range(samples):
        yield (rng.choice(t.carrier), rng.choice(t.carrier), rng.choice(t.carrier))


def check_canonical_hypergroup(t: HyperTable, cap: int = 4096,
                               samples: int = 20000, seed: int = 0) -> AxiomReport:
    """Exhaustively verify the canonical hypergroup axioms of t.

    H1 commutativity, H2 associativity as set equality, H3 neutrality of
    zero, H4 existence/uniqueness of the inverse, H5 reversibility. Tables
    larger than `cap` are checked on `samples` random triples instead.
    """
    report = AxiomReport()
    z = t.zero
    for x in t.carrier:
        for y in t.carrier:
            report.checked += 1
            if t.add[(x, y)] != t.add[(y, x)]:
                report.record("H1", (x, y))
    for x in t.carrier:
        report.checked += 1
        if t.add[(z, x)] != frozenset({x}):
            report.record("H3", (x,))
    inverses = {}
    for x in t.carrier:
        report.checked += 1
        invs = [y for y in t.carrier if z in t.add[(x, y)]]
        if len(invs) != 1:
            report.record("H4", (x, tuple(invs)))
        else:
            inverses[x] = invs[0]
            if t.neg.get(x) != invs[0]:
                report.record("H4", (x, "neg table disagrees", t.neg.get(x), invs[0]))
    exhaustive = len(t.carrier) <= cap and len(t.carrier) ** 3 <= 8_000_000
    report.sampled = not exhaustive
    for x, y, w in _triples(t, cap, samples, seed):
        report.checked += 1
        left = t.add_sets(t.add[(x, y)], {w})
        right = t.add_sets({x}, t.add[(y, w)])
        if left != right:
            report.record("H2", (x, y, w))
        # reversibility: x' in y+w  =>  w in x' - y
        ny = inverses.get(y)
        if ny is not None and x in t.add[(y, w)] and w not in t.add[(x, ny)]:
            report.record("H5", (x, y, w))
    return report


def check_hyperring(t: HyperTable, cap: int = 4096, samples: int = 20000,
                    seed: int = 0) -> AxiomReport:
    """Hyperring axioms: canonical hypergroup, multiplicative monoid,
    two-sided distributivity as set equality, absorbing zero, 0 != 1."""
    report = AxiomReport()
    if t.mul is None or t.one is None:
        report.record("R-b", ("no multiplicative structure",))
        return report
    hg = check_canonical_hypergroup(t, cap=cap, samples=samples, seed=seed)
    report.checked += hg.checked
    report.sampled = hg.sampled
    if not hg.passed:
        report.record("R-a", tuple(hg.violations[0]))
    for x in t.carrier:
        report.checked += 1
        if t.mul[(t.one, x)] != x or t.mul[(x, t.one)] != x:
            report.record("R-b", ("identity", x))
        if t.mul[(t.zero, x)] != t.zero or t.mul[(x, t.zero)] != t.zero:
            report.record("R-d", (x,))
    for x, y, w in _triples(t, cap, samples, seed + 1):
        report.checked += 1
        if t.mul[(t.mul[(x, y)], w)] != t.mul[(x, t.mul[(y, w)])]:
            report.record("R-b", ("associativity", x, y, w))
        if t.mul[(x, y)] != t.mul[(y, x)]:
            report.record("R-b", ("commutativity", x, y))
        left = frozenset(t.mul[(x, u)] for u in t.add[(y, w)])
        right = t.add[(t.mul[(x, y)], t.mul[(x, w)])]
        if left != right:
            report.record("R-c", (x, y, w))
        left2 = frozenset(t.mul[(u, x)] for u in t.add[(y, w)])
        right2 = t.add[(t.mul[(y, x)], t.mul[(w, x)])]
        if left2 != right2:
            report.record("R-c", ("right", x, y, w))
    if t.zero == t.one:
        report.record("R-e", (t.zero,))
    return report


def check_hom(fmap: Mapping | Callable, src: HyperTable, dst: HyperTable) -> AxiomReport:
    """Verify f(a+b) subset f(a)+f(b) and f(ab) = f(a)f(b) exhaustively."""
    f = fmap if callable(fmap) else (lambda x: fmap[x])
    report = AxiomReport()
    for a in src.carrier:
        if f(a) not in dst.carrier:
            report.record("hom-total", (a, f(a)))
            return report
    for a in src.carrier:
        for b in src.carrier:
            report.checked += 1
            image = frozenset(f(u) for u in src.add[(a, b)])
            if not image <= dst.add[(f(a), f(b))]:
                report.record("hom-add", (a, b))
            if src.mul is not None and dst.mul is not None:
                if f(src.mul[(a, b)]) != dst.mul[(f(a), f(b))]:
                    report.record("hom-mul", (a, b))
    return report


# -- stock structures -----------------------------------------------------------


def krasner_table() -> HyperTable:
    """The two-element hyperfield coding zero vs nonzero: 1+1 = {0,1}."""
    add = {
        ("0", "0"): {"0"},
        ("0", "1"): {"1"},
        ("1", "1"): {"0", "1"},
    }
    mul = {("0", "0"): "0", ("0", "1"): "0", ("1", "1"): "1"}
    return HyperTable(["0", "1"], "0", add, neg={"0": "0", "1": "1"}, mul=mul, one="1")


def sign_table() -> HyperTable:
    """The three-element hyperfield of signs with the rule of signs."""
    add = {
        ("0", "0"): {"0"},
        ("0", "1"): {"1"},
        ("0", "-1"): {"-1"},
        ("1", "1"): {"1"},
        ("-1", "-1"): {"-1"},
        ("1", "-1"): {"-1", "0", "1"},
    }
    mul = {
        ("0", "0"): "0", ("0", "1"): "0", ("0", "-1"): "0",
        ("1", "1"): "1", ("1", "-1"): "-1", ("-1", "-1"): "1",
    }
    return HyperTable(["0", "1", "-1"], "0", add,
                      neg={"0": "0", "1": "-1", "-1": "1"}, mul=mul, one="1")


# -- finite groups and orbit hypergroups -------------------------------------------


class GroupTable:
    """A finite abelian group given by its Cayley table."""

    def __init__(self, elements: Iterable[str], op: Mapping, identity: str):
        self.elements = tuple(str(e) for e in elements)
        self.identity = str(identity)
        self.op = {}
        for a in self.elements:
            for b in self.elements:
                v = op[(a, b)] if (a, b) in op else op[(b, a)]
                self.op[(a, b)] = str(v)
        for a in self.elements:
            if self.op[(a, self.identity)] != a:
                raise ValueError("identity law fails")
        self.inverse = {}
        for a in self.elements:
            invs = [b for b in self.elements if self.op[(a, b)] == self.identity]
            if len(invs) != 1:
                raise ValueError(f"no unique inverse for {a}")
            self.inverse[a] = invs[0]

    @staticmethod
    def cyclic(n: int) -> "GroupTable":
        els = [str(i) for i in range(n)]
        op = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
        return GroupTable(els, op, "0")

    @staticmethod
    def direct_product(g: "GroupTable", h: "GroupTable") -> "GroupTable":
        els = [f"{a},{b}" for a in g.elements for b in h.elements]
        op = {}
        for a1 in g.elements:
            for b1 in h.elements:
                for a2 in g.elements:
                    for b2 in h.elements:
                        op[(f"{a1},{b1}", f"{a2},{b2}")] = f"{g.op[(a1, a2)]},{h.op[(b1, b2)]}"
        return GroupTable(els, op, f"{g.identity},{h.identity}")

    def is_automorphism(self, f: Mapping) -> bool:
        if sorted(f.values()) != sorted(self.elements):
            return False
        return all(f[self.op[(a, b)]] == self.op[(f[a], f[b])]
                   for a in self.elements for b in self.elements)


def orbit_hypergroup(group: GroupTable, autos: list) -> HyperTable:
    """Hypergroup of orbits of a finite abelian group under a group of its
    automorphisms: the class of g1 composed with the class of g2 is the set
    of classes meeting {a1*a2 : a1 in orbit(g1), a2 in orbit(g2)}.

    `autos` is a list of dict maps; it must contain the identity and be
    closed under composition and inverse. The result is additive-only.
    """
    maps = [dict((str(k), str(v)) for k, v in f.items()) for f in autos]
    for f in maps:
        if not group.is_automorphism(f):
            raise ValueError("not an automorphism of the group")
    ident = {a: a for a in group.elements}
    if ident not in maps:
        raise ValueError("automorphism set must contain the identity")
    for f in maps:
        for g in maps:
            comp = {a: f[g[a]] for a in group.elements}
            if comp not in maps:
                raise ValueError("automorphism set not closed under composition")
        if {f[a]: a for a in group.elements} not in maps:
            raise ValueError("automorphism set not closed under inverse")

    orbit_of = {}
    orbits = []
    for a in group.elements:
        if a in orbit_of:
            continue
        orb = frozenset(f[a] for f in maps)
        orbits.append(orb)
        for b in orb:
            orbit_of[b] = orb
    label = {orb: "{" + ",".join(sorted(orb)) + "}" for orb in orbits}

    add = {}
    for o1 in orbits:
        for o2 in orbits:
            hits = {label[orbit_of[group.op[(a, b)]]] for a in o1 for b in o2}
            add[(label[o1], label[o2])] = hits
    zero = label[orbit_of[group.identity]]
    neg = {label[o]: label[orbit_of[group.inverse[next(iter(o))]]] for o in orbits}
    return HyperTable([label[o] for o in orbits], zero, add, neg=neg)
