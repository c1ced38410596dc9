"""Command-line front end: axiom sweeps, quotient construction, Spec
hyperoperations, sign-point evaluation, rational hypersums, and the counting
numerics. Exit codes: 0 success, 1 domain error, 2 usage error.

All numeric output uses 12 significant digits and set-valued output is
canonically sorted, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .counting import (
    CountingFn,
    counting_n,
    explicit_formula_check,
    omega_one_closed,
    omega_partial,
    soule_zeta_limit,
)
from .exactmath import AlgebraicReal, FpPoly, IntPoly, isolate_real_roots
from .hypercore import (
    GroupTable,
    HyperTable,
    check_canonical_hypergroup,
    check_hyperring,
    krasner_table,
    sign_table,
)
from .quotients import FiniteRing, kg_hyperfield, quotient_hyperring, subgroup_closure
from .spec_k import HyperResult, SpecKPoint, spec_add, spec_mul
from .spec_s import SignPoint, evaluate, glue_build, s_add, s_mul, sorted_points
from .zeta_zeros import load_zeros


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


# -- structures for the axioms subcommand ---------------------------------------


def _relabel_group(g: GroupTable, prefix: str = "g") -> GroupTable:
    els = [f"{prefix}{e}" for e in g.elements]
    op = {(f"{prefix}{a}", f"{prefix}{b}"): f"{prefix}{g.op[(a, b)]}"
          for a in g.elements for b in g.elements}
    return GroupTable(els, op, f"{prefix}{g.identity}")


def _group_from_spec(text: str) -> GroupTable:
    parts = [int(p) for p in text.split("x")]
    g = GroupTable.cyclic(parts[0])
    for n in parts[1:]:
        g = GroupTable.direct_product(g, GroupTable.cyclic(n))
    return g


def _structure_from_spec(spec: str) -> tuple:
    if spec == "krasner":
        return krasner_table(), "hyperring"
    if spec == "sign":
        return sign_table(), "hyperring"
    if spec.startswith("kg:"):
        group = _relabel_group(_group_from_spec(spec[3:]))
        return kg_hyperfield(group), "hyperring"
    if spec.startswith("quotient:"):
        p, k = (int(v) for v in spec[len("quotient:"):].split(","))
        ring = FiniteRing.gf(p, k)
        units = subgroup_closure(ring, [(c,) for c in range(1, p)])
        return quotient_hyperring(ring, units), "hyperring"
    if spec.startswith("glue:"):
        _, n, members = spec.split(":")
        group = GroupTable.cyclic(int(n))
        return glue_build(group, set(members.split(","))), "hypergroup"
    raise ValueError(f"unknown structure {spec!r}")


def _cmd_axioms(args) -> int:
    if args.table:
        with open(args.table) as fh:
            table = HyperTable.from_json(fh.read())
        kind = "hyperring" if table.mul is not None else "hypergroup"
    else:
        table, kind = _structure_from_spec(args.structure)
    if kind == "hyperring":
        report = check_hyperring(table)
        scope = "H1..H5, R-a..R-e"
    else:
        report = check_canonical_hypergroup(table)
        scope = "H1..H5"
    if report.passed:
        print(f"PASS ({scope})")
        return 0
    for axiom, witness in report.violations:
        print(f"FAIL {axiom} at {witness}")
    return 1


def _cmd_quotient(args) -> int:
    p, k = (int(v) for v in args.field.split(","))
    ring = FiniteRing.gf(p, k)
    if args.units == "full":
        gens = [(c,) for c in range(1, p)]
    elif args.units.startswith("gens:"):
        gens = []
        for part in args.units[len("gens:"):].split(";"):
            gens.append(tuple(int(c) for c in part.split(",")))
    else:
        raise ValueError("units must be 'full' or 'gens:<coeffs;coeffs;...>'")
    group = subgroup_closure(ring, gens)
    table = quotient_hyperring(ring, group)
    text = table.to_json()
    report = check_hyperring(table)
    out = sys.stdout if not args.out else open(args.out, "w")
    try:
        out.write(text + "\n")
    finally:
        if args.out:
            out.close()
    print(f"axioms: {report.summary()}")
    return 0 if report.passed else 1


# -- spec subcommand --------------------------------------------------------------


def _parse_spec_point(text: str, fiber: int) -> SpecKPoint:
    text = text.strip()
    if text in ("delta", "delta_p") or text.startswith("delta_"):
        return SpecKPoint.generic(fiber)
    poly = IntPoly.from_text(text)
    if fiber == 0:
        return SpecKPoint.closed0(poly)
    return SpecKPoint.closedp(fiber, FpPoly.from_int_poly(poly, fiber))


def _parse_fiber(text: str) -> int:
    if text == "0":
        return 0
    if text.startswith("p="):
        return int(text[2:])
    raise ValueError("fiber must be '0' or 'p=<prime>'")


def _cmd_spec(args) -> int:
    fiber = _parse_fiber(args.fiber)
    x = _parse_spec_point(args.f, fiber)
    y = _parse_spec_point(args.g, fiber)
    result = spec_add(x, y) if args.op == "add" else spec_mul(x, y)
    print(str(result))
    return 0


# -- sign subcommand ----------------------------------------------------------------


def _parse_sign_point(text: str, side_flag: str | None = None) -> SignPoint:
    """Grammar: 'omega[+|-]:<poly>:(lo,hi)' | 'omega[+|-]:<poly>:#k' |
    'omega[+|-]:<rational>' | 'inf:+' | 'inf:-'."""
    text = text.strip()
    if text.startswith("inf:"):
        return SignPoint.infinity(1 if text.endswith("+") else -1)
    if not text.startswith("omega"):
        raise ValueError(f"bad point spec {text!r}")
    rest = text[len("omega"):]
    side = 0
    if rest[:1] in ("+", "-"):
        side = 1 if rest[0] == "+" else -1
        rest = rest[1:]
    if not rest.startswith(":"):
        raise ValueError(f"bad point spec {text!r}")
    rest = rest[1:]
    if side_flag is not None and side_flag != "":
        side = {"+": 1, "-": -1, "0": 0}[side_flag]
    parts = rest.split(":")
    if len(parts) == 1:
        alpha = AlgebraicReal.from_rational(Fraction(parts[0]))
        return SignPoint.at(alpha, side)
    polytext, locator = parts
    poly = IntPoly.from_text(polytext).primitive()
    if locator.startswith("#"):
        roots = isolate_real_roots(poly)
        idx = int(locator[1:])
        if not 1 <= idx <= len(roots):
            raise ValueError(f"{polytext} has {len(roots)} real roots")
        alpha = roots[idx - 1]
    else:
        if not (locator.startswith("(") and locator.endswith(")")):
            raise ValueError(f"bad interval {locator!r}")
        lo, hi = (Fraction(v) for v in locator[1:-1].split(","))
        alpha = AlgebraicReal(poly, lo, hi)
    return SignPoint.at(alpha, side)


def _cmd_sign(args) -> int:
    if args.op == "eval":
        point = _parse_sign_point(args.point, args.side)
        value = evaluate(point, IntPoly.from_text(args.poly))
        print(value)
        return 0
    a = _parse_sign_point(args.a)
    b = _parse_sign_point(args.b)
    result = s_add(a, b) if args.op == "add" else s_mul(a, b)
    print(" ".join(str(p) for p in sorted_points(result)))
    return 0


# -- rconvex subcommand ---------------------------------------------------------------


def _cmd_rconvex(args) -> int:
    from .rconvex import c_add

    print(str(c_add(_parse_fraction(args.x), _parse_fraction(args.y))))
    return 0


# -- counting subcommands ----------------------------------------------------------------


def _cmd_count(args) -> int:
    zeros = load_zeros(args.zeros)
    if args.mode == "N":
        m = args.m
        rows = ["u,N_partial,m"]
        u = args.u_from
        while u <= args.u_to + 1e-12:
            rows.append(f"{_fmt(u)},{_fmt(counting_n(u, m, zeros))},{m}")
            u += args.step
        text = "\n".join(rows) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if args.mode == "omega1":
        partial = omega_partial(1.0, args.m, zeros)
        closed = omega_one_closed()
        print(f"omega1_partial={_fmt(partial)} m={args.m}")
        print(f"omega1_closed={_fmt(closed)}")
        print(f"abs_error={_fmt(abs(partial - closed))}")
        return 0
    if args.mode == "explicit":
        res = explicit_formula_check(args.x, args.m, zeros)
        print(f"residual={_fmt(res)} x={_fmt(args.x)} m={args.m}")
        return 0
    raise ValueError(f"unknown count mode {args.mode!r}")


_MODELS = {
    "p1": CountingFn.projective_line,
    "affine": CountingFn.affine_line,
    "zero": CountingFn.zero,
}


def _cmd_zeta(args) -> int:
    if args.model.startswith("poly:"):
        coeffs = [float(c) for c in args.model[len("poly:"):].split(",")]
        model = CountingFn.polynomial(coeffs)
    else:
        model = _MODELS[args.model]()
    value = soule_zeta_limit(model, args.s, args.q)
    print(_fmt(value))
    return 0


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperalg",
                                 description="exact hyperfield structures and zeta counting numerics")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="run the hypergroup/hyperring axiom sweep")
    p.add_argument("--structure", default="krasner",
                   help="krasner | sign | kg:<n[xn...]> | quotient:<p>,<k> | glue:<n>:<members>")
    p.add_argument("--table", help="JSON table file (overrides --structure)")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("quotient", help="build F_{p^k}/G and emit table plus report")
    p.add_argument("--field", required=True, help="p,k")
    p.add_argument("--units", default="full", help="full | gens:<coeffs;...>")
    p.add_argument("--out", help="write the table JSON here instead of stdout")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("spec", help="hyperoperations on Spec points")
    p.add_argument("op", choices=["add", "mul"])
    p.add_argument("--fiber", default="0", help="0 | p=<prime>")
    p.add_argument("--f", required=True, help="polynomial text or delta/delta_p")
    p.add_argument("--g", required=True)
    p.set_defaults(func=_cmd_spec)

    p = sub.add_parser("sign", help="sign-point evaluation and hyperoperations")
    p.add_argument("op", choices=["eval", "add", "mul"])
    p.add_argument("--point", help="for eval: omega:<poly>:(lo,hi) | omega:<rational> | inf:+")
    p.add_argument("--side", default="", help="for eval: + | - | 0")
    p.add_argument("--poly", help="for eval: polynomial text")
    p.add_argument("--a", help="for add/mul")
    p.add_argument("--b", help="for add/mul")
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("rconvex", help="hypersum of two rationals")
    p.add_argument("op", choices=["add"])
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_rconvex)

    p = sub.add_parser("count", help="counting-function numerics")
    p.add_argument("mode", choices=["N", "omega1", "explicit"])
    p.add_argument("--zeros", help="zeros file (default: bundled first 10^4)")
    p.add_argument("--m", type=int, default=10000)
    p.add_argument("--u-from", dest="u_from", type=float, default=1.1)
    p.add_argument("--u-to", dest="u_to", type=float, default=20.0)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--x", type=float, default=10.5)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("zeta", help="q -> 1 zeta limit of a counting function")
    p.add_argument("--model", default="p1", help="p1 | affine | zero | poly:<c0,c1,...>")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--q", type=float, default=1.00001)
    p.set_defaults(func=_cmd_zeta)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # let "rconvex add 1 -1/2" pass negative rationals positionally
    if argv[:2] == ["rconvex", "add"] and "--" not in argv:
        argv.insert(2, "--")
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
