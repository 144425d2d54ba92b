"""Command-line interface: every pipeline with machine-readable output.

Exit codes: 0 success, 1 mathematical inconsistency (with a structured
JSON diagnostic on stderr), 2 invalid arguments.  Output is
deterministic: fixed key order, exact rationals as "num/den" strings,
no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .covers import (
    OrbifoldSignature,
    cover_twisting,
    group_closure_order,
    riemann_hurwitz_cover,
    theorem_generator_pair,
)
from .errors import (
    InvalidArgumentError,
    MathematicalInconsistencyError,
    VeechFibError,
)
from .exact.finitefield import FiniteFieldSpec
from .exact.polynomials import parse_polynomial, rational_to_str
from .families import (
    CurveDataTable,
    admissible_primes,
    chern_scatter,
    chern_scatter_csv,
    elliptic_family,
    polygon_family,
    sporadic_family,
    weierstrass_family,
)
from .prototypes import enumerate_prototypes, prototypes_csv
from .thurston_veech import build_surface


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    elif fmt == "csv":
        print(_flat_csv(payload), end="")
    else:
        for key, value in _flatten(payload):
            print(f"{key:42s} {value}")


_TABLE_COLUMNS = (
    "family",
    "level",
    "degree",
    "cusps",
    "genus",
    "twisting",
    "euler",
    "sigma",
)


def _emit_family(result, fmt):
    if fmt == "csv":
        row = (
            result.spec.tag,
            result.level,
            result.cover.degree,
            result.cover.cusp_count,
            result.cover.base_genus,
            result.cover.total_twisting,
            result.invariants.euler,
            result.invariants.sigma,
        )
        print(",".join(_TABLE_COLUMNS))
        print(",".join(str(x) for x in row))
    else:
        _emit(result.to_json(), fmt)


def _flatten(payload, prefix=""):
    items = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            items.extend(_flatten(v, f"{prefix}{k}." if prefix else f"{k}."))
    elif isinstance(payload, list):
        items.append((prefix.rstrip("."), json.dumps(payload)))
    else:
        items.append((prefix.rstrip("."), payload))
    return items


def _flat_csv(payload):
    pairs = _flatten(payload)
    head = ",".join(str(k) for k, _ in pairs)
    row = ",".join(json.dumps(v) if isinstance(v, str) else str(v) for _, v in pairs)
    return f"{head}\n{row}\n"


def _data_table(args):
    if getattr(args, "data", None):
        return CurveDataTable.from_csv(args.data)
    return CurveDataTable()


def _cmd_prototypes(args):
    protos = enumerate_prototypes(args.D)
    if args.format == "csv":
        print(prototypes_csv(protos), end="")
    else:
        payload = {
            "D": args.D,
            "count": len(protos),
            "prototypes": [list(p.as_tuple()) for p in protos],
        }
        _emit(payload, args.format)
    return 0


def _load_spin_plugin(spec_text):
    """Import a user-supplied spin predicate given as 'module:function'."""
    import importlib

    module_name, _, attr = spec_text.partition(":")
    if not module_name or not attr:
        raise InvalidArgumentError("spin plugin must be given as module:function")
    return getattr(importlib.import_module(module_name), attr)


def _cmd_weierstrass(args):
    spin = _load_spin_plugin(args.spin_plugin) if args.spin_plugin else None
    result = weierstrass_family(args.D, args.p, data=_data_table(args), spin_filter=spin)
    _emit_family(result, args.format)
    return 0


def _cmd_polygon(args):
    result = polygon_family(args.n, args.p)
    _emit_family(result, args.format)
    return 0


def _cmd_sporadic(args):
    result = sporadic_family(args.which, args.p)
    _emit_family(result, args.format)
    return 0


def _cmd_elliptic(args):
    result = elliptic_family(args.m)
    _emit_family(result, args.format)
    return 0


def _cmd_cover(args):
    orders = tuple(int(x) for x in args.orbifold_orders.split(",")) if args.orbifold_orders else ()
    cusp_orders = tuple(int(x) for x in args.cusp_image_orders.split(","))
    sig = OrbifoldSignature(args.base_genus, orders, len(cusp_orders))
    cover = riemann_hurwitz_cover(sig, args.degree, orders, cusp_orders)
    if args.base_twists:
        twists = tuple(int(x) for x in args.base_twists.split(","))
        roots = (
            tuple(int(x) for x in args.roots.split(","))
            if args.roots
            else tuple(1 for _ in twists)
        )
        total, per_cusp = cover_twisting(cover.cusps_per_orbit, cusp_orders, twists, roots)
        cover = cover.with_twisting(per_cusp, total)
    _emit(cover.to_json(), args.format)
    return 0


def _cmd_group_order(args):
    modulus = parse_polynomial(args.modulus)
    field = FiniteFieldSpec(args.p, modulus)
    abar = None
    if args.alpha:
        abar = field.element(tuple(int(c) for c in args.alpha.split(",")))
    spec = theorem_generator_pair(field, abar)
    order = group_closure_order(spec, cap=args.cap)
    _emit({"p": args.p, "modulus": modulus.to_json(), "order": order}, args.format)
    return 0


def _cmd_tv_build(args):
    model = build_surface(args.family)
    _emit(model.to_json(), args.format)
    return 0


def _cmd_primes(args):
    primes = admissible_primes(args.family, args.bound)
    payload = {
        "family": args.family,
        "bound": args.bound,
        "admissible": [
            {"p": p, "exceptional": exceptional} for p, exceptional in primes
        ],
    }
    _emit(payload, args.format)
    return 0


def _cmd_scatter(args):
    rows, skipped = chern_scatter(args.min_D, args.max_D, args.p, data=_data_table(args))
    sys.stdout.write(chern_scatter_csv(rows))
    if args.verbose_skips:
        for d, reason in skipped:
            print(f"# skipped D={d}: {reason}", file=sys.stderr)
    return 0


def _cmd_verify(args):
    del args
    failures = 0
    for name, fn, expect in _verification_rows():
        try:
            got = fn()
            ok = got == expect
        except VeechFibError as exc:
            got, ok = f"{type(exc).__name__}: {exc}", False
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"[{status}] {name}: expected {expect}, got {got}")
    print(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failures")
    return 1 if failures else 0


def _verification_rows():
    def headline():
        r = weierstrass_family(5, 3)
        i = r.invariants
        return (
            r.cover.degree,
            r.cover.base_genus,
            r.cover.cusp_count,
            r.cover.total_twisting,
            i.euler,
            i.sigma,
            i.c1_squared,
            i.chi_holomorphic,
            i.geometric_genus,
            i.noether_line,
            rational_to_str(i.zero_section_self_intersections[0]),
        )

    def headline_polygon():
        r = polygon_family(5, 3)
        return (r.cover.degree, r.invariants.euler, r.invariants.sigma)

    def dickson():
        field = FiniteFieldSpec(3, parse_polynomial("x^2-x-1"))
        abar = field.element((1, 1))  # residue of the congruence parameter
        return group_closure_order(theorem_generator_pair(field, abar))

    def sporadic_ratios():
        out = []
        for which, want in (("E7", Fraction(-35, 9)), ("E8", Fraction(-64, 15))):
            found = []
            for p, _x in admissible_primes(which, 13)[:2]:
                r = sporadic_family(which, p)
                found.append(Fraction(r.invariants.sigma, r.cover.degree) == want)
            out.append(all(found) and len(found) >= 2)
        return out

    def elliptic_triple():
        return [
            (elliptic_family(m).invariants.euler, elliptic_family(m).invariants.sigma)
            for m in (3, 4, 5)
        ]

    return [
        (
            "double-pentagon headline (e = 4(g-1)(b-1)+T, sigma = -2k chi - 2T/3)",
            headline,
            (60, 0, 20, 120, 116, -72, 16, 11, 10, True, "-3/1"),
        ),
        ("double-pentagon via staircase pipeline", headline_polygon, (60, 116, -72)),
        ("F9 exceptional closure order", dickson, 120),
        ("sporadic sigma/degree = -35/9, -64/15", sporadic_ratios, [True, True]),
        (
            "elliptic levels 3,4,5: (e, sigma)",
            elliptic_triple,
            [(12, -8), (24, -16), (60, -40)],
        ),
        (
            "prototype counts |P_5|, |P_8|",
            lambda: (len(enumerate_prototypes(5)), len(enumerate_prototypes(8))),
            (1, 2),
        ),
    ]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="veechfib",
        description="Exact invariants of congruence covers and the fibered "
        "complex surfaces over them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(func=fn)
        cmd.add_argument(
            "--format", choices=("json", "csv", "table"), default="json"
        )
        return cmd

    cmd = add("prototypes", _cmd_prototypes, "enumerate cusp prototypes for a discriminant")
    cmd.add_argument("--D", type=int, required=True)

    cmd = add("weierstrass", _cmd_weierstrass, "genus-2 eigenform family at a level")
    cmd.add_argument("--D", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--data", help="CSV with columns D,chi_num,chi_den,e2")
    cmd.add_argument(
        "--spin-plugin",
        default="",
        help="module:function selecting one spin class of prototypes (D = 1 mod 8)",
    )

    cmd = add("polygon", _cmd_polygon, "regular polygon family at a level")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)

    cmd = add("sporadic", _cmd_sporadic, "E7 or E8 family at a level")
    cmd.add_argument("--which", choices=("E7", "E8"), required=True)
    cmd.add_argument("--p", type=int, required=True)

    cmd = add("elliptic", _cmd_elliptic, "genus-one series at a level")
    cmd.add_argument("--m", type=int, required=True)

    cmd = add("cover", _cmd_cover, "Riemann-Hurwitz data of a congruence cover")
    cmd.add_argument("--base-genus", type=int, default=0)
    cmd.add_argument("--orbifold-orders", default="", help="comma-separated cone orders")
    cmd.add_argument("--cusp-image-orders", required=True, help="comma-separated")
    cmd.add_argument("--degree", type=int, required=True)
    cmd.add_argument("--base-twists", default="", help="comma-separated twist counts")
    cmd.add_argument("--roots", default="", help="comma-separated root indices")

    cmd = add("group-order", _cmd_group_order, "brute-force order of the generated matrix group")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--modulus", required=True, help='e.g. "x^2-x-1"')
    cmd.add_argument(
        "--alpha", default="", help="comma-separated residue coefficients of the shear"
    )
    cmd.add_argument("--cap", type=int, default=10**7)

    cmd = add("tv-build", _cmd_tv_build, "build a flat-surface model")
    cmd.add_argument("--family", required=True, help="polygon-<n>, E7 or E8")

    cmd = add("primes", _cmd_primes, "admissible levels for a family")
    cmd.add_argument("--family", required=True)
    cmd.add_argument("--bound", type=int, required=True)

    cmd = add("scatter", _cmd_scatter, "Chern number scatter for the eigenform series")
    cmd.add_argument("--min-D", type=int, default=5)
    cmd.add_argument("--max-D", type=int, default=60)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--data", help="CSV with columns D,chi_num,chi_den,e2")
    cmd.add_argument("--verbose-skips", action="store_true")

    add("verify", _cmd_verify, "run the pinned-value regression table")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except (InvalidArgumentError,) as exc:
        _diagnostic(exc)
        return 2
    except (MathematicalInconsistencyError, VeechFibError) as exc:
        _diagnostic(exc)
        return 1


def _diagnostic(exc):
    payload = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(payload, indent=2), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
