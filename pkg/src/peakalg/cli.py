"""Command-line front end: build tables, run verification suites, and
import/export group-algebra elements as JSON.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .perms import CapExceeded


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


TABLE_CAPS = {"P": 6, "whp": 6, "solB": 4, "SigA": 6, "SigB": 4, "SigD": 4}
TABLE_CAPS_DEEP = {"P": 6, "whp": 6, "solB": 5, "SigA": 6, "SigB": 5, "SigD": 5}


def cmd_table(args) -> int:
    caps = TABLE_CAPS_DEEP if args.deep else TABLE_CAPS
    cap = caps[args.algebra]
    if args.n > cap:
        raise CapExceeded(f"table {args.algebra} is capped at n={cap} (use --deep for more)")
    if args.algebra == "P":
        from .peak import peak_table

        table = peak_table(args.n)
    elif args.algebra == "whp":
        from .commutative import whp_table

        table = whp_table(args.n)
    elif args.algebra == "solB":
        from .commutative import solhat_table

        table = solhat_table(args.n)
    else:
        from .bases import structure_constants

        ctype = {"SigA": "A", "SigB": "B", "SigD": "D"}[args.algebra]
        table = structure_constants(ctype, args.n, "Y")
    if args.format == "csv":
        _write_out(table.to_csv(), args.out)
    elif args.format == "json":
        _write_out(json.dumps(table.to_json(), indent=2), args.out)
    else:
        _write_out(table.pretty(), args.out)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, args.n_max, deep=args.deep, jobs=args.jobs)
    if args.format == "json":
        _write_out(report.to_json(include_times=args.times), args.out)
    else:
        _write_out(report.pretty(), args.out)
    return 0 if report.passed else 1


def _parse_alpha(text: str) -> tuple:
    from .mr import comp_from_text

    return comp_from_text(text)


def _build_element(args):
    from .algebra import AlgElem
    from .perms import GeneratorSet, PeakIndex

    kind = args.kind
    n = args.n
    if kind == "identity":
        return AlgElem.unit(args.group, n)
    if kind in ("Y", "X"):
        ctype = {"S": "A", "B": "B", "D": "D"}[args.group]
        from .bases import x_basis, y_basis

        gs = GeneratorSet.parse(ctype, n, args.label or "{}")
        return (y_basis if kind == "Y" else x_basis)(ctype, n, gs.mask)
    if kind in ("Y0", "X0"):
        from .maps import x0_basis, y0_basis

        gs = GeneratorSet.parse("B", n, args.label or "{}")
        if gs.mask & 1:
            raise ValueError("the 0 of the ideal label is implicit")
        return (y0_basis if kind == "Y0" else x0_basis)(n, gs.mask)
    if kind in ("P", "Pint"):
        from .peak import interior_peak_basis, peak_basis

        body = (args.label or "{}").strip().strip("{}")
        members = [int(t) for t in body.split(",") if t.strip()]
        mask = PeakIndex.from_members(n, members).mask
        return (peak_basis if kind == "P" else interior_peak_basis)(n, mask)
    if kind in ("T", "S", "Stilde"):
        from .mr import mr_basis

        return mr_basis(kind, n, _parse_alpha(args.alpha or f"({n})"))
    if kind in ("y", "x", "y0", "x0", "p", "pint"):
        from .commutative import graded_builder

        if args.j is None:
            raise ValueError(f"kind {kind} needs --j")
        return graded_builder(kind, n, args.j)
    raise ValueError(f"unknown element kind {kind!r}")


def cmd_export(args) -> int:
    from .algebra import elem_to_json

    elem = _build_element(args)
    _write_out(json.dumps(elem_to_json(elem), indent=2), args.out)
    return 0


MAPS = {
    "phi": lambda a: __maps().phi(a),
    "psi": lambda a: __maps().psi(a),
    "chi": lambda a: __maps().chi(a),
    "sigma": lambda a: __maps().sigma_map(a),
    "rho": lambda a: __maps().rho_map(a),
    "beta": lambda a: __maps().beta_map(a),
    "beta2": lambda a: __maps().beta2_map(a),
    "gamma": lambda a: __maps().gamma_map(a),
    "pi": lambda a: __pi(a),
    "theta": lambda a: __maps().theta(a),
    "theta_pm": lambda a: __maps().theta_pm(a),
}


def __maps():
    from . import maps

    return maps


def __pi(a):
    from .peak import pi_map

    return pi_map(a)


def cmd_apply(args) -> int:
    from .algebra import elem_from_json, elem_to_json

    with open(args.infile) as fh:
        elem = elem_from_json(json.load(fh))
    image = MAPS[args.map](elem)
    _write_out(json.dumps(elem_to_json(image), indent=2), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peakalg",
        description="descent and peak algebras of types A, B, D: tables, "
        "verification suites, element I/O",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit a multiplication table")
    t.add_argument("--algebra", choices=sorted(TABLE_CAPS), required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    t.add_argument("--deep", action="store_true")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    from .verify import SUITES

    v.add_argument("--suite", choices=["all", *sorted(SUITES)], default="all")
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--deep", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "pretty"), default="pretty")
    v.add_argument("--times", action="store_true", help="include wall times in JSON")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="export a named element as JSON")
    e.add_argument(
        "kind",
        choices=(
            "identity",
            "Y",
            "X",
            "Y0",
            "X0",
            "P",
            "Pint",
            "T",
            "S",
            "Stilde",
            "y",
            "x",
            "y0",
            "x0",
            "p",
            "pint",
        ),
    )
    e.add_argument("--group", choices=("S", "B", "D"), default="S")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--label", help="generator subset, e.g. \"{0,2}\" or \"{1',1}\"")
    e.add_argument("--alpha", help="signed composition, e.g. \"(2,-1,1)\"")
    e.add_argument("--j", type=int, help="graded index for y/x/y0/x0/p/pint")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    a = sub.add_parser("apply", help="apply a named map to a JSON element")
    a.add_argument("--map", choices=sorted(MAPS), required=True)
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--out")
    a.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
