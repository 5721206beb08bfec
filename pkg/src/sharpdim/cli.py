"""Command line front end: `python -m sharpdim <command> ...`."""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from sharpdim import grading
from sharpdim.dim_engine import BundleClass, FieldLabel, ShapeRequiredError, dim_sharp
from sharpdim.knot_db import (DatabaseFormatError, UnknownKnotError, default_db, lint_db,
                              load_db, lookup)
from sharpdim.slopes import Slope, farey_tree
from sharpdim.su2_obstruction import Status, classify_interval, slopes_in_interval
from sharpdim.triangle_algebra import failure_table, verify_knot_triangles

EXIT_OK, EXIT_INTERNAL, EXIT_UNKNOWN, EXIT_SHAPE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _knot(args):
    db = load_db(args.db) if args.db else default_db()
    rec = lookup(db, args.knot)
    try:
        fld = FieldLabel.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inv = rec.invariants_for(fld)
    if inv is None:
        raise UsageError(f"no invariants for {rec.name} over {fld}")
    return rec, inv


def _bundle(args) -> BundleClass:
    return BundleClass(args.bundle)


def cmd_dim(args) -> int:
    rec, inv = _knot(args)
    slope = Slope.parse(args.slope)
    res = dim_sharp(inv, slope, _bundle(args))
    if slope.is_infinite:
        formula = "1"
    elif res.exceptional:
        formula = f"exceptional slope, shape {inv.shape.value}"
    else:
        formula = f"{slope.den}*{inv.r} + |{slope.num} - {slope.den}*{inv.nu}|"
    payload = {"knot": rec.name, "field": str(inv.field), "slope": str(slope),
               "bundle": args.bundle, "dim": res.value, "exceptional": res.exceptional,
               "formula": formula}
    _emit(args, payload, str(res.value) if not args.verbose else f"{res.value}  ({formula})")
    return EXIT_OK


def cmd_table(args) -> int:
    rec, inv = _knot(args)
    lo, hi = args.interval if args.interval else (inv.nu - 5, inv.nu + 5)
    slopes = slopes_in_interval(Fraction(lo) - Fraction(1, 10**9), Fraction(hi) + Fraction(1, 10**9),
                                args.den_max)
    rows = []
    for s in slopes:
        try:
            rows.append({"slope": str(s), "dim": dim_sharp(inv, s, _bundle(args)).value})
        except ShapeRequiredError:
            rows.append({"slope": str(s), "dim": None})
    text = "\n".join(f"{r['slope']:>8}  {r['dim'] if r['dim'] is not None else '?'}" for r in rows)
    _emit(args, {"knot": rec.name, "field": str(inv.field), "rows": rows}, text)
    return EXIT_OK


def _tree_lines(d: dict, indent=0):
    yield "  " * indent + d["slope"] + (" (split above)" if d.get("ref") else "")
    for c in d.get("children", []):
        yield from _tree_lines(c, indent + 1)


def cmd_farey(args) -> int:
    tree = farey_tree(Slope.parse(args.slope)).to_dict()
    _emit(args, tree, "\n".join(_tree_lines(tree)))
    return EXIT_OK


def cmd_check_triangles(args) -> int:
    _, inv = _knot(args)
    window = tuple(int(x) for x in args.interval) if args.interval else None
    checks = verify_knot_triangles(inv, args.den_max, window)
    fails = [c for c in checks if c.verdict == "fail"]
    skipped = sum(c.verdict == "skipped" for c in checks)
    payload = {"checked": len(checks), "skipped": skipped, "failures": [c.to_dict() for c in fails]}
    text = failure_table(checks) + (f"\n{skipped} skipped (shape unknown)" if skipped else "")
    _emit(args, payload, text)
    return EXIT_OK if not fails else EXIT_INTERNAL


def cmd_check_grading(args) -> int:
    bad = grading.congruence_violations()
    survivors = []
    for kc in grading.K_CLASSES:
        for parts in itertools.product(range(1, args.total + 1), repeat=4):
            if sum(parts) <= args.total:
                x = grading.GradedDim(*parts)
                if not grading.vw_contradiction(kc, x):
                    survivors.append([kc, list(parts)])
    payload = {"congruence_violations": bad, "non_contradictions": survivors}
    text = (f"congruences: {'ok' if not bad else '; '.join(bad)}\n"
            f"quadruples up to total {args.total} without contradiction: {len(survivors)}")
    _emit(args, payload, text)
    return EXIT_OK if not bad and not survivors else EXIT_INTERNAL


def cmd_su2(args) -> int:
    rec, inv = _knot(args)
    lo, hi = (Fraction(x) for x in args.interval) if args.interval else (Fraction(0), Fraction(inv.nu + 2))
    results = classify_interval(inv, rec.alexander, lo, hi, args.den_max, speculative=args.speculative)
    rows = [{"slope": str(s), "status": v.status.value, "reason": v.reason} for s, v in results]
    surv = [r["slope"] for r in rows if r["status"] == Status.POSSIBLE.value]
    text = "\n".join(f"{r['slope']:>8}  {r['status']:<16} {r['reason']}" for r in rows)
    text += f"\nsurvivors: {', '.join(surv) if surv else 'none'}"
    _emit(args, {"knot": rec.name, "field": str(inv.field), "rows": rows, "survivors": surv}, text)
    return EXIT_OK


def cmd_db_validate(args) -> int:
    db = load_db(args.path) if args.path else (load_db(args.db) if args.db else default_db())
    vs = lint_db(db)
    payload = {"records": len(db), "violations": [str(v) for v in vs]}
    _emit(args, payload, "\n".join([f"{len(db)} records, {len(vs)} violations"] + [str(v) for v in vs]))
    return EXIT_OK if not vs else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="C", help="C, char0, F2 or Fp:<p>")
    common.add_argument("--bundle", choices=["triv", "mu"], default="triv")
    common.add_argument("--db", help="knot database JSON (default: $SHARPDIM_DB or built-in)")
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--den-max", type=int, default=5)
    common.add_argument("--interval", nargs=2, metavar=("LO", "HI"))

    ap = argparse.ArgumentParser(prog="sharpdim", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("dim", parents=[common])
    p.add_argument("knot")
    p.add_argument("slope")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_dim)
    p = sub.add_parser("table", parents=[common])
    p.add_argument("knot")
    p.set_defaults(func=cmd_table)
    p = sub.add_parser("farey", parents=[common])
    p.add_argument("slope")
    p.set_defaults(func=cmd_farey)
    p = sub.add_parser("check-triangles", parents=[common])
    p.add_argument("knot")
    p.set_defaults(func=cmd_check_triangles)
    p = sub.add_parser("check-grading", parents=[common])
    p.add_argument("--total", type=int, default=12)
    p.set_defaults(func=cmd_check_grading)
    p = sub.add_parser("su2", parents=[common])
    p.add_argument("knot")
    p.add_argument("--speculative", action="store_true", help="scan (2, 8]; results unproven")
    p.set_defaults(func=cmd_su2)
    p = sub.add_parser("db-validate", parents=[common])
    p.add_argument("path", nargs="?")
    p.set_defaults(func=cmd_db_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnknownKnotError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ShapeRequiredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except (ValueError, DatabaseFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
