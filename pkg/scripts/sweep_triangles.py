"""Check exact-triangle feasibility for every knot and field in a database.

usage: python scripts/sweep_triangles.py [--den-max 15] [--width 6] [--db path]
"""
import argparse
import time

from sharpdim.dim_engine import FieldLabel
from sharpdim.knot_db import default_db, load_db
from sharpdim.triangle_algebra import failure_table, verify_knot_triangles


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--den-max", type=int, default=15)
    ap.add_argument("--width", type=int, default=6)
    ap.add_argument("--db")
    args = ap.parse_args()
    db = load_db(args.db) if args.db else default_db()
    for rec in db:
        invs = [rec.invariants_for(FieldLabel(0))] if rec.field_independent else rec.invariants
        for inv in invs:
            t = time.perf_counter()
            checks = verify_knot_triangles(inv, args.den_max, (inv.nu - args.width, inv.nu + args.width))
            skipped = sum(c.verdict == "skipped" for c in checks)
            head = failure_table(checks).splitlines()
            print(f"{rec.name:>14} {str(inv.field):>3}  {len(checks):6d} checks  {head[0]:>11}"
                  f"  {skipped} skipped  {time.perf_counter() - t:.2f}s")
            for line in head[1:20]:
                print(line)


if __name__ == "__main__":
    main()
