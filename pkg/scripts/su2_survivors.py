"""List slopes in an interval that the dimension bound does not rule out as SU(2)-abelian.

usage: python scripts/su2_survivors.py T23 F2 2 6 --den-max 12
"""
import argparse
from collections import Counter
from fractions import Fraction

from sharpdim.dim_engine import FieldLabel
from sharpdim.knot_db import default_db, lookup
from sharpdim.su2_obstruction import Status, classify_interval


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("knot")
    ap.add_argument("field")
    ap.add_argument("lo", type=Fraction)
    ap.add_argument("hi", type=Fraction)
    ap.add_argument("--den-max", type=int, default=12)
    args = ap.parse_args()
    rec = lookup(default_db(), args.knot)
    inv = rec.invariants_for(FieldLabel.parse(args.field))
    res = classify_interval(inv, rec.alexander, args.lo, args.hi, args.den_max)
    print(dict(Counter(v.status.value for _, v in res)))
    surv = [s for s, v in res if v.status is Status.POSSIBLE]
    print(f"{len(surv)} survivors, smallest {surv[0] if surv else '-'}")
    print(" ".join(map(str, surv)))


if __name__ == "__main__":
    main()
