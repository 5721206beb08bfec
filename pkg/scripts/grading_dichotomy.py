"""Tabulate which sign patterns around an even slope survive the graded two-route check."""
import itertools
from collections import Counter

from sharpdim.grading import K_CLASSES, GradedDim, consistent_sign_pairs


def main(total: int = 12):
    for kc in K_CLASSES:
        seen = Counter()
        for parts in itertools.product(range(1, total + 1), repeat=4):
            if sum(parts) <= total:
                seen[frozenset(consistent_sign_pairs(kc, GradedDim(*parts)))] += 1
        for pairs, n in seen.items():
            print(f"{kc:>8}: {sorted(pairs)}  x{n}")


if __name__ == "__main__":
    main()
