"""Z/4-graded dimension bookkeeping through pairs of exact triangles.

Around an even integer slope 2k, the route 2k-1 -> 2k -> 2k+1 can pass through the
trivial or the meridian bundle class. If both middle terms were one dimension smaller
than their neighbours the two routes would disagree:

>>> vw_contradiction("positive", GradedDim(2, 1, 1, 1))
True
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class InfeasibleTriangleError(ValueError):
    pass


K_CLASSES = ("positive", "zero", "negative")
ROUTES = ("trivial", "meridian")


@dataclass(frozen=True)
class GradedDim:
    d0: int
    d1: int
    d2: int
    d3: int

    @property
    def parts(self) -> tuple[int, int, int, int]:
        return (self.d0, self.d1, self.d2, self.d3)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def shift(self, s: int) -> GradedDim:
        """Image under a map of degree s: grading g moves to g + s."""
        out = [0] * 4
        for g, v in enumerate(self.parts):
            out[(g + s) % 4] = v
        return GradedDim(*out)

    def bump(self, g: int, amount: int) -> GradedDim:
        out = list(self.parts)
        out[g % 4] += amount
        return GradedDim(*out)


# shifts (s1..s6) for the two triangles 2k-1 -> 2k -> inf and 2k -> 2k+1 -> inf
_TABLE = {
    ("positive", "trivial"): (0, 0, 3, 0, 2, 1),
    ("zero", "trivial"): (3, 2, 2, 2, 2, 3),
    ("negative", "trivial"): (0, 1, 2, 0, 3, 0),
    ("positive", "meridian"): (0, 2, 1, 0, 0, 3),
    ("zero", "meridian"): (3, 0, 0, 2, 0, 1),
    ("negative", "meridian"): (0, 3, 0, 0, 1, 2),
}


def k_class_of(k: int) -> str:
    return "positive" if k > 0 else "zero" if k == 0 else "negative"


def shift_table(k_class: str, route: str, lift: str = "s1") -> tuple[int, ...]:
    """Grading shifts; lift "s0" regrades the meridian middle term by 2."""
    s = _TABLE[(k_class, route)]
    if lift == "s0" and route == "meridian":
        # maps into the middle term gain 2, maps out of it lose 2
        s = ((s[0] + 2) % 4, (s[1] - 2) % 4, s[2], (s[3] - 2) % 4, s[4], (s[5] + 2) % 4)
    elif lift not in ("s0", "s1"):
        raise ValueError(f"unknown lift {lift!r}")
    return s


def propagate_triangle(x: GradedDim, shifts: tuple[int, int, int], delta: int) -> GradedDim:
    """Graded dimension of B in A -> B -> H(inf) -> A, where dim B = dim A + delta.

    H(inf) is one-dimensional in grading 0. For delta = +1 the map to it is onto and
    the extra class sits in grading -s_b_inf; for delta = -1 the map from it is
    injective and kills one class of A in grading s_inf_a.
    """
    s_ab, s_binf, s_infa = shifts
    if delta == 1:
        return x.shift(s_ab).bump(-s_binf, 1)
    if delta == -1:
        if x.parts[s_infa % 4] == 0:
            raise InfeasibleTriangleError(f"no class in grading {s_infa % 4} of {x.parts}")
        return x.bump(s_infa, -1).shift(s_ab)
    raise ValueError("delta must be +1 or -1")


def two_step(k_class: str, route: str, x: GradedDim, sign: int, lift: str = "s1") -> GradedDim:
    """Graded H(2k+1) from graded H(2k-1) when the middle term has dim H(2k-1) + sign."""
    s = shift_table(k_class, route, lift)
    mid = propagate_triangle(x, s[:3], sign)
    return propagate_triangle(mid, s[3:], -sign)


def vw_contradiction(k_class: str, x: GradedDim, lift: str = "s1") -> bool:
    """Do the two routes disagree when both middle terms are dips?"""
    a = two_step(k_class, "trivial", x, -1, lift)
    b = two_step(k_class, "meridian", x, -1, lift)
    return a != b


def consistent_sign_pairs(k_class: str, x: GradedDim) -> set[tuple[int, int]]:
    """Sign pairs (trivial, meridian) whose two routes agree on graded H(2k+1)."""
    out = set()
    for st, sm in itertools.product((1, -1), repeat=2):
        try:
            if two_step(k_class, "trivial", x, st) == two_step(k_class, "meridian", x, sm):
                out.add((st, sm))
        except InfeasibleTriangleError:
            pass
    return out


def congruence_violations() -> list[str]:
    """Check the stored tables against the congruences linking the two routes."""
    bad = []
    for kc in K_CLASSES:
        i = shift_table(kc, "trivial")
        j = shift_table(kc, "meridian")
        for name, tup in (("i", i), ("j", j)):
            if sum(tup[:3]) % 4 != 3 or sum(tup[3:]) % 4 != 3:
                bad.append(f"{kc}: {name} triangle sums are not 3 mod 4")
        if j[0] != i[0] or j[3] != i[3]:
            bad.append(f"{kc}: j1/j4 differ from i1/i4")
        if j[1] != (i[1] + 2) % 4 or j[4] != (i[4] + 2) % 4:
            bad.append(f"{kc}: j2/j5 are not i2/i5 + 2")
    return bad
