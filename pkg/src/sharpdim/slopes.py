"""Exact surgery-slope arithmetic and the Farey splits built on it.

>>> farey_split(make_slope(2, 3))
(Slope(num=1, den=1), Slope(num=1, den=2), Slope(num=0, den=1))
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction


@functools.total_ordering
@dataclass(frozen=True)
class Slope:
    """A reduced slope p/q with q >= 0; infinity is 1/0."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"slope {self.num}/{self.den} is not reduced; use make_slope")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    @property
    def is_even(self) -> bool:
        """True when the numerator is even (the bundle class then matters)."""
        return self.num % 2 == 0

    @property
    def value(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            raise TypeError("infinite slope is not ordered")
        return self.value < other.value

    def __neg__(self) -> Slope:
        return make_slope(-self.num, self.den)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    @classmethod
    def parse(cls, text: str) -> Slope:
        s = text.strip().lower()
        if s in ("inf", "infinity", "∞"):
            return INF
        if "/" in s:
            p, q = s.split("/", 1)
            return make_slope(int(p), int(q))
        return make_slope(int(s), 1)


def make_slope(num: int, den: int) -> Slope:
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a slope")
    g = math.gcd(num, den)
    num, den = num // g, den // g
    if den < 0 or (den == 0 and num < 0):
        num, den = -num, -den
    return Slope(num, den)


INF = Slope(1, 0)
ZERO = Slope(0, 1)


def det(a: tuple[int, int], b: tuple[int, int]) -> int:
    return a[0] * b[1] - b[0] * a[1]


@dataclass(frozen=True)
class Triad:
    """Slopes r0, r1, r2 with signed representatives of cyclic determinant +1."""

    r0: Slope
    r1: Slope
    r2: Slope
    representatives: tuple[tuple[int, int], tuple[int, int], tuple[int, int]] = field(compare=False)

    @property
    def slopes(self) -> tuple[Slope, Slope, Slope]:
        return (self.r0, self.r1, self.r2)

    def rotate(self) -> Triad:
        reps = self.representatives
        return Triad(self.r1, self.r2, self.r0, (reps[1], reps[2], reps[0]))


def is_triad(r0: Slope, r1: Slope, r2: Slope) -> Triad | None:
    """Search the eight sign choices, '+' before '-', and return the first witness."""
    base = [(s.num, s.den) for s in (r0, r1, r2)]
    for signs in itertools.product((1, -1), repeat=3):
        reps = tuple((e * p, e * q) for e, (p, q) in zip(signs, base))
        if all(det(reps[i], reps[(i + 1) % 3]) == 1 for i in range(3)):
            return Triad(r0, r1, r2, reps)
    return None


def farey_parents(r: Slope) -> tuple[Slope, Slope]:
    """Farey parents (larger, smaller) of a slope with denominator > 1."""
    p, q = r.num, r.den
    if q < 2:
        raise ValueError(f"{r} has no Farey parents")
    # the larger parent a/b solves a*q - p*b = 1 with 0 < b < q
    b = (-pow(p, -1, q)) % q
    a = (1 + p * b) // q
    return make_slope(a, b), make_slope(p - a, q - b)


@functools.lru_cache(maxsize=None)
def farey_split(r0: Slope) -> tuple[Slope, Slope, Slope]:
    """Split r0 into (r1, r2, r3) with (r0, r1, r2) and (r1, r3, r2) both triads.

    r1 and r2 are the Farey parents of r0 (r1 the larger) and r3 is their
    difference, signed to agree with r0.
    """
    if r0.is_infinite or r0.num == 0 or r0.den <= 1:
        raise ValueError(f"farey_split needs a non-integer slope, got {r0}")
    r1, r2 = farey_parents(r0)
    sign_p = 1 if r0.num > 0 else -1
    r3 = make_slope(sign_p * abs(r1.num - r2.num), abs(r1.den - r2.den))
    return r1, r2, r3


def is_leaf(r: Slope) -> bool:
    return r.is_infinite or r.is_integer


@dataclass(frozen=True, eq=False)
class FareyNode:
    """A node of the splitting tree. Identical subtrees are shared, so walks dedupe."""

    slope: Slope
    children: tuple[FareyNode, ...] = ()
    triads: tuple[Triad, ...] = ()

    @property
    def depth(self) -> int:
        return _depth(self)

    def nodes(self):
        """Distinct nodes, each visited once."""
        seen, stack = set(), [self]
        while stack:
            node = stack.pop()
            if node.slope in seen:
                continue
            seen.add(node.slope)
            yield node
            stack.extend(node.children)

    def leaves(self) -> set[Slope]:
        return {n.slope for n in self.nodes() if not n.children}

    def to_dict(self, _seen: set | None = None) -> dict:
        """Nested form; a subtree already written out appears as {"slope", "ref": true}."""
        seen = set() if _seen is None else _seen
        out: dict = {"slope": str(self.slope)}
        if self.children:
            if self.slope in seen:
                out["ref"] = True
                return out
            seen.add(self.slope)
            out["children"] = [c.to_dict(seen) for c in self.children]
        return out


@functools.lru_cache(maxsize=None)
def _depth(node: FareyNode) -> int:
    return 1 + max((_depth(c) for c in node.children), default=0)


@functools.lru_cache(maxsize=4096)
def farey_tree(r: Slope) -> FareyNode:
    """Split non-integer slopes recursively until every leaf is an integer or infinity.

    The companion slope is split too, so the expanded tree can grow like a Fibonacci
    sequence (1/n needs 1/(n-1) and 1/(n-2)); memoised nodes keep it linear.
    """
    if is_leaf(r):
        return FareyNode(r)
    r1, r2, r3 = farey_split(r)
    top = is_triad(r, r1, r2)
    bottom = is_triad(r1, r3, r2)
    assert top is not None and bottom is not None
    return FareyNode(r, tuple(farey_tree(s) for s in (r1, r2, r3)), (top, bottom))
