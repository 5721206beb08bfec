"""Obstructing SU(2)-abelian surgeries: an SU(2)-abelian surgery with admissible
numerator p has instanton homology of dimension exactly |p|, so any larger
dimension rules it out.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from sharpdim.dim_engine import BundleClass, FieldInvariants, dim_sharp
from sharpdim.laurent import LaurentPoly, cyclotomic, divides
from sharpdim.slopes import Slope, make_slope


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """p = a**e or p = 2 * a**e with a prime; a is None only for p = 1."""

    a: int | None
    e: int
    doubled: bool


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    a = next(d for d in range(2, n + 1) if n % d == 0)
    e = 0
    while n % a == 0:
        n //= a
        e += 1
    return (a, e) if n == 1 else None


def admissible_numerator(p: int, allow_zero_exponent: bool = True) -> Witness | None:
    """Smallest-prime witness for p in {a**e, 2 * a**e}, preferring the undoubled form.

    Only p = 1 needs e = 0; with allow_zero_exponent=False it is not admissible.
    """
    p = abs(p)
    if p == 1:
        return Witness(None, 0, False) if allow_zero_exponent else None
    if pp := _prime_power(p):
        return Witness(pp[0], pp[1], False)
    if p % 2 == 0 and (pp := _prime_power(p // 2)):
        return Witness(pp[0], pp[1], True)
    return None


@dataclass(frozen=True)
class Nondegeneracy:
    holds: bool
    violating_d: int | None = None


def validate_alexander(alex: LaurentPoly) -> None:
    if not alex.is_symmetric():
        raise ValueError(f"Alexander polynomial {alex} is not symmetric")
    if alex(1) not in (1, -1):
        raise ValueError(f"Alexander polynomial {alex} has value {alex(1)} at 1")


def nondegenerate(alex: LaurentPoly, p: int) -> Nondegeneracy:
    """No cyclotomic factor of order d > 1 with d | a**e divides the Alexander polynomial."""
    w = admissible_numerator(p)
    if w is None:
        raise NotAdmissibleError(f"{p} is not of the form a^e or 2a^e")
    if w.a is None:
        return Nondegeneracy(True)
    num = alex.numerator()
    for j in range(1, w.e + 1):
        d = w.a**j
        if divides(cyclotomic(d), num):
            return Nondegeneracy(False, d)
    return Nondegeneracy(True)


class Status(enum.Enum):
    NOT_ABELIAN_DIM = "not_abelian_dim"
    POSSIBLE = "possible"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    certificate: dict = field(default_factory=dict, compare=False)


def obstruct_slope(inv: FieldInvariants, alex: LaurentPoly, slope: Slope) -> Verdict:
    if slope.is_infinite or slope.num <= 0:
        raise ValueError(f"need a positive finite slope, got {slope}")
    validate_alexander(alex)
    p = slope.num
    w = admissible_numerator(p)
    if w is None:
        return Verdict(Status.NOT_APPLICABLE, f"{p} is not a prime power or twice one")
    nd = nondegenerate(alex, p)
    if not nd.holds:  # cannot happen for a valid Alexander polynomial
        return Verdict(Status.NOT_APPLICABLE, f"cyclotomic factor of order {nd.violating_d}")
    d = dim_sharp(inv, slope, BundleClass.TRIVIAL).value
    cert = {"slope": str(slope), "dim": d, "p": p, "a": w.a, "e": w.e, "doubled": w.doubled}
    if d > p:
        return Verdict(Status.NOT_ABELIAN_DIM, f"dim {d} > {p}", cert)
    return Verdict(Status.POSSIBLE, f"dim {d} = {p}", cert)


def slopes_in_interval(lo, hi, max_den: int, closed_hi: bool = False) -> list[Slope]:
    """Reduced p/q with lo < p/q < hi (or <= hi) and q <= max_den, by value then q."""
    out = []
    for q in range(1, max_den + 1):
        for p in range(math.floor(lo * q), math.ceil(hi * q) + 1):
            v = Fraction(p, q)
            if math.gcd(p, q) == 1 and lo < v and (v < hi or (closed_hi and v == hi)):
                out.append(make_slope(p, q))
    return sorted(set(out), key=lambda s: (s.value, s.den))


# A speculative range beyond what the obstruction settles; never asserted anywhere.
SPECULATIVE_INTERVAL = (2, 8)


def classify_interval(inv: FieldInvariants, alex: LaurentPoly, lo, hi, max_den: int,
                      speculative: bool = False) -> list[tuple[Slope, Verdict]]:
    if speculative:
        lo, hi = SPECULATIVE_INTERVAL
    return [(s, obstruct_slope(inv, alex, s))
            for s in slopes_in_interval(lo, hi, max_den, closed_hi=speculative)]
