"""Dimension of framed instanton homology for Dehn surgeries on a knot.

Everything is driven by a per-field triple (nu, r, shape):

>>> inv = FieldInvariants(nu=4, r=4, shape=Shape.W, field=FieldLabel(2))
>>> dim_sequence(inv, 3, 7)
[5, 6, 5, 6, 7]
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from sharpdim.slopes import Slope, make_slope


class ShapeRequiredError(ValueError):
    """Raised at the exceptional slope when the shape is unknown."""


class InvalidInvariantsError(ValueError):
    pass


class InsufficientRangeError(ValueError):
    pass


class NotRealizableError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldLabel:
    """A coefficient field, recorded only through its characteristic."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    def __str__(self) -> str:
        return "C" if self.characteristic == 0 else f"F{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> FieldLabel:
        s = text.strip()
        if s in ("C", "Q", "char0"):
            return cls(0)
        if s.startswith("Fp:"):
            return cls(int(s[3:]))
        if s.startswith("F") and s[1:].isdigit():
            return cls(int(s[1:]))
        raise ValueError(f"unknown field {text!r}")


COMPLEX = FieldLabel(0)
F2 = FieldLabel(2)


class BundleClass(enum.Enum):
    TRIVIAL = "triv"
    MERIDIAN = "mu"


class Shape(enum.Enum):
    V = "V"
    W = "W"
    UNKNOWN = "?"


@dataclass(frozen=True)
class FieldInvariants:
    nu: int
    r: int
    shape: Shape = Shape.UNKNOWN
    field: FieldLabel = COMPLEX

    def __post_init__(self):
        # only an unknown shape is silently resolved; a W with odd nu stays so lint can see it
        if self.nu % 2 and self.shape is Shape.UNKNOWN:
            object.__setattr__(self, "shape", Shape.V)

    @property
    def nu_plus(self) -> int:
        return self.nu + (self.shape is Shape.W)

    @property
    def nu_minus(self) -> int:
        return self.nu - (self.shape is Shape.W)

    @property
    def h(self) -> int:
        return (self.r - abs(self.nu)) // 2

    def violations(self) -> list[tuple[str, str]]:
        """(rule, message) pairs for every broken structural constraint."""
        out = []
        if self.r < abs(self.nu):
            out.append(("r >= |nu|", f"r={self.r} < |nu|={abs(self.nu)}"))
        if (self.r - abs(self.nu)) % 2:
            out.append(("parity", f"r - |nu| = {self.r - abs(self.nu)} is odd"))
        if self.shape is Shape.W and self.nu % 2:
            out.append(("W needs even nu", f"shape W with odd nu={self.nu}"))
        return out


@dataclass(frozen=True)
class DimResult:
    value: int
    exceptional: bool = False


def dim_sharp(inv: FieldInvariants, slope: Slope, bundle: BundleClass = BundleClass.TRIVIAL) -> DimResult:
    """Dimension of the framed instanton homology of the surgery at `slope`."""
    if inv.violations():
        raise InvalidInvariantsError(f"{inv} violates {inv.violations()[0][0]}")
    if slope.is_infinite:
        return DimResult(1)
    p, q = slope.num, slope.den
    if q == 1 and p == inv.nu and p % 2 == 0:
        if inv.shape is Shape.UNKNOWN:
            raise ShapeRequiredError(f"shape required at exceptional slope {p}")
        small = (inv.shape is Shape.V) == (bundle is BundleClass.TRIVIAL)
        return DimResult(inv.r if small else inv.r + 2, exceptional=True)
    return DimResult(q * inv.r + abs(p - q * inv.nu))


def dim_sequence(inv: FieldInvariants, n_lo: int, n_hi: int,
                 bundle: BundleClass = BundleClass.TRIVIAL) -> list[int]:
    return [dim_sharp(inv, make_slope(n, 1), bundle).value for n in range(n_lo, n_hi + 1)]


def mirror(inv: FieldInvariants) -> FieldInvariants:
    return FieldInvariants(-inv.nu, inv.r, inv.shape, inv.field)


def _thresholds(seq: dict[int, int]) -> tuple[int, int]:
    lo, hi = min(seq), max(seq)
    nu_plus = hi
    while nu_plus > lo and seq[nu_plus] == seq[nu_plus - 1] + 1:
        nu_plus -= 1
    nu_minus = lo
    while nu_minus < hi and seq[nu_minus] == seq[nu_minus + 1] + 1:
        nu_minus += 1
    # both runs must be certified by two steps and must not reach the far edge
    if hi - nu_plus < 2 or nu_plus == lo or nu_minus - lo < 2 or nu_minus == hi:
        raise InsufficientRangeError(f"insufficient range [{lo}, {hi}] to certify thresholds")
    return nu_plus, nu_minus


def infer_invariants(seq_trivial: dict[int, int], seq_meridian: dict[int, int],
                     field: FieldLabel = COMPLEX) -> FieldInvariants:
    """Recover (nu, r, shape) from integer-surgery dimensions for both bundle classes."""
    if set(seq_trivial) != set(seq_meridian):
        raise ValueError("both sequences must share one domain")
    lo, hi = min(seq_trivial), max(seq_trivial)
    if set(seq_trivial) != set(range(lo, hi + 1)):
        raise ValueError("domain must be a contiguous range of integers")
    for n in range(lo, hi):
        if abs(seq_trivial[n + 1] - seq_trivial[n]) != 1:
            raise NotRealizableError(f"adjacent dimensions differ by 1: fails at {n}, {n + 1}")
    nu_plus, nu_minus = _thresholds(seq_trivial)
    gap = nu_plus - nu_minus
    if gap < 0 or gap % 2:
        raise NotRealizableError(f"nu_plus - nu_minus = {gap} must be even and non-negative")
    if gap > 2:
        raise NotRealizableError(f"nu_plus - nu_minus = {gap} exceeds 2 (generalized W pattern)")
    nu = (nu_plus + nu_minus) // 2
    if gap == 2:
        if nu % 2:
            raise NotRealizableError("a gap of 2 needs odd thresholds")
        shape = Shape.W
        r = seq_meridian[nu]
    else:
        shape = Shape.V
        r = seq_trivial[nu]
    inv = FieldInvariants(nu, r, shape, field)
    for rule, msg in inv.violations():
        raise NotRealizableError(f"{rule}: {msg}")
    for bundle, seq in ((BundleClass.TRIVIAL, seq_trivial), (BundleClass.MERIDIAN, seq_meridian)):
        expected = dim_sequence(inv, lo, hi, bundle)
        for n, e in zip(range(lo, hi + 1), expected):
            if seq[n] != e:
                raise NotRealizableError(
                    f"{bundle.value} dimension at {n} is {seq[n]}, "
                    f"but ({nu}, {r}, {shape.value}) forces {e}")
    return inv


@dataclass(frozen=True)
class LSpaceInfo:
    exists: bool
    threshold: int | None
    exceptional_excluded: bool | None


def lspace_slopes(inv: FieldInvariants) -> LSpaceInfo:
    """Positive slopes with dim = |p| exist iff r = nu; then every p/q >= nu qualifies.

    The integer slope nu is excluded when the shape is W (trivial bundle gives r + 2);
    for an unknown shape at even nu the answer is None.
    """
    if inv.r != inv.nu:
        return LSpaceInfo(False, None, None)
    if inv.nu % 2:
        excluded: bool | None = False
    elif inv.shape is Shape.UNKNOWN:
        excluded = None
    else:
        excluded = inv.shape is Shape.W
    return LSpaceInfo(True, inv.nu, excluded)
