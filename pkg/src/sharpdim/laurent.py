"""Integer Laurent polynomials and cyclotomic polynomials by exact division."""
from __future__ import annotations

import functools
from dataclasses import dataclass


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse map exponent -> nonzero integer coefficient."""

    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in d.items() if c)))

    @classmethod
    def from_list(cls, coeffs: list[int], low: int = 0) -> LaurentPoly:
        return cls.from_dict({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def symmetric(cls, coeffs: list[int]) -> LaurentPoly:
        """Coefficients c_-g .. c_g listed lowest exponent first."""
        if len(coeffs) % 2 == 0:
            raise ValueError("a symmetric coefficient list has odd length")
        return cls.from_list(coeffs, low=-(len(coeffs) // 2))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return self.coeffs[0][0]

    @property
    def high(self) -> int:
        return self.coeffs[-1][0]

    def dense(self) -> list[int]:
        """Coefficients from the lowest to the highest exponent."""
        if self.is_zero:
            return [0]
        d = self.as_dict()
        return [d.get(e, 0) for e in range(self.low, self.high + 1)]

    def numerator(self) -> list[int]:
        """Dense coefficients (constant term first) of the polynomial t^-low * self."""
        return self.dense()

    def __call__(self, t):
        return sum(c * t**e for e, c in self.coeffs)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(d)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-e, 0) == c for e, c in d.items())

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e, c in reversed(self.coeffs):
            mono = "" if e == 0 else "t" if e == 1 else f"t^{e}"
            coef = str(c) if (abs(c) != 1 or not mono) else ("-" if c < 0 else "")
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide dense integer polynomials (constant first) by a monic divisor."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dn = len(den) - 1
    quot = [0] * max(len(num) - dn, 1)
    for i in range(len(num) - 1 - dn, -1, -1):
        c = rem[i + dn]
        quot[i] = c
        if c:
            for j, dc in enumerate(den):
                rem[i + j] -= c * dc
    rem = rem[:dn] or [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Dense coefficients of the d-th cyclotomic polynomial, constant term first."""
    if d < 1:
        raise ValueError("d must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly, rem = poly_divmod(poly, list(cyclotomic(e)))
            assert rem == [0]
    return tuple(poly)


def divides(divisor: list[int] | tuple[int, ...], poly: list[int]) -> bool:
    return poly_divmod(list(poly), list(divisor))[1] == [0]
