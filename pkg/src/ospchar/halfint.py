"""Exact half-integers, stored as doubled integers.

Weights of osp(3|2m) and their rho-shifts live in (1/2)Z^(m+1); every
computation in this package is exact, so the scalar type stores 2v as an
arbitrary-precision int and never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, represented by its double."""

    twice: int

    @staticmethod
    def of(value: "HalfInt | int | Fraction") -> "HalfInt":
        """Coerce an int, a Fraction with denominator 1 or 2, or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            return HalfInt(doubled.numerator)
        raise TypeError(f"cannot build HalfInt from {value!r}")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __mul__(self, other: "HalfInt | int") -> "HalfInt | Fraction":
        # HalfInt * int stays a half-integer; HalfInt * HalfInt may be a
        # quarter-integer, so it is returned as an exact Fraction.
        if isinstance(other, int):
            return HalfInt(self.twice * other)
        return Fraction(self.twice * HalfInt.of(other).twice, 4)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def half(numerator: int) -> HalfInt:
    """numerator/2 as a HalfInt."""
    return HalfInt(numerator)
