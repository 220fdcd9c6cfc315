"""
Integer Laurent polynomials in q.

Provides:
- LaurentPoly: exact arithmetic, trimmed normal form, exact division
- q_integer / q_factorial: [m]_{q^d} and [m]_{q^d}!
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass


@dataclass(frozen=True)
class LaurentPoly:
    """sum_k c_k q^k stored as sorted (exponent, coefficient) pairs without zeros."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[int, int] = {}
        for exp, coeff in self.terms:
            merged[int(exp)] = merged.get(int(exp), 0) + int(coeff)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        )

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(coefficients.items()))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(((0, c),))

    @classmethod
    def q(cls, k: int = 1) -> LaurentPoly:
        """The monomial q^k."""
        return cls(((k, 1),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def low(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def high(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _lift(other: Coefficient) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Coefficient) -> LaurentPoly:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.terms + rhs.terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Coefficient) -> LaurentPoly:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Coefficient) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Coefficient) -> LaurentPoly:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        product: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in rhs.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("Only monomials with unit coefficient have inverses")
            e, c = self.terms[0]
            return LaurentPoly(((-e * -k, c ** -k),))
        result = LaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == LaurentPoly.constant(other).terms
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def exact_div(self, divisor: Coefficient) -> LaurentPoly:
        """Quotient with zero remainder over the integers; ValueError otherwise."""
        d = self._lift(divisor)
        if d is NotImplemented or d.is_zero:
            raise ZeroDivisionError("Division by the zero Laurent polynomial")
        if self.is_zero:
            return LaurentPoly()
        # Shift both to polynomials with nonzero constant term; q is a unit.
        num = [0] * (self.high - self.low + 1)
        for e, c in self.terms:
            num[e - self.low] = c
        den = [0] * (d.high - d.low + 1)
        for e, c in d.terms:
            den[e - d.low] = c
        if len(den) > len(num):
            raise ValueError(f"{self} is not divisible by {d}")
        quotient = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for k in range(len(quotient) - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % lead:
                raise ValueError(f"{self} is not divisible by {d}")
            factor = c // lead
            quotient[k] = factor
            for j, dc in enumerate(den):
                num[k + j] -= factor * dc
        if any(num):
            raise ValueError(f"{self} is not divisible by {d}")
        shift = self.low - d.low
        return LaurentPoly(tuple((k + shift, c) for k, c in enumerate(quotient)))

    def substitute_one(self) -> int:
        """Value at q = 1."""
        return sum(c for _, c in self.terms)

    def to_json_value(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                coeff = "-" if c < 0 else ""
            else:
                coeff = str(c)
            parts.append(f"{coeff}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

Coefficient = int | LaurentPoly


def q_integer(m: int, d: int = 1) -> LaurentPoly:
    """[m]_{q^d} = (q^{dm} - q^{-dm}) / (q^d - q^{-d})."""
    if m < 0:
        return -q_integer(-m, d)
    return LaurentPoly(tuple((d * (m - 1 - 2 * k), 1) for k in range(m)))


def q_factorial(m: int, d: int = 1) -> LaurentPoly:
    if m < 0:
        raise ValueError(f"q-factorial of a negative number {m}")
    result = LaurentPoly.constant(1)
    for k in range(1, m + 1):
        result = result * q_integer(k, d)
    return result
