"""Polynomials with exact rational coefficients.

Coefficient generation for the uniform Bessel expansions (and the gamma
correction polynomials) is done once, exactly, so that downstream accuracy
checks are never polluted by coefficient rounding.  Arithmetic is plain
Fraction arithmetic; evaluation accepts any numeric type through Horner.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

__all__ = ["RationalPoly"]


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c or [Fraction(0)]


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial sum(coeffs[i] * x**i) with Fraction coefficients."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in _trim(self.coeffs))
        )

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls((Fraction(0),))

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((Fraction(1),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else 0

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPoly(
            tuple(
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            )
        )

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RationalPoly(tuple(out))

    def scale(self, c) -> "RationalPoly":
        c = Fraction(c)
        return RationalPoly(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "RationalPoly":
        """Multiply by x**k."""
        return RationalPoly((Fraction(0),) * k + self.coeffs)

    def deriv(self) -> "RationalPoly":
        if len(self.coeffs) == 1:
            return RationalPoly.zero()
        return RationalPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def integrate(self) -> "RationalPoly":
        """Antiderivative vanishing at 0."""
        return RationalPoly(
            (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs))
        )

    def __call__(self, x):
        zero = x * 0  # zero of the argument's type, so Horner stays in-type
        acc = zero
        for c in reversed(self.coeffs):
            acc = acc * x + (zero + c.numerator) / c.denominator
        return acc

    def common_denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs))

    def text(self, var: str = "t") -> str:
        """Render as '(a0+a1*var+...)/D' over the common denominator."""
        den = self.common_denominator()
        parts = []
        for i, c in enumerate(self.coeffs):
            n = c.numerator * (den // c.denominator)
            if n == 0:
                continue
            mag = abs(n)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = f"{mag}*{var}" if mag != 1 else var
            else:
                term = f"{mag}*{var}^{i}" if mag != 1 else f"{var}^{i}"
            sign = "-" if n < 0 else ("+" if parts else "")
            parts.append(sign + term)
        if not parts:
            return "0"
        body = "".join(parts)
        if den == 1:
            return body
        if len(parts) == 1 and not body.startswith("-"):
            return f"{body}/{den}"
        return f"({body})/{den}"
