"""Explicit working-precision arithmetic and gamma-function utilities.

Every high-precision computation in this package runs under a Precision
object that owns a private mpmath context, so concurrent evaluations at
different precisions cannot interfere through global state.  A Precision
with P significant decimal digits guarantees relative error <= 10**(2-P)
per elementary operation (mpmath rounds to nearest at that precision).

The gamma correction factor used by the asymptotic evaluators is the slowly
varying part gstar(v + a) = Gamma(v + a) / (sqrt(2 pi) v**(v+a-1/2) e**-v),
whose 1/v expansion coefficients for a = mu + 1/2 are exact polynomials in
mu, tabulated here through order four.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from mpmath.ctx_mp import MPContext

from .errors import DomainError
from .ratpoly import RationalPoly

__all__ = [
    "Precision",
    "GammaStarCoeffs",
    "gamma_star_series",
    "gamma_star_poly",
    "gamma_star_value",
    "gamma_real",
    "GAMMA_STAR_MAX_ORDER",
    "default_precision",
]

DEFAULT_DPS = 60
GAMMA_STAR_MAX_ORDER = 4


class Precision:
    """Count of significant decimal digits plus a private mpmath context."""

    __slots__ = ("dps", "ctx")

    def __init__(self, dps: int = DEFAULT_DPS):
        if dps < 5:
            raise ValueError("precision below 5 digits is not supported")
        self.dps = int(dps)
        ctx = MPContext()
        ctx.dps = self.dps
        self.ctx = ctx

    def spawn(self, extra_dps: int) -> "Precision":
        """A fresh context with extra guard digits."""
        return Precision(self.dps + max(0, int(extra_dps)))

    @property
    def eps(self) -> float:
        """Per-operation relative error bound 10**(2-P)."""
        return 10.0 ** (2 - self.dps)

    def mpf(self, x):
        return self.ctx.mpf(x)

    def mpc(self, re, im=0):
        if isinstance(re, complex):
            return self.ctx.mpc(re.real, re.imag)
        return self.ctx.mpc(re, im)

    def __repr__(self):
        return f"Precision(dps={self.dps})"


def default_precision() -> Precision:
    """Precision from the GBP_PRECISION environment variable, else P=60."""
    return Precision(int(os.environ.get("GBP_PRECISION", DEFAULT_DPS)))


def gamma_real(x, precision: Precision):
    """Gamma(x) for real x > 0 as an mpf of the given precision.

    Delegates to the context's gamma, which meets the 10**(4-P) relative
    error contract with a wide margin at any requested precision.
    """
    v = precision.mpf(x)
    if v <= 0:
        raise DomainError("gamma_real requires x > 0")
    return precision.ctx.gamma(v)


# 1/v coefficients of gstar(v + mu + 1/2) as exact polynomials in mu.
_GAMMA_STAR_POLYS = (
    RationalPoly((Fraction(1),)),
    RationalPoly((Fraction(-1, 24), Fraction(0), Fraction(12, 24))),
    RationalPoly(
        (
            Fraction(1, 1152),
            Fraction(48, 1152),
            Fraction(-24, 1152),
            Fraction(-192, 1152),
            Fraction(144, 1152),
        )
    ),
    RationalPoly(
        (
            Fraction(1003, 414720),
            Fraction(-720, 414720),
            Fraction(-17100, 414720),
            Fraction(11520, 414720),
            Fraction(32400, 414720),
            Fraction(-34560, 414720),
            Fraction(8640, 414720),
        )
    ),
    RationalPoly(
        (
            Fraction(-4027, 39813120),
            Fraction(-288864, 39813120),
            Fraction(151824, 39813120),
            Fraction(1618560, 39813120),
            Fraction(-1239840, 39813120),
            Fraction(-1645056, 39813120),
            Fraction(2177280, 39813120),
            Fraction(-829440, 39813120),
            Fraction(103680, 39813120),
        )
    ),
)


@dataclass(frozen=True)
class GammaStarCoeffs:
    """Coefficients gamma_0..gamma_K of the 1/v series of gstar(v + alpha)."""

    alpha: float
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("gamma_0 must be 1")


def gamma_star_poly(k: int) -> RationalPoly:
    """gamma_k as an exact polynomial in mu, where alpha = mu + 1/2."""
    if not 0 <= k <= GAMMA_STAR_MAX_ORDER:
        raise ValueError(f"gamma_k tabulated only for 0 <= k <= {GAMMA_STAR_MAX_ORDER}")
    return _GAMMA_STAR_POLYS[k]


def gamma_star_series(alpha, K: int) -> GammaStarCoeffs:
    """gamma_0..gamma_K evaluated at the given alpha (alpha = mu + 1/2)."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    if K > GAMMA_STAR_MAX_ORDER:
        raise ValueError(
            f"gamma_k known through k={GAMMA_STAR_MAX_ORDER}; "
            "higher orders would require extending the table"
        )
    mu = float(alpha) - 0.5
    return GammaStarCoeffs(
        alpha=float(alpha),
        coeffs=tuple(float(_GAMMA_STAR_POLYS[k](mu)) for k in range(K + 1)),
    )


def gamma_star_value(k: int, mu):
    """gamma_k(mu + 1/2) for a numeric mu of any supported type."""
    return gamma_star_poly(k)(mu)
