"""Overflow-proof complex values as (mantissa, power-of-two exponent).

Polynomial values in this package reach magnitudes like 1e489, far beyond
double range.  A ScaledComplex keeps a double-precision complex mantissa in
a normalized band and an integer base-2 exponent, so magnitude information
is exact while arithmetic stays cheap.  Rendering to decimal-mantissa
strings ("0.5131e130") goes through the decimal module so the printed
digits are correctly rounded (half-even).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext

__all__ = ["ScaledComplex", "normalize", "to_decimal_string"]

# Exponent gap beyond which the smaller addend cannot affect a double mantissa.
_ALIGN_LIMIT = 60


def _normalized(mantissa: complex, exp2: int) -> tuple[complex, int]:
    m = complex(mantissa)
    a = max(abs(m.real), abs(m.imag))
    if a == 0.0:
        return 0j, 0
    # a = f * 2**e with f in [0.5, 1); shift so the max component is in [1, 2)
    k = math.frexp(a)[1] - 1
    if k:
        m = complex(math.ldexp(m.real, -k), math.ldexp(m.imag, -k))
    return m, int(exp2) + k


@dataclass(frozen=True)
class ScaledComplex:
    """Complex value mantissa * 2**exp2 with 1 <= max(|Re|,|Im|) < 2 (or zero)."""

    mantissa: complex
    exp2: int = 0

    def __post_init__(self):
        m, e = _normalized(self.mantissa, self.exp2)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exp2", e)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_number(cls, x) -> "ScaledComplex":
        return cls(complex(x), 0)

    @classmethod
    def from_mpmath(cls, value, ctx) -> "ScaledComplex":
        """Build from an mpf/mpc of the given mpmath context."""
        re, im = ctx.re(value), ctx.im(value)
        if re == 0 and im == 0:
            return cls(0j, 0)
        # scale on the larger component so both stay inside double range
        big = re if abs(re) >= abs(im) else im
        _, e = ctx.frexp(big)
        return cls(complex(float(ctx.ldexp(re, -e)), float(ctx.ldexp(im, -e))), e)

    def to_mpmath(self, ctx):
        scale = ctx.ldexp(ctx.mpf(1), self.exp2)  # exact power of two
        return ctx.mpc(self.mantissa.real, self.mantissa.imag) * scale

    def to_complex(self) -> complex:
        """Plain complex; raises OverflowError when exp2 exceeds double range."""
        return complex(
            math.ldexp(self.mantissa.real, self.exp2),
            math.ldexp(self.mantissa.imag, self.exp2),
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.mantissa == 0:
            return other
        if other.mantissa == 0:
            return self
        hi, lo = (self, other) if self.exp2 >= other.exp2 else (other, self)
        d = hi.exp2 - lo.exp2
        if d > _ALIGN_LIMIT:
            return hi
        m = hi.mantissa + complex(
            math.ldexp(lo.mantissa.real, -d), math.ldexp(lo.mantissa.imag, -d)
        )
        return ScaledComplex(m, hi.exp2)

    def __sub__(self, other: "ScaledComplex") -> "ScaledComplex":
        return self + (-other)

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.mantissa, self.exp2)

    def __mul__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            return ScaledComplex(self.mantissa * other.mantissa, self.exp2 + other.exp2)
        return ScaledComplex(self.mantissa * complex(other), self.exp2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            if other.mantissa == 0:
                raise ZeroDivisionError("ScaledComplex division by zero")
            return ScaledComplex(self.mantissa / other.mantissa, self.exp2 - other.exp2)
        return ScaledComplex(self.mantissa / complex(other), self.exp2)

    def __pow__(self, n: int) -> "ScaledComplex":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return ScaledComplex(1 + 0j) / (self ** (-n))
        out = ScaledComplex(1 + 0j)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> "ScaledComplex":
        return ScaledComplex(abs(self.mantissa), self.exp2)

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    def log10_abs(self) -> float:
        """log10 of the magnitude, as a plain float."""
        if self.mantissa == 0:
            raise ValueError("log of zero")
        return math.log10(abs(self.mantissa)) + self.exp2 * math.log10(2.0)

    # -- rendering ---------------------------------------------------------

    def decimal(self, digits: int = 4) -> str:
        return to_decimal_string(self, digits)

    def __str__(self):
        return self.decimal(6)


def normalize(mantissa: complex, exp2: int = 0) -> ScaledComplex:
    """Canonical ScaledComplex for a raw (complex, exponent) pair."""
    return ScaledComplex(complex(mantissa), exp2)


def _decimal_real(man, exp2: int, digits: int) -> str:
    """Render man * 2**exp2 (man float or int) as '0.dddd e N', half-even."""
    if man == 0:
        return "0." + "0" * digits + "e0"
    sign = "-" if man < 0 else ""
    with localcontext() as lc:
        lc.prec = digits + 30
        lc.rounding = ROUND_HALF_EVEN
        d = Decimal(-man if man < 0 else man)
        if exp2 >= 0:
            d = d * (Decimal(2) ** exp2)
        else:
            d = d / (Decimal(2) ** (-exp2))
        e10 = d.adjusted() + 1
        mant = d.scaleb(-e10)  # in [0.1, 1)
        q = mant.quantize(Decimal(1).scaleb(-digits))
        if q >= 1:  # rounding pushed 0.9999... over the top
            e10 += 1
            q = q.scaleb(-1).quantize(Decimal(1).scaleb(-digits))
    body = str(int(q.scaleb(digits))).rjust(digits, "0")
    return f"{sign}0.{body}e{e10}"


def to_decimal_string(x: ScaledComplex, digits: int = 4) -> str:
    """Decimal-mantissa form ("0.5131e130"); complex renders both parts."""
    m = x.mantissa
    re_part = _decimal_real(m.real, x.exp2, digits)
    if m.imag == 0.0 or abs(m.imag) <= 1e-13 * abs(m.real):
        return re_part
    im_part = _decimal_real(abs(m.imag), x.exp2, digits)
    sign = "+" if m.imag > 0 else "-"
    return f"{re_part}{sign}{im_part}i"


def _mpf_decimal(v, ctx, digits: int) -> str:
    """Render an mpf without the double-mantissa detour (full precision)."""
    if v == 0:
        return _decimal_real(0, 0, digits)
    m, e = ctx.frexp(v)
    man = int(ctx.ldexp(m, ctx.prec))  # exact integer mantissa
    return _decimal_real(man, e - ctx.prec, digits)


def mp_to_decimal_string(value, ctx, digits: int = 4) -> str:
    """Decimal-mantissa form straight from a context number."""
    re, im = ctx.re(value), ctx.im(value)
    re_part = _mpf_decimal(re, ctx, digits)
    if im == 0 or abs(im) <= abs(re) * ctx.mpf("1e-13"):
        return re_part
    im_part = _mpf_decimal(abs(im), ctx, digits)
    sign = "+" if im > 0 else "-"
    return f"{re_part}{sign}{im_part}i"


def parse_decimal(text: str) -> complex:
    """Inverse of to_decimal_string, up to the printed precision."""
    text = text.strip()
    if text.endswith("i"):
        body = text[:-1]
        # split at the sign that separates the two rendered components
        k = max(body.rfind("+", 1), body.rfind("-", 1))
        while k > 0 and body[k - 1] in "eE":
            k = max(body.rfind("+", 1, k), body.rfind("-", 1, k))
        re_s, im_s = body[:k], body[k:]
        return complex(float(re_s.replace("e", "E")), float(im_s.replace("e", "E")))
    return complex(float(text.replace("e", "E")), 0.0)
