"""Expansion of Y in modified Bessel functions, valid for all z.

With nu = n + 1/2 and polynomial argument zeta = 1/(nu z):

    Y(n, mu; zeta) ~ front * ( K_nu(nu z) sum_k C_k/nu^k
                             + K'_nu(nu z) sum_k D_k/nu^k ),

where front = (2 nu z)^mu n!/Gamma(n+mu+1) e^(nu z) sqrt(2 nu z / pi).
Unlike the sector expansions this form survives the turning points z = ±i.

The coefficients come from an integration-by-parts scheme on the Laplace
integral: starting from f_0(s) = s^mu, each round splits off the linear
interpolant through the two saddle values,

    f_k(s) = A_k + B_k s + phi'(s) g_k(s),

divides out phi' using its exact factorization
phi'(s) = 2z (s - s_+)(s - s_-) / (s (1+s)), and sets
f_{k+1} = g_k' - (2s+1)/(2s(1+s)) g_k.  Functions are carried as PAIRS of
truncated series at the two saddles, each centre cancelling its own zero
of the numerator analytically.  When the saddles nearly coincide a single
series at the midpoint is used, with value-and-derivative (confluent)
interpolation.  Finally C_k = A_k + (1-z)/(2z) B_k and D_k = -B_k/2.

Branch policy for s^mu: principal log at each centre, except that a centre
on the negative real axis (real z > 0 puts s_- there) takes the two-sided
average cos(pi mu) |s|^mu, which agrees with integer powers exactly and
keeps all coefficients real for real inputs.  Any bounded choice of the
s_- data preserves the asymptotic orders at fixed z; this one also keeps
the printed turning-point values (reached with principal branches, where
the merged saddle is off the cut) and real output on the real axis.

Coefficient arithmetic runs at elevated precision: near the confluent
switch the two-point divided differences lose ~|log10 separation| digits
per round, which doubles would not survive.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .besseluniform import (
    BesselKind,
    bessel_uniform_mp,
    half_integer_K_mp,
    half_integer_K_prime_mp,
)
from .errors import DomainError
from .precision import Precision, default_precision
from .reports import EvalReport, Method, PolyParams
from .scaled import ScaledComplex
from .series import TruncatedSeries, pow_unit

__all__ = [
    "BesselTypeCoeffs",
    "IbpState",
    "ibp_coeffs",
    "confluent_interp",
    "BesselSource",
    "eval_bessel_type",
    "eval_bessel_type_mu_neg1_closed",
]

CONFLUENT_TOL = 1e-6
MIN_DEGREE = 5
_WORK_DPS = 40


@dataclass(frozen=True)
class BesselTypeCoeffs:
    """C_0..C_K and D_0..D_K at a given z and mu."""

    z: complex
    mu: float
    C: tuple
    D: tuple
    confluent: bool


@dataclass
class IbpState:
    """Snapshot of one integration-by-parts round (for verification)."""

    z: complex
    mu: float
    k: int
    A: complex
    B: complex
    confluent: bool
    interp_residual: float


def _saddles(ctx, z):
    r = ctx.sqrt(1 + z * z)
    sp = (1 - z + r) / (2 * z)
    sm = (1 - z - r) / (2 * z)
    return sp, sm


def _power_series_at(ctx, center, mu, L, real_axis_branch: bool):
    """Series of s^mu around the given centre.

    real_axis_branch selects the two-sided average on the negative real
    axis; integer mu always uses the exact real power there.
    """
    rel = TruncatedSeries(center, [ctx.mpc(0), 1 / ctx.mpc(center)] + [ctx.mpc(0)] * (L - 1))
    ser = pow_unit(rel, ctx.mpf(mu))
    if real_axis_branch and ctx.im(center) == 0 and ctx.re(center) < 0:
        mag = abs(center)
        if float(mu) == int(mu):
            pref = ctx.mpf(mag) ** int(mu) * (-1) ** (int(mu) % 2)
        else:
            pref = ctx.cospi(ctx.mpf(mu)) * mag ** ctx.mpf(mu)
        pref = ctx.mpc(pref)
    else:
        pref = ctx.mpc(center) ** ctx.mpf(mu)
    return ser.scale(pref)


def _poly_at(ctx, center, coeffs, L):
    """Global polynomial re-expanded at the centre, padded to order L."""
    out = [ctx.mpc(0)] * (L + 1)
    for p, cf in enumerate(coeffs):
        for j in range(min(p, L) + 1):
            out[j] += cf * ctx.binomial(p, j) * ctx.mpc(center) ** (p - j)
    return TruncatedSeries(center, out)


def confluent_interp(series: TruncatedSeries, s0) -> tuple:
    """Degenerate two-point interpolation: A = f(s0) - s0 f'(s0), B = f'(s0)."""
    f0 = series.c[0]
    f1 = series.c[1] if series.order >= 1 else 0 * series.c[0]
    return f0 - s0 * f1, f1


def _next_f(ctx, z, g: TruncatedSeries) -> TruncatedSeries:
    """f_{k+1} = g' - (2s+1)/(2 s (1+s)) g at g's centre."""
    c = g.center
    L = g.order
    s_poly = _poly_at(ctx, c, [ctx.mpc(0), ctx.mpc(1)], L)
    s1_poly = _poly_at(ctx, c, [ctx.mpc(1), ctx.mpc(1)], L)
    num = _poly_at(ctx, c, [ctx.mpc(1), ctx.mpc(2)], L)
    rat = num.divide((s_poly * s1_poly).scale(2))
    gp = g.deriv()
    return gp - (rat * g).truncate(gp.order)


def _g_from_f(ctx, z, f: TruncatedSeries, A, B, other):
    """g = (f - A - B s) s (1+s) / (2z phi'-factorization) at f's own centre."""
    c = f.center
    L = f.order
    coeffs = list(f.c)
    coeffs[0] = coeffs[0] - (A + B * c)
    coeffs[1] = coeffs[1] - B
    residual = abs(coeffs[0])
    coeffs[0] = ctx.mpc(0)  # cancels by construction of A, B
    num = TruncatedSeries(c, coeffs).shift_down(1)
    den = TruncatedSeries(c, [ctx.mpc(c) - ctx.mpc(other), ctx.mpc(1)] + [ctx.mpc(0)] * (L - 2))
    g = num.divide(den)
    s_poly = _poly_at(ctx, c, [ctx.mpc(0), ctx.mpc(1)], g.order)
    s1_poly = _poly_at(ctx, c, [ctx.mpc(1), ctx.mpc(1)], g.order)
    return (g * s_poly * s1_poly).scale(1 / (2 * ctx.mpc(z))), residual


def ibp_coeffs(
    z,
    mu: float,
    K: int,
    L: int | None = None,
    precision: Precision | None = None,
    collect_states: bool = False,
):
    """Coefficients C_0..C_K, D_0..D_K of the Bessel-type expansion.

    Returns a BesselTypeCoeffs (complex double entries); with
    collect_states=True returns (coeffs, [IbpState]) for invariant checks.
    """
    if z == 0:
        raise DomainError("the expansion variable must satisfy z != 0")
    if L is None:
        L = 3 * K + 8
    if L < 2 * K + 6:
        raise DomainError(f"series length {L} too small; need >= {2 * K + 6}")
    zc = complex(z)

    # working precision: base plus guard digits against divided-difference
    # cancellation when the saddles are close
    sep0 = abs(cmath.sqrt(1 + zc * zc) / zc) if zc != 0 else 0.0
    boost = 0
    if 0 < sep0 < 1:
        boost = int((K + 1) * 2 * -math.log10(sep0)) + 10
    work = (precision or Precision(_WORK_DPS)).spawn(boost)
    ctx = work.ctx

    zz = work.mpc(zc)
    sp, sm = _saddles(ctx, zz)
    sep = abs(sp - sm)
    confluent = sep < CONFLUENT_TOL * (1 + abs(sp))
    real_axis = zc.imag == 0 and zc.real > 0
    if real_axis:
        # recompute saddles in real arithmetic so branch tests are exact
        r = ctx.sqrt(1 + ctx.mpf(zc.real) ** 2)
        sp = ctx.mpc((1 - zc.real + r) / (2 * zc.real))
        sm = ctx.mpc((1 - zc.real - r) / (2 * zc.real))

    A: list = []
    B: list = []
    states: list[IbpState] = []

    if not confluent:
        f_pair = (
            _power_series_at(ctx, sp, mu, L, False),
            _power_series_at(ctx, sm, mu, L, real_axis),
        )
        for k in range(K + 1):
            ap, am = f_pair[0].c[0], f_pair[1].c[0]
            Ak = (sp * am - sm * ap) / (sp - sm)
            Bk = (ap - am) / (sp - sm)
            A.append(Ak)
            B.append(Bk)
            if collect_states:
                res = max(
                    float(abs(ap - (Ak + Bk * sp)) / (1 + abs(ap))),
                    float(abs(am - (Ak + Bk * sm)) / (1 + abs(am))),
                )
                states.append(IbpState(zc, mu, k, complex(Ak), complex(Bk), False, res))
            if k == K:
                break
            new_pair = []
            for other, f in ((sm, f_pair[0]), (sp, f_pair[1])):
                g, _ = _g_from_f(ctx, zz, f, Ak, Bk, other)
                new_pair.append(_next_f(ctx, zz, g))
            f_pair = tuple(new_pair)
    else:
        s0 = (sp + sm) / 2
        f = _power_series_at(ctx, s0, mu, L, False)
        for k in range(K + 1):
            Ak, Bk = confluent_interp(f, s0)
            A.append(Ak)
            B.append(Bk)
            if collect_states:
                res = float(abs(f.c[0] - (Ak + Bk * s0)) / (1 + abs(f.c[0])))
                states.append(IbpState(zc, mu, k, complex(Ak), complex(Bk), True, res))
            if k == K:
                break
            coeffs = list(f.c)
            coeffs[0] = ctx.mpc(0)
            coeffs[1] = ctx.mpc(0)  # both cancel by the confluent interpolation
            num = TruncatedSeries(s0, coeffs).shift_down(2)
            s_poly = _poly_at(ctx, s0, [ctx.mpc(0), ctx.mpc(1)], num.order)
            s1_poly = _poly_at(ctx, s0, [ctx.mpc(1), ctx.mpc(1)], num.order)
            g = (num * s_poly * s1_poly).scale(1 / (2 * zz))
            f = _next_f(ctx, zz, g)

    C = tuple(complex(A[k] + (1 - zz) / (2 * zz) * B[k]) for k in range(K + 1))
    D = tuple(complex(-B[k] / 2) for k in range(K + 1))
    if real_axis:
        # branch policy makes these exactly real; drop rounding dust
        C = tuple(c.real + 0j if abs(c.imag) <= 1e-25 * (1 + abs(c.real)) else c for c in C)
        D = tuple(d.real + 0j if abs(d.imag) <= 1e-25 * (1 + abs(d.real)) else d for d in D)
    out = BesselTypeCoeffs(z=zc, mu=float(mu), C=C, D=D, confluent=confluent)
    return (out, states) if collect_states else out


class BesselSource(str, Enum):
    EXACT_HALF_INTEGER = "exact_half_integer"
    UNIFORM_EXPANSION = "uniform_expansion"


def eval_bessel_type(
    params: PolyParams,
    K: int = 4,
    bessel_source: BesselSource = BesselSource.EXACT_HALF_INTEGER,
    precision: Precision | None = None,
) -> EvalReport:
    """Bessel-type expansion of Y(n, mu; zeta), zeta = 1/(nu z).

    params.z is the scaled variable.  The K and K' values come either from
    the exact half-integer closed forms (default) or from the uniform
    expansions of the appendix coefficients.
    """
    n, mu, z = params.n, params.mu, params.z
    if z == 0:
        raise DomainError("needs z != 0")
    if n < MIN_DEGREE:
        raise DomainError(f"asymptotic evaluation needs n >= {MIN_DEGREE}")
    if n + mu + 1 <= 0:
        raise DomainError("need n + mu + 1 > 0")
    prec = precision or default_precision()
    ctx = prec.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    zz = prec.mpc(z)
    x = nu * zz
    coeffs = ibp_coeffs(z, mu, K)
    source = BesselSource(bessel_source)
    if source is BesselSource.EXACT_HALF_INTEGER:
        k_val = half_integer_K_mp(prec, n, x)
        k_prime = half_integer_K_prime_mp(prec, n, x)
    else:
        k_val = bessel_uniform_mp(prec, BesselKind.K, nu, complex(z), K_order=4)
        k_prime = bessel_uniform_mp(prec, BesselKind.KPRIME, nu, complex(z), K_order=4)
    c_sum = sum(prec.mpc(coeffs.C[k]) / nu**k for k in range(K + 1))
    d_sum = sum(prec.mpc(coeffs.D[k]) / nu**k for k in range(K + 1))
    front = (
        (2 * x) ** ctx.mpf(mu)
        * _factorial_gamma_ratio(ctx, n, mu)
        * ctx.exp(x)
        * ctx.sqrt(2 * x / ctx.pi)
    )
    value = front * (k_val * c_sum + k_prime * d_sum)
    # first-omitted-term estimate on the dominant (C) series
    err = abs(coeffs.C[-1]) / float(nu) ** (K + 1) / max(abs(complex(c_sum)), 1e-300)
    notes = f"zeta = 1/(nu*z); bessel source = {source.value}"
    if coeffs.confluent:
        notes += "; confluent (merged-saddle) coefficients"
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.BESSEL_TYPE,
        terms_used=K + 1,
        err_estimate=err,
        notes=notes,
    )


def _factorial_gamma_ratio(ctx, n: int, mu):
    """n! / Gamma(n + mu + 1) as prod_k k/(mu+k) / Gamma(mu+1).

    At nonpositive integer mu the product form hits a pole of Gamma(mu+1)
    against a zero factor; the finite ratio is taken directly instead.
    """
    mu = ctx.mpf(mu)
    if mu <= 0 and mu == ctx.floor(mu):
        m = int(mu)
        out = ctx.mpf(1)
        for i in range(n + m + 1, n + 1):  # n!/(n+m)! for m < 0
            out = out * i
        return out
    ratio = ctx.mpf(1)
    for k in range(1, n + 1):
        ratio = ratio * k / (mu + k)
    return ratio / ctx.gamma(mu + 1)


def eval_bessel_type_mu_neg1_closed(
    n: int, z, precision: Precision | None = None
) -> ScaledComplex:
    """mu = -1 special case with the geometric coefficient sums in closed form.

    C_k = (z-1)/2^k and D_k = -z/2^k sum to (z-1) and -z times
    2 nu/(2 nu - 1); the result is exact up to rounding for 2 nu > 1.
    """
    prec = precision or default_precision()
    ctx = prec.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    zz = prec.mpc(z)
    x = nu * zz
    geo = (2 * nu) / (2 * nu - 1)
    k_val = half_integer_K_mp(prec, n, x)
    k_prime = half_integer_K_prime_mp(prec, n, x)
    front = (
        (2 * x) ** ctx.mpf(-1)
        * _factorial_gamma_ratio(ctx, n, -1.0)
        * ctx.exp(x)
        * ctx.sqrt(2 * x / ctx.pi)
    )
    value = front * (k_val * (zz - 1) * geo + k_prime * (-zz) * geo)
    return ScaledComplex.from_mpmath(value, prec.ctx)
