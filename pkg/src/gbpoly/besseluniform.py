"""Uniform large-order expansions of the modified Bessel functions.

The coefficient polynomials u_k(t), v_k(t) are generated exactly (rational
coefficients) from their recurrences

    u_{k+1} = (1/2) t^2 (1 - t^2) u_k' + (1/8) int_0^t (1 - 5 s^2) u_k ds,
    v_k     = u_k + t (t^2 - 1) ((1/2) u_{k-1} + t u_{k-1}'),

and the four expansions (K, I and their derivatives) are assembled with
t = 1/sqrt(1+z^2) and eta as in the saddle module.  Half-integer orders
admit exact closed forms through the degree-n polynomial at mu = 0; those
serve as oracles here and as the exact Bessel source of the Bessel-type
expansion of Y.

Note the derivative expansions both use v_k; feeding u_k into the I'
expansion fails the half-integer oracle at the first omitted order.
"""

from __future__ import annotations

import cmath
import math
import threading
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .exact import exact_sum_mp
from .precision import Precision, default_precision
from .ratpoly import RationalPoly
from .reports import EvalReport, Method
from .scaled import ScaledComplex

__all__ = [
    "gen_uk",
    "gen_vk",
    "BesselKind",
    "eval_bessel_uniform",
    "bessel_uniform_mp",
    "exact_half_integer_K",
    "half_integer_K_mp",
    "half_integer_I_mp",
    "half_integer_K_prime_mp",
    "half_integer_I_prime_mp",
]

_cache_lock = threading.Lock()
_uk_cache: list[RationalPoly] = [RationalPoly.one()]
_vk_cache: list[RationalPoly] = [RationalPoly.one()]


def gen_uk(K: int) -> list[RationalPoly]:
    """u_0..u_K, exact."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    with _cache_lock:
        while len(_uk_cache) <= K:
            u = _uk_cache[-1]
            du = u.deriv()
            term1 = (du.shift(2) - du.shift(4)).scale(Fraction(1, 2))
            integrand = u.scale(Fraction(1, 8)) - u.shift(2).scale(Fraction(5, 8))
            _uk_cache.append(term1 + integrand.integrate())
        return _uk_cache[: K + 1]


def gen_vk(K: int) -> list[RationalPoly]:
    """v_0..v_K, exact; consumes gen_uk."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    us = gen_uk(K)
    with _cache_lock:
        while len(_vk_cache) <= K:
            k = len(_vk_cache)
            u_prev = us[k - 1]
            du_prev = u_prev.deriv()
            inner = u_prev.scale(Fraction(1, 2)) + du_prev.shift(1)
            bracket = inner.shift(3) - inner.shift(1)  # t(t^2-1) * inner
            _vk_cache.append(us[k] + bracket)
        return _vk_cache[: K + 1]


class BesselKind(str, Enum):
    K = "K"
    I = "I"
    KPRIME = "Kprime"
    IPRIME = "Iprime"


def _t_eta(ctx, z):
    r = ctx.sqrt(1 + z * z)
    return 1 / r, r + ctx.log(z / (1 + r))


def bessel_uniform_mp(prec: Precision, kind: BesselKind, nu, z, K_order: int = 4):
    """Kernel: uniform expansion value as a context number."""
    ctx = prec.ctx
    nu = ctx.mpf(nu)
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    t, eta = _t_eta(ctx, zz)
    tc = complex(t)
    if kind in (BesselKind.K, BesselKind.I):
        polys = gen_uk(K_order)
    else:
        polys = gen_vk(K_order)
    nu_f = float(nu)
    total = 0j
    for k, p in enumerate(polys):
        c = p(tc)
        if kind in (BesselKind.K, BesselKind.KPRIME) and k % 2 == 1:
            c = -c
        total += c / nu_f**k
    quarter = (1 + zz * zz) ** ctx.mpf("0.25")
    if kind is BesselKind.K:
        front = ctx.sqrt(ctx.pi / (2 * nu)) * ctx.exp(-nu * eta) / quarter
    elif kind is BesselKind.I:
        front = ctx.exp(nu * eta) / (ctx.sqrt(2 * ctx.pi * nu) * quarter)
    elif kind is BesselKind.KPRIME:
        front = -ctx.sqrt(ctx.pi / (2 * nu)) * quarter / zz * ctx.exp(-nu * eta)
    else:
        front = quarter / zz * ctx.exp(nu * eta) / ctx.sqrt(2 * ctx.pi * nu)
    return front * prec.mpc(total)


def eval_bessel_uniform(
    kind: BesselKind,
    nu: float,
    z,
    K_order: int = 4,
    precision: Precision | None = None,
    delta: float = 0.05,
) -> EvalReport:
    z = complex(z)
    if z == 0 or abs(cmath.phase(z)) > cmath.pi / 2 - delta:
        raise DomainError(f"outside the sector |ph z| <= pi/2 - {delta}")
    if nu <= 0:
        raise DomainError("order nu must be positive")
    prec = precision or default_precision()
    value = bessel_uniform_mp(prec, BesselKind(kind), nu, z, K_order)
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.BESSEL_TYPE,
        terms_used=K_order + 1,
        err_estimate=None,
        notes=f"uniform modified-Bessel expansion, kind={BesselKind(kind).value}",
    )


# ---- exact half-integer oracles ----------------------------------------


def half_integer_K_mp(prec: Precision, n: int, x):
    """K_{n+1/2}(x) = sqrt(pi/(2x)) e^-x Y(n, 0; 1/x), exact."""
    ctx = prec.ctx
    xx = prec.mpc(x) if isinstance(x, complex) else ctx.mpc(x)
    if xx == 0:
        raise DomainError("half-integer K needs x != 0")
    y, _, _ = exact_sum_mp(prec, n, 0.0, 1 / xx)
    return ctx.sqrt(ctx.pi / (2 * xx)) * ctx.exp(-xx) * y


def _cancel_guard_digits(n: int, x) -> int:
    """Digits lost to cancellation in the closed-form I at order n+1/2.

    The subtraction cancels by the K/I ratio ~ e^(-2 nu eta), which is
    huge when Re eta < 0 (argument small against the order).
    """
    xc = complex(x)
    nu = n + 0.5
    z = xc / nu
    w = 1 + z * z
    if w == 0:
        return 40
    r = cmath.sqrt(w)
    eta = r + cmath.log(z / (1 + r))
    loss = -2 * nu * eta.real / math.log(10)
    return max(0, int(loss)) + 10


def half_integer_I_mp(prec: Precision, n: int, x):
    """I_{n+1/2}(x) from the two exponential closed-form pieces.

    The subtraction cancels ~ e^(2 nu eta), so the working precision is
    raised accordingly before rounding back to the caller's context.
    """
    work = prec.spawn(_cancel_guard_digits(n, x))
    ctx = work.ctx
    xx = work.mpc(x) if isinstance(x, complex) else ctx.mpc(x)
    if xx == 0:
        raise DomainError("half-integer I needs x != 0")
    y_neg, _, _ = exact_sum_mp(work, n, 0.0, -1 / xx)
    k_val = half_integer_K_mp(work, n, xx)
    val = (ctx.sqrt(ctx.pi / (2 * xx)) * ctx.exp(xx) * y_neg - ctx.mpf(-1) ** n * k_val) / ctx.pi
    return prec.ctx.mpc(val)


def half_integer_K_prime_mp(prec: Precision, n: int, x):
    """K'_{nu}(x) at nu = n+1/2, exactly from two K values."""
    ctx = prec.ctx
    xx = prec.mpc(x) if isinstance(x, complex) else ctx.mpc(x)
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    return (nu / xx) * half_integer_K_mp(prec, n, xx) - half_integer_K_mp(prec, n + 1, xx)


def half_integer_I_prime_mp(prec: Precision, n: int, x):
    """I'_{nu}(x) at nu = n+1/2: mean of the neighbouring orders."""
    if n < 1:
        # order -1/2 closed form: I_{-1/2}(x) = sqrt(2/(pi x)) cosh x
        ctx = prec.ctx
        xx = prec.mpc(x) if isinstance(x, complex) else ctx.mpc(x)
        i_minus = ctx.sqrt(2 / (ctx.pi * xx)) * ctx.cosh(xx)
        return (i_minus + half_integer_I_mp(prec, 1, xx)) / 2
    return (half_integer_I_mp(prec, n - 1, x) + half_integer_I_mp(prec, n + 1, x)) / 2


def exact_half_integer_K(n: int, x, precision: Precision | None = None) -> ScaledComplex:
    prec = precision or default_precision()
    return ScaledComplex.from_mpmath(half_integer_K_mp(prec, n, x), prec.ctx)
