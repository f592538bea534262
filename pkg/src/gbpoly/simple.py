"""Large-degree expansion with Laguerre-polynomial coefficients.

Valid for arguments bounded away from the origin:

    Y(n, mu; z)  ~  (2z)^n 2^mu e^(1/z) sum_k c_k (1/2 - k/2)_n,

where c_k = L_k^(-mu-k)(1/z).  The c_k follow a three-term recurrence; the
rising factorials (1/2 - k/2)_n vanish identically for odd k <= 2n-1, so
only even-index terms contribute at large degree, and consecutive even
terms shrink by a factor ~1/n.  The error estimate is the first omitted
nonzero term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .precision import Precision, default_precision
from .reports import EvalReport, Method, PolyParams
from .scaled import ScaledComplex

__all__ = [
    "LaguerreCoeffs",
    "laguerre_coeffs",
    "laguerre_direct",
    "phi_pochhammer_ladder",
    "simple_sum_mp",
    "eval_simple",
]

SMALL_Z_WARN = 0.1
DEFAULT_TERMS = 20


@dataclass(frozen=True)
class LaguerreCoeffs:
    """c_k = L_k^(-mu-k)(1/z) for k = 0..K (context numbers)."""

    z: complex
    coeffs: tuple


def laguerre_coeffs(mu, z, K: int, precision: Precision | None = None) -> LaguerreCoeffs:
    """c_0..c_K by the recurrence z(k+1) c_{k+1} = -(mu z + k z + 1) c_k - c_{k-1}."""
    if z == 0:
        raise DomainError("Laguerre coefficients need z != 0")
    prec = precision or default_precision()
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    c = [ctx.mpc(1)]
    if K >= 1:
        c.append(-(mu * zz + 1) / zz)
    for k in range(1, K):
        c.append((-(mu * zz + k * zz + 1) * c[k] - c[k - 1]) / (zz * (k + 1)))
    return LaguerreCoeffs(z=complex(z), coeffs=tuple(c[: K + 1]))


def laguerre_direct(mu, z, k: int, precision: Precision | None = None):
    """Independent check value: the finite Laguerre sum evaluated directly.

    L_k^(alpha)(x) = sum_{m=0..k} C(k+alpha, k-m) (-x)^m / m!  with
    alpha = -mu-k and x = 1/z.
    """
    prec = precision or default_precision()
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    x = 1 / (prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z))
    total = ctx.mpc(0)
    fact = ctx.mpf(1)
    for m in range(k + 1):
        if m:
            fact *= m
        # C(k+alpha, k-m) with k+alpha = -mu: product over j of (-mu - j) / (k-m)!
        j = k - m
        binom = ctx.mpf(1)
        for i in range(j):
            binom = binom * (-mu - i) / (i + 1)
        total += binom * (-x) ** m / fact
    return total


def phi_pochhammer_ladder(n: int, K: int, precision: Precision | None = None):
    """(1/2 - k/2)_n for k = 0..K; odd k <= 2n-1 gives an exact zero."""
    if n < 1:
        raise DomainError("ladder needs n >= 1")
    prec = precision or default_precision()
    ctx = prec.ctx
    out = []
    for k in range(K + 1):
        if k % 2 == 1 and k <= 2 * n - 1:
            out.append(ctx.mpf(0))
            continue
        start = (ctx.mpf(1) - k) / 2
        v = ctx.mpf(1)
        for i in range(n):
            v = v * (start + i)
        out.append(v)
    return out


def simple_sum_mp(prec: Precision, n: int, mu, z, K: int):
    """Kernel: (value, first-omitted-term relative estimate, terms_used)."""
    ctx = prec.ctx
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    # first omitted nonzero index is the next even index beyond K
    k_next = K + 1 if (K + 1) % 2 == 0 else K + 2
    lag = laguerre_coeffs(mu, z, k_next, prec)
    ladder = phi_pochhammer_ladder(n, k_next, prec)
    partial = ctx.mpc(0)
    used = 0
    for k in range(K + 1):
        if ladder[k] == 0:
            continue
        partial += lag.coeffs[k] * ladder[k]
        used += 1
    omitted = lag.coeffs[k_next] * ladder[k_next]
    front = (2 * zz) ** n * ctx.mpf(2) ** ctx.mpf(mu) * ctx.exp(1 / zz)
    value = front * partial
    err = float(abs(omitted) / abs(partial)) if partial != 0 else float("inf")
    return value, err, used


def eval_simple(
    params: PolyParams, K: int = DEFAULT_TERMS, precision: Precision | None = None
) -> EvalReport:
    """Laguerre-coefficient expansion of Y(n, mu; z) through index K."""
    if params.z == 0:
        raise DomainError("expansion has an essential singularity at z = 0")
    if params.n < 1:
        raise DomainError("asymptotic evaluation needs n >= 1")
    prec = precision or default_precision()
    value, err, used = simple_sum_mp(prec, params.n, params.mu, params.z, K)
    notes = ""
    if abs(params.z) < SMALL_Z_WARN:
        notes = "argument inside the small-|z| breakdown region; result unreliable"
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.SIMPLE,
        terms_used=used,
        err_estimate=err,
        notes=notes,
    )
