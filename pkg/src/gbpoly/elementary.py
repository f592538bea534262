"""Sector expansions of Y in elementary functions.

With nu = n + 1/2 and the scaled variable z (polynomial argument
zeta = 1/(nu z)):

  positive sector   Y(n, mu; zeta)  ~  front+ * sum_k A_k / nu^k
  reversed argument Y(n, mu; -zeta) =  F + U, each with its own front
                    factor and coefficient family (C_k and B_k).

Front factors combine exponentials like e^(nu(z - eta)) whose magnitude
exceeds double range for large nu, so assembly runs under the caller's
precision context while the coefficients themselves stay double precision.
Both evaluators hold inside |ph z| <= pi/2 - delta and away from the
turning points z = ±i.
"""

from __future__ import annotations

import cmath

from .errors import DomainError
from .precision import Precision, default_precision
from .reports import EvalReport, Method, PolyParams
from .saddle import (
    DEFAULT_SECTOR_MARGIN,
    abc_coeffs,
    saddle_geometry,
)
from .scaled import ScaledComplex

__all__ = [
    "eval_elementary_pos",
    "eval_elementary_neg",
    "elementary_pos_mp",
    "elementary_neg_mp",
]

MIN_DEGREE = 5


def _check_sector(z: complex, delta: float):
    z = complex(z)
    if z == 0 or abs(cmath.phase(z)) > cmath.pi / 2 - delta:
        raise DomainError(f"outside the sector |ph z| <= pi/2 - {delta}")


def _series_value(coeffs, nu):
    total = 0j
    for k, a in enumerate(coeffs):
        total += a / nu**k
    return total


def _front_pos(ctx, mu, z, nu):
    r = ctx.sqrt(1 + z * z)
    eta = r + ctx.log(z / (1 + r))
    pref = (1 - z + r) ** ctx.mpf(mu) * ctx.sqrt(z) / (1 + z * z) ** ctx.mpf("0.25")
    return pref * ctx.exp(nu * z - nu * eta)


def elementary_pos_mp(prec: Precision, n: int, mu, z, K: int = 4):
    """Kernel for the positive sector: (value, err_estimate, K_used)."""
    geom = saddle_geometry(z)
    a, _, _ = abc_coeffs(geom, float(mu), K)
    k_used = len(a.values) - 1
    ctx = prec.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    series = _series_value(a.values, float(n) + 0.5)
    value = _front_pos(ctx, mu, zz, nu) * prec.mpc(series)
    # first omitted term, with the last computed coefficient standing in
    # for the unknown next one at the table cap
    err = abs(a.values[-1]) / float(nu) ** (k_used + 1) / abs(series)
    return value, err, k_used


def eval_elementary_pos(
    params: PolyParams,
    K: int = 4,
    precision: Precision | None = None,
    delta: float = DEFAULT_SECTOR_MARGIN,
) -> EvalReport:
    """Positive-sector expansion of Y(n, mu; zeta), zeta = 1/(nu z).

    params.z is the scaled variable z, not the polynomial argument.
    """
    _check_sector(params.z, delta)
    if params.n < MIN_DEGREE:
        raise DomainError(f"asymptotic evaluation needs n >= {MIN_DEGREE}")
    prec = precision or default_precision()
    value, err, k_used = elementary_pos_mp(prec, params.n, params.mu, params.z, K)
    notes = f"zeta = 1/(nu*z), nu = {params.n}+1/2"
    if k_used < K:
        notes += f"; K capped at {k_used} (gamma-correction table limit)"
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.ELEMENTARY_POS,
        terms_used=k_used + 1,
        err_estimate=err,
        notes=notes,
    )


def elementary_neg_mp(prec: Precision, n: int, mu, z, K: int = 4):
    """Kernel for the reversed argument: (F, U, errF, errU, K_used)."""
    geom = saddle_geometry(z)
    _, b, c = abc_coeffs(geom, float(mu), K)
    k_used = len(b.values) - 1
    ctx = prec.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    r = ctx.sqrt(1 + zz * zz)
    eta = r + ctx.log(zz / (1 + r))
    quarter = (1 + zz * zz) ** ctx.mpf("0.25")
    front_u = (1 + zz + r) ** ctx.mpf(mu) * ctx.sqrt(zz) / quarter * ctx.exp(-nu * zz - nu * eta)
    front_f = (1 + zz - r) ** ctx.mpf(mu) * ctx.sqrt(zz) / quarter * ctx.exp(-nu * zz + nu * eta)
    nu_f = float(n) + 0.5
    sum_b = _series_value(b.values, nu_f)
    sum_c = _series_value(c.values, nu_f)
    u = ctx.mpf(-1) ** n * front_u * prec.mpc(sum_b)
    f = front_f * prec.mpc(sum_c)
    err_u = abs(b.values[-1]) / nu_f ** (k_used + 1) / abs(sum_b)
    err_f = abs(c.values[-1]) / nu_f ** (k_used + 1) / abs(sum_c)
    return f, u, err_f, err_u, k_used


def eval_elementary_neg(
    params: PolyParams,
    K: int = 4,
    precision: Precision | None = None,
    delta: float = DEFAULT_SECTOR_MARGIN,
) -> tuple[EvalReport, EvalReport, EvalReport]:
    """Reversed-argument split: returns (F report, U report, Y report).

    params.z is the scaled variable; the polynomial argument of the
    combined value is -zeta = -1/(nu z).
    """
    _check_sector(params.z, delta)
    if params.n < MIN_DEGREE:
        raise DomainError(f"asymptotic evaluation needs n >= {MIN_DEGREE}")
    prec = precision or default_precision()
    f, u, err_f, err_u, k_used = elementary_neg_mp(prec, params.n, params.mu, params.z, K)
    y = f + u
    note = f"polynomial argument -1/(nu*z), nu = {params.n}+1/2"
    if k_used < K:
        note += f"; K capped at {k_used}"
    terms = k_used + 1
    mk = lambda v, m, e: EvalReport(
        value=ScaledComplex.from_mpmath(v, prec.ctx),
        method=m,
        terms_used=terms,
        err_estimate=e,
        notes=note,
    )
    err_y = max(err_f * float(abs(f) / abs(y)), err_u * float(abs(u) / abs(y)))
    return (
        mk(f, Method.ELEMENTARY_NEG_F, err_f),
        mk(u, Method.ELEMENTARY_NEG_U, err_u),
        mk(y, Method.ELEMENTARY_NEG, err_y),
    )
