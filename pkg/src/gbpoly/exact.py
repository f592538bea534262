"""Ground-truth evaluation of the generalized Bessel polynomials.

Everything here is exact or convergent: the explicit finite sum, the
three-term recurrence in the degree, residuals of the order recurrence and
of the derivative identity, and the split of Y at reversed argument into a
regular (confluent hypergeometric) part F and an exponentially small part
U.  These are the oracles every asymptotic evaluator is measured against.

The explicit sum is

    Y(n, mu; x) = sum_{k=0..n} C(n,k) (n+mu+1)_k (x/2)^k,

with Y = 1 at x = 0.  Accumulation tracks sum(|term|) so the reported
error estimate reflects cancellation for negative or complex arguments.
"""

from __future__ import annotations

from .errors import ConvergenceError, DomainError
from .precision import Precision, default_precision
from .reports import EvalReport, Method, PolyParams
from .scaled import ScaledComplex

__all__ = [
    "pochhammer",
    "exact_sum_mp",
    "eval_exact_sum",
    "recurrence_mp",
    "eval_recurrence_n",
    "recurrence_mu_residual",
    "derivative_residuals",
    "derivative_check",
    "kummer_split",
    "kummer_split_mp",
]

_KUMMER_ITER_CAP = 10**6


def pochhammer(p, k: int, precision: Precision | None = None):
    """Rising factorial (p)_k = p (p+1) ... (p+k-1); (p)_0 = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    prec = precision or default_precision()
    ctx = prec.ctx
    v = ctx.mpc(p) if isinstance(p, complex) else ctx.mpf(p)
    out = ctx.mpf(1)
    for i in range(k):
        out = out * (v + i)
    return out


def _require_shifted_order(n: int, mu: float):
    if n + mu + 1 <= 0:
        raise DomainError("need n + mu + 1 > 0 so all Pochhammer factors are positive")


def exact_sum_mp(prec: Precision, n: int, mu, z):
    """Kernel: (value, terms_used, err_estimate) of the explicit sum."""
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    if zz == 0:
        return ctx.mpc(1), 1, 0.0
    half = zz / 2
    total = ctx.mpc(0)
    abs_total = ctx.mpf(0)
    term = ctx.mpc(1)
    for k in range(n + 1):
        total += term
        abs_total += abs(term)
        if k < n:
            term = term * (n - k) * (n + mu + 1 + k) / (k + 1) * half
    if total == 0:
        err = float("inf")
    else:
        err = float(prec.eps * abs_total / abs(total))
    return total, n + 1, err


def eval_exact_sum(params: PolyParams, precision: Precision | None = None) -> EvalReport:
    """Explicit finite sum; err_estimate is cancellation-aware."""
    prec = precision or default_precision()
    _require_shifted_order(params.n, params.mu)
    value, terms, err = exact_sum_mp(prec, params.n, params.mu, params.z)
    notes = "" if err <= 1e-20 else "raise precision"
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.EXACT_SUM,
        terms_used=terms,
        err_estimate=err,
        notes=notes,
    )


def recurrence_mp(prec: Precision, n: int, mu, z):
    """Kernel: forward degree recurrence from the degree-0 and -1 values."""
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    zz = prec.mpc(z) if isinstance(z, complex) else ctx.mpc(z)
    y0 = ctx.mpc(1)
    if n == 0:
        return y0, 1
    y1 = 1 + (mu + 2) / 2 * zz
    if n == 1:
        return y1, 1
    for m in range(n - 1):
        a = 2 * (2 * m + mu + 2) * (m + mu + 2)
        if a == 0:
            raise DomainError("degenerate recurrence coefficient A_n = 0")
        b = (2 * m + mu + 3) * (2 * mu + zz * (2 * m + mu + 4) * (2 * m + mu + 2))
        c = 2 * (m + 1) * (2 * m + mu + 4)
        y0, y1 = y1, (b * y1 + c * y0) / a
    return y1, n - 1


def eval_recurrence_n(params: PolyParams, precision: Precision | None = None) -> EvalReport:
    prec = precision or default_precision()
    _require_shifted_order(params.n, params.mu)
    value, steps = recurrence_mp(prec, params.n, params.mu, params.z)
    return EvalReport(
        value=ScaledComplex.from_mpmath(value, prec.ctx),
        method=Method.RECURRENCE_N,
        terms_used=steps,
        err_estimate=None,
        notes="forward recurrence; cross-check against exact_sum",
    )


def recurrence_mu_residual(params: PolyParams, precision: Precision | None = None) -> float:
    """Relative residual of the order recurrence linking mu, mu+1, mu+2."""
    prec = precision or default_precision()
    n, mu, z = params.n, params.mu, params.z
    if z == 0:
        raise DomainError("order recurrence needs z != 0")
    ctx = prec.ctx
    zz = prec.mpc(z)
    mu_ = ctx.mpf(mu)
    # order shifts must happen at working precision; a float mu+2 moves the
    # order by an ulp, which the identity resolves
    y0, _, _ = exact_sum_mp(prec, n, mu_, z)
    y1, _, _ = exact_sum_mp(prec, n, mu_ + 1, z)
    y2, _, _ = exact_sum_mp(prec, n, mu_ + 2, z)
    lhs = (n + mu_ + 2) * y2
    rhs = (2 * n + mu_ + 2 - 2 / zz) * y1 + (2 / zz) * y0
    return float(abs(lhs - rhs) / abs(y0))


def _derivative_sum_mp(prec: Precision, n: int, mu, z):
    """Term-by-term derivative of the explicit sum."""
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    zz = prec.mpc(z)
    total = ctx.mpc(0)
    # d/dz of C(n,k)(n+mu+1)_k (z/2)^k  =  C(n,k)(n+mu+1)_k k z^(k-1) / 2^k
    coeff = ctx.mpf(1)
    for k in range(1, n + 1):
        coeff = coeff * (n - k + 1) * (n + mu + k) / k
        total += coeff * k * zz ** (k - 1) / ctx.mpf(2) ** k
    return total


def derivative_residuals(
    params: PolyParams, precision: Precision | None = None
) -> tuple[float, float]:
    """Residuals of both closed forms of dY/dz against the direct sum."""
    prec = precision or default_precision()
    n, mu, z = params.n, params.mu, params.z
    if n < 1:
        raise DomainError("derivative identities need n >= 1")
    ctx = prec.ctx
    zz = prec.mpc(z)
    mu_ = ctx.mpf(mu)
    d = _derivative_sum_mp(prec, n, mu_, z)
    y_shift, _, _ = exact_sum_mp(prec, n - 1, mu_ + 2, z)
    rhs1 = ctx.mpf(n) * (n + mu_ + 1) / 2 * y_shift
    r1 = float(abs(d - rhs1) / max(abs(d), abs(rhs1)))
    if z == 0:
        return r1, r1
    y_mu, _, _ = exact_sum_mp(prec, n, mu_, z)
    y_mu1, _, _ = exact_sum_mp(prec, n, mu_ + 1, z)
    rhs2 = (n + mu_ + 1) * (y_mu1 - y_mu) / zz
    r2 = float(abs(d - rhs2) / max(abs(d), abs(rhs2)))
    return r1, r2


def derivative_check(params: PolyParams, precision: Precision | None = None) -> float:
    """Worst of the two derivative residuals."""
    return max(derivative_residuals(params, precision))


def _kummer_f_mp(prec: Precision, n: int, mu, z):
    """Regular part F at reversed argument, via its convergent series.

    z here is the variable of the split: the polynomial argument is -1/z.
    Series terms are positive for z > 0, so no cancellation occurs.
    """
    ctx = prec.ctx
    mu = ctx.mpf(mu)
    zz = prec.mpc(z)
    a = ctx.mpf(n + 1)
    b = 2 * n + mu + 2
    term = ctx.mpc(1)
    total = ctx.mpc(1)
    min_terms = 2 * n + int(4 * abs(complex(z))) + 4
    tol = ctx.mpf(10) ** (-prec.dps)
    k = 0
    while True:
        term = term * (a + k) / (b + k) * (2 * zz) / (k + 1)
        total += term
        k += 1
        if k >= min_terms and abs(term) < abs(total) * tol:
            break
        if k > _KUMMER_ITER_CAP:
            raise ConvergenceError("confluent series did not converge")
    front = (
        ctx.gamma(n + 1)
        * (2 * zz) ** (n + mu + 1)
        * ctx.exp(-2 * zz)
        / ctx.gamma(2 * n + mu + 2)
    )
    return front * total, k + 1


def kummer_split_mp(prec: Precision, n: int, mu, z):
    """Kernel: (F, U, Y, terms) with U defined subtractively as Y - F.

    Resolving U when it is exponentially smaller than F needs head room
    beyond the cancellation in the alternating sum for Y, so the working
    precision is doubled until U is determined to ~1e-20 relative (at
    most four doublings).
    """
    work = prec
    for _ in range(5):
        y, _, yerr = exact_sum_mp(work, n, mu, -1 / work.mpc(z))
        f, terms = _kummer_f_mp(work, n, mu, z)
        u = y - f
        if u == 0:
            abs_u = abs(y) * work.ctx.mpf(10) ** (-work.dps)
        else:
            abs_u = abs(u)
        # absolute uncertainty of y (and of the subtraction) vs size of u
        slack = float(yerr * abs(y) / abs_u) if abs(y) > 0 else 0.0
        if slack <= 1e-20:
            return f, u, y, terms
        work = work.spawn(work.dps)
    return f, u, y, terms


def kummer_split(
    params: PolyParams, precision: Precision | None = None
) -> tuple[ScaledComplex, ScaledComplex]:
    """Split Y(n, mu; -1/z) = F + U, for Re z > 0.

    params.z is the split variable z, not the polynomial argument.
    """
    prec = precision or default_precision()
    if complex(params.z).real <= 0:
        raise DomainError("kummer_split is used in the sector Re z > 0")
    _require_shifted_order(params.n, params.mu)
    f, u, _, _ = kummer_split_mp(prec, params.n, params.mu, params.z)
    return (
        ScaledComplex.from_mpmath(f, prec.ctx),
        ScaledComplex.from_mpmath(u, prec.ctx),
    )
