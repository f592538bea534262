"""Identity suite: internal consistency checks runnable on demand.

Every check compares two independent evaluation routes and reports the
worst relative residual over a seeded random grid, so runs are
reproducible.  Tolerances scale with the working precision as 10**(8-P).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .besseltype import eval_bessel_type
from .besseluniform import half_integer_K_mp
from .elementary import elementary_pos_mp
from .exact import (
    derivative_residuals,
    exact_sum_mp,
    kummer_split_mp,
    recurrence_mp,
    recurrence_mu_residual,
)
from .precision import Precision, default_precision
from .reports import PolyParams
from .simple import simple_sum_mp

__all__ = ["CheckResult", "run_identity_checks", "render_checks"]

MUS = (-0.9, 0.0, 1.0, 4.25)


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def _rel(prec, a, b) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return float(abs(a - b) / scale)


def _conditioned(prec, n, mu, z, slack=12) -> Precision:
    """Working precision widened by the cancellation of the sum at (n,mu,z).

    Alternating sums amplify rounding by sum|terms|/|sum|; the residual
    checks must not confuse that amplification with an identity failure.
    """
    _, _, err = exact_sum_mp(prec, n, mu, z)
    cond = max(err / prec.eps, 1.0)
    if not math.isfinite(cond):
        return prec.spawn(300)
    return prec.spawn(min(300, int(math.log10(cond)) + slack))


def _random_params(rng, n_max=150):
    n = rng.randint(2, n_max)
    mu = rng.choice(MUS) + rng.random()
    radius = 10.0 ** rng.uniform(-2, 3)
    if rng.random() < 0.5:
        z = complex(rng.choice((-1, 1)) * radius, 0.0)
    else:
        z = radius * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if z == 0:
            z = complex(radius, 0)
    return n, mu, z


def check_recurrence_vs_sum(prec, cases, seed) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n, mu, z = _random_params(rng)
        work = _conditioned(prec, n, mu, z)
        a, _, _ = exact_sum_mp(work, n, mu, z)
        b, _ = recurrence_mp(work, n, mu, z)
        worst = max(worst, _rel(work, a, b))
    return CheckResult("recurrence_n vs exact_sum", cases, worst, 10.0 ** (6 - prec.dps))


def check_mu_recurrence(prec, cases, seed) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n, mu, z = _random_params(rng)
        work = _conditioned(prec, n, mu + 2, z)
        r = recurrence_mu_residual(PolyParams(n=n, mu=mu, z=z), work)
        worst = max(worst, r)
    return CheckResult("order recurrence residual", cases, worst, 10.0 ** (8 - prec.dps))


def check_derivative(prec, cases, seed) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n, mu, z = _random_params(rng, n_max=80)
        work = _conditioned(prec, n, mu + 2, z)
        r1, r2 = derivative_residuals(PolyParams(n=n, mu=mu, z=z), work)
        worst = max(worst, r1, r2)
    return CheckResult("derivative identities", cases, worst, 10.0 ** (8 - prec.dps))


def check_kummer_split(prec, cases, seed) -> CheckResult:
    """F + U reproduces the polynomial at reversed argument by construction;
    the checked residual is of the re-summed decomposition."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(1, 60)
        mu = rng.choice(MUS) + rng.random()
        z = 10.0 ** rng.uniform(-1, 1.5)
        f, u, y, _ = kummer_split_mp(prec, n, mu, z)
        worst = max(worst, _rel(prec, f + u, y))
    return CheckResult("F + U decomposition", cases, worst, 10.0 ** (8 - prec.dps))


def check_mu0_bessel_form(prec, cases, seed) -> CheckResult:
    """Y(n, 0; x) agrees with its half-integer K closed form."""
    rng = random.Random(seed)
    ctx = prec.ctx
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(1, 100)
        x = 10.0 ** rng.uniform(-1, 2)
        y, _, _ = exact_sum_mp(prec, n, 0.0, 1 / ctx.mpf(x))
        k = half_integer_K_mp(prec, n, x)
        # sqrt(2/(pi zeta)) e^(1/zeta) K_{n+1/2}(1/zeta) at zeta = 1/x
        closed = ctx.sqrt(2 * ctx.mpf(x) / ctx.pi) * ctx.exp(x) * k
        worst = max(worst, _rel(prec, y, closed))
    return CheckResult("mu=0 half-integer K form", cases, worst, 10.0 ** (8 - prec.dps))


def check_simple_mu0_convergent(prec, cases, seed) -> CheckResult:
    """At mu = 0 the Laguerre-coefficient series is convergent; summing far
    past 2n (the tail decays factorially but not before) hits the oracle."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(5, 30)
        z = rng.choice((0.5, 1.0, 3.0, 10.0))
        val, _, _ = simple_sum_mp(prec, n, 0.0, z, 2 * n + 80)
        oracle, _, _ = exact_sum_mp(prec, n, 0.0, z)
        worst = max(worst, _rel(prec, val, oracle))
    return CheckResult("mu=0 convergent simple series", cases, worst, 1e-35)


def check_elementary_mu0(prec, cases, seed) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(40, 120)
        z = rng.uniform(0.8, 3.0)
        val, _, _ = elementary_pos_mp(prec, n, 0.0, complex(z), K=4)
        nu = prec.ctx.mpf(n) + prec.ctx.mpf(1) / 2
        oracle, _, _ = exact_sum_mp(prec, n, 0.0, 1 / (nu * prec.ctx.mpf(z)))
        worst = max(worst, _rel(prec, val, oracle))
    return CheckResult("mu=0 sector expansion vs oracle", cases, worst, 1e-8)


def check_bessel_type_mu0(prec, cases, seed) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(20, 80)
        z = rng.uniform(0.4, 3.0)
        report = eval_bessel_type(PolyParams(n=n, mu=0.0, z=complex(z)), K=4, precision=prec)
        nu = prec.ctx.mpf(n) + prec.ctx.mpf(1) / 2
        oracle, _, _ = exact_sum_mp(prec, n, 0.0, 1 / (nu * prec.ctx.mpf(z)))
        val = report.value.to_mpmath(prec.ctx)
        worst = max(worst, _rel(prec, val, oracle))
    return CheckResult("mu=0 Bessel-type reduction", cases, worst, 1e-13)


_CHECKS = (
    check_recurrence_vs_sum,
    check_mu_recurrence,
    check_derivative,
    check_kummer_split,
    check_mu0_bessel_form,
    check_simple_mu0_convergent,
    check_elementary_mu0,
    check_bessel_type_mu0,
)


def run_identity_checks(
    precision: Precision | None = None, cases: int = 25, seed: int = 20260809
) -> list[CheckResult]:
    prec = precision or default_precision()
    return [fn(prec, cases, seed + i) for i, fn in enumerate(_CHECKS)]


def render_checks(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(
            f"{r.name:<{width}}  cases={r.cases:<4} max_residual={r.max_residual:.3e} "
            f"tol={r.tol:.1e}  {status}"
        )
    lines.append(
        "all passed" if all(r.passed for r in results) else "SOME CHECKS FAILED"
    )
    return "\n".join(lines) + "\n"
