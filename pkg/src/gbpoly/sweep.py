"""Grid comparisons of the evaluation methods against the exact oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .besseltype import eval_bessel_type
from .elementary import eval_elementary_neg, eval_elementary_pos
from .errors import ConvergenceError, DomainError
from .exact import eval_exact_sum, eval_recurrence_n, exact_sum_mp
from .precision import Precision, default_precision
from .reports import EvalReport, PolyParams
from .scaled import mp_to_decimal_string
from .simple import eval_simple

__all__ = ["SweepRow", "run_sweep", "evaluate", "render_sweep_csv", "METHOD_CHOICES"]

METHOD_CHOICES = ("exact", "recurrence", "simple", "elementary", "bessel-type")

_DEFAULT_K = {"simple": 20, "elementary": 4, "bessel-type": 4}


def default_terms(method: str) -> int:
    return _DEFAULT_K.get(method, 0)


def evaluate(
    method: str,
    n: int,
    mu: float,
    z: complex,
    K: int | None = None,
    precision: Precision | None = None,
    z_is: str = "poly",
) -> EvalReport:
    """Evaluate Y(n, mu; .) by the named method.

    z_is='poly': z is the polynomial argument (asymptotic methods convert
    to their scaled variable internally).  z_is='scaled': z is the scaled
    variable of the sector/Bessel-type expansions and the polynomial is
    evaluated at zeta = 1/(nu z); exact and simple methods then receive
    zeta as their argument.
    """
    prec = precision or default_precision()
    nu = n + 0.5
    z = complex(z)
    if z_is not in ("poly", "scaled"):
        raise DomainError("z_is must be 'poly' or 'scaled'")

    if method in ("exact", "recurrence", "simple"):
        if z_is == "scaled":
            if z == 0:
                raise DomainError("scaled variable must be nonzero")
            arg = 1 / (nu * z)
        else:
            arg = z
        params = PolyParams(n=n, mu=mu, z=arg)
        if method == "exact":
            return eval_exact_sum(params, prec)
        if method == "recurrence":
            return eval_recurrence_n(params, prec)
        return eval_simple(params, K if K is not None else _DEFAULT_K["simple"], prec)

    if z == 0:
        raise DomainError("asymptotic methods need a nonzero argument")
    kk = K if K is not None else _DEFAULT_K[method]
    scaled = 1 / (nu * z) if z_is == "poly" else z
    if method == "elementary":
        if complex(scaled).real >= 0:
            params = PolyParams(n=n, mu=mu, z=scaled)
            return eval_elementary_pos(params, kk, prec)
        # left of the imaginary axis: use the reversed-argument split with
        # scaled variable -scaled, whose combined value is Y at -zeta
        params = PolyParams(n=n, mu=mu, z=-scaled)
        _, _, y = eval_elementary_neg(params, kk, prec)
        return y
    if method == "bessel-type":
        params = PolyParams(n=n, mu=mu, z=scaled)
        return eval_bessel_type(params, kk, precision=prec)
    raise DomainError(f"unknown method '{method}'")


def poly_argument(n: int, z: complex, z_is: str) -> complex:
    """The polynomial argument actually evaluated by `evaluate`."""
    if z_is == "poly":
        return complex(z)
    return 1 / ((n + 0.5) * complex(z))


@dataclass(frozen=True)
class SweepRow:
    n: int
    z: complex
    method: str
    K: int
    value: str
    oracle: str
    rel_err: float | None
    note: str = ""

    @property
    def refused(self) -> bool:
        return self.rel_err is None


def run_sweep(
    z_values,
    n_values,
    methods,
    mu: float,
    K: int | None = None,
    precision: Precision | None = None,
    z_is: str = "poly",
) -> list[SweepRow]:
    """One row per (n, z, method); values are compared to the exact sum.

    Rows are emitted in input order (n-major, then z, then method), so the
    output is deterministic however the evaluations are scheduled.
    Methods that refuse a point (domain violation) produce a row with an
    empty value and the refusal note.
    """
    prec = precision or default_precision()
    rows = []
    for n in n_values:
        for z in z_values:
            z = complex(z)
            arg = poly_argument(n, z, z_is)
            oracle, _, _ = exact_sum_mp(prec, n, mu, arg)
            oracle_s = mp_to_decimal_string(oracle, prec.ctx, 6)
            for method in methods:
                kk = K if K is not None else _DEFAULT_K.get(method, 0)
                try:
                    report = evaluate(method, n, mu, z, K, prec, z_is)
                except (DomainError, ConvergenceError) as exc:
                    rows.append(
                        SweepRow(
                            n=n, z=z, method=method, K=kk, value="",
                            oracle=oracle_s, rel_err=None, note=f"refused: {exc}",
                        )
                    )
                    continue
                val = report.value.to_mpmath(prec.ctx)
                rel = float(abs(val - oracle) / abs(oracle)) if oracle != 0 else float("inf")
                rows.append(
                    SweepRow(
                        n=n, z=z, method=method, K=report.terms_used - 1,
                        value=report.value.decimal(6), oracle=oracle_s,
                        rel_err=rel, note=report.notes,
                    )
                )
    return rows


def render_sweep_csv(rows: list[SweepRow]) -> str:
    lines = ["n,z_re,z_im,method,K,value,oracle,rel_err,note"]
    for r in rows:
        rel = "" if r.rel_err is None else f"{r.rel_err:.6e}"
        note = r.note.replace(",", ";")
        lines.append(
            f"{r.n},{r.z.real},{r.z.imag},{r.method},{r.K},{r.value},"
            f"{r.oracle},{rel},{note}"
        )
    return "\n".join(lines) + "\n"
