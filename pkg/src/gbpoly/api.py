"""Handlers behind both the HTTP service and the CLI."""

from __future__ import annotations

from .besseltype import ibp_coeffs
from .checks import run_identity_checks
from .errors import DomainError
from .precision import Precision, default_precision, gamma_star_poly
from .ratpoly import RationalPoly
from .saddle import revert_mapping, saddle_geometry
from .schemas import (
    CheckRequest,
    CheckResponse,
    CheckRowModel,
    CoeffEntry,
    CoeffsRequest,
    CoeffsResponse,
    ComplexModel,
    EvalRequest,
    EvalResponse,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
    Table1Request,
    Table1Response,
    Table1RowModel,
)
from .besseluniform import gen_uk, gen_vk
from .simple import laguerre_coeffs
from .sweep import METHOD_CHOICES, evaluate, run_sweep
from .table import compute_table1

__all__ = [
    "handle_eval",
    "handle_table1",
    "handle_sweep",
    "handle_coeffs",
    "handle_check",
    "COEFF_FAMILIES",
]

COEFF_FAMILIES = ("uk", "vk", "gamma-star", "laguerre", "ibp", "reversion")


def _precision(dps: int | None) -> Precision:
    return Precision(dps) if dps else default_precision()


def handle_eval(req: EvalRequest) -> EvalResponse:
    if req.method not in METHOD_CHOICES:
        raise DomainError(
            f"unknown method '{req.method}'; choose from {', '.join(METHOD_CHOICES)}"
        )
    prec = _precision(req.precision)
    report = evaluate(
        req.method,
        req.n,
        req.mu,
        req.z.to_complex(),
        K=req.terms,
        precision=prec,
        z_is=req.z_is,
    )
    return EvalResponse.from_report(req, report, req.digits)


def handle_table1(req: Table1Request) -> Table1Response:
    rows = compute_table1(_precision(req.precision), req.terms)
    return Table1Response(
        rows=[
            Table1RowModel(
                n=r.n, j=r.j, z=r.z, y=r.y, delta=r.delta,
                ref_y=r.ref_y, ref_delta=r.ref_delta,
                y_ok=r.y_ok, delta_ok=r.delta_ok,
            )
            for r in rows
        ],
        all_ok=all(r.ok for r in rows),
    )


def handle_sweep(req: SweepRequest) -> SweepResponse:
    for m in req.methods:
        if m not in METHOD_CHOICES:
            raise DomainError(f"unknown method '{m}'")
    if not req.z_values or not req.n_values or not req.methods:
        raise DomainError("sweep needs nonempty z, n and method lists")
    rows = run_sweep(
        [c.to_complex() for c in req.z_values],
        req.n_values,
        req.methods,
        mu=req.mu,
        K=req.terms,
        precision=_precision(req.precision),
        z_is=req.z_is,
    )
    return SweepResponse(
        rows=[
            SweepRowModel(
                n=r.n, z=ComplexModel.from_complex(r.z), method=r.method,
                K=r.K, value=r.value, oracle=r.oracle,
                rel_err=r.rel_err, note=r.note,
            )
            for r in rows
        ]
    )


def _poly_entries(polys: list[RationalPoly], prefix: str, var: str) -> list[CoeffEntry]:
    return [
        CoeffEntry(k=k, text=f"{prefix}{k} = {p.text(var)}")
        for k, p in enumerate(polys)
    ]


def handle_coeffs(req: CoeffsRequest) -> CoeffsResponse:
    family = req.family
    K = req.K
    if K < 0:
        raise DomainError("K must be nonnegative")
    if family == "uk":
        return CoeffsResponse(family=family, entries=_poly_entries(gen_uk(K), "u", "t"))
    if family == "vk":
        return CoeffsResponse(family=family, entries=_poly_entries(gen_vk(K), "v", "t"))
    if family == "gamma-star":
        if K > 4:
            raise DomainError("gamma-star coefficients are tabulated for K <= 4")
        polys = [gamma_star_poly(k) for k in range(K + 1)]
        return CoeffsResponse(
            family=family, entries=_poly_entries(polys, "gamma", "mu")
        )
    z = (req.z or ComplexModel(re=1.0)).to_complex()
    if z == 0:
        raise DomainError("this family needs z != 0")
    if family == "laguerre":
        lag = laguerre_coeffs(req.mu, z, K)
        entries = [
            CoeffEntry(k=k, text=str(complex(c))) for k, c in enumerate(lag.coeffs)
        ]
        return CoeffsResponse(family=family, entries=entries)
    if family == "reversion":
        geom = saddle_geometry(z)
        s = revert_mapping(geom, max(2 * K + 2, 8))
        entries = [CoeffEntry(k=k, text=str(s.c[k])) for k in range(min(K, s.order) + 1)]
        return CoeffsResponse(family=family, entries=entries)
    if family == "ibp":
        coeffs = ibp_coeffs(z, req.mu, K)
        entries = [
            CoeffEntry(k=k, text=f"C={coeffs.C[k]}  D={coeffs.D[k]}")
            for k in range(K + 1)
        ]
        return CoeffsResponse(family=family, entries=entries)
    raise DomainError(
        f"unknown family '{family}'; choose from {', '.join(COEFF_FAMILIES)}"
    )


def handle_check(req: CheckRequest) -> CheckResponse:
    results = run_identity_checks(_precision(req.precision), req.cases, req.seed)
    return CheckResponse(
        checks=[
            CheckRowModel(
                name=r.name, cases=r.cases, max_residual=r.max_residual,
                tol=r.tol, passed=r.passed,
            )
            for r in results
        ],
        all_passed=all(r.passed for r in results),
    )
