"""Command-line front end; a thin client over the service handlers.

Subcommands: eval, table1, sweep, coeffs, check, serve.  Exit codes:
0 success, 2 domain violation or malformed input, 3 requested tolerance
not met.  GBP_PRECISION overrides the default working precision.

Complex values are written "re" or "re,im" ("0,1" is the imaginary unit);
sweep grids separate points with ';'.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .api import (
    COEFF_FAMILIES,
    handle_check,
    handle_coeffs,
    handle_eval,
    handle_sweep,
    handle_table1,
)
from .errors import ConvergenceError, DomainError
from .schemas import (
    CheckRequest,
    CoeffsRequest,
    ComplexModel,
    EvalRequest,
    SweepRequest,
    Table1Request,
)
from .checks import CheckResult, render_checks
from .sweep import METHOD_CHOICES
from .table import Table1Row, render_table1

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_TOLERANCE = 3


def parse_complex(text: str) -> ComplexModel:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return ComplexModel(re=float(parts[0]), im=0.0)
        if len(parts) == 2:
            return ComplexModel(re=float(parts[0]), im=float(parts[1]))
    except ValueError:
        pass
    raise DomainError(f"cannot parse complex value '{text}' (expected 're' or 're,im')")


def parse_complex_list(text: str) -> list[ComplexModel]:
    items = [s for s in text.split(";") if s.strip()]
    if not items:
        raise DomainError("empty z grid")
    return [parse_complex(s.strip()) for s in items]


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise DomainError(f"cannot parse integer list '{text}'") from exc


def _write(out_path: str | None, text: str):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_precision_arg() -> int | None:
    env = os.environ.get("GBP_PRECISION")
    return int(env) if env else None


def cmd_eval(args) -> int:
    req = EvalRequest(
        n=args.n,
        mu=args.mu,
        z=parse_complex(args.z),
        method=args.method,
        terms=args.terms,
        precision=args.precision,
        z_is=args.z_is,
        digits=args.digits,
        tol=args.tol,
    )
    resp = handle_eval(req)
    if args.format == "json":
        _write(args.output, json.dumps(resp.machine_json()) + "\n")
    elif args.format == "csv":
        _write(
            args.output,
            "n,mu,z_re,z_im,method,terms,value,err_estimate\n"
            f"{resp.n},{resp.mu},{resp.z.re},{resp.z.im},{resp.method},"
            f"{resp.terms},{resp.value.decimal},{resp.err_estimate}\n",
        )
    else:
        lines = [
            f"Y({resp.n}, mu={resp.mu}; z={args.z}) = {resp.value.decimal}",
            f"method: {resp.method}   terms: {resp.terms}   "
            f"err_estimate: {resp.err_estimate}",
        ]
        if resp.notes:
            lines.append(f"notes: {resp.notes}")
        _write(args.output, "\n".join(lines) + "\n")
    if args.tol is not None and (
        resp.err_estimate is None or resp.err_estimate > args.tol
    ):
        print(f"error estimate exceeds --tol {args.tol}", file=sys.stderr)
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_table1(args) -> int:
    resp = handle_table1(Table1Request(precision=args.precision, terms=args.terms))
    rows = [
        Table1Row(
            n=r.n, j=r.j, z=r.z, y=r.y, delta=r.delta,
            ref_y=r.ref_y, ref_delta=r.ref_delta, y_ok=r.y_ok, delta_ok=r.delta_ok,
        )
        for r in resp.rows
    ]
    if args.format == "json":
        _write(args.output, resp.model_dump_json(indent=2) + "\n")
    else:
        _write(args.output, render_table1(rows, args.format))
    if not resp.all_ok:
        bad = [f"(n={r.n}, z={r.z:g})" for r in rows if not r.ok]
        print("cells off reference: " + ", ".join(bad), file=sys.stderr)
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_sweep(args) -> int:
    req = SweepRequest(
        z_values=parse_complex_list(args.z),
        n_values=parse_int_list(args.n),
        methods=[m.strip() for m in args.methods.split(",") if m.strip()],
        mu=args.mu,
        terms=args.terms,
        precision=args.precision,
        z_is=args.z_is,
    )
    resp = handle_sweep(req)
    if args.format == "json":
        _write(args.output, resp.model_dump_json(indent=2) + "\n")
    else:
        lines = ["n,z_re,z_im,method,K,value,oracle,rel_err,note"]
        for r in resp.rows:
            rel = "" if r.rel_err is None else f"{r.rel_err:.6e}"
            lines.append(
                f"{r.n},{r.z.re},{r.z.im},{r.method},{r.K},{r.value},"
                f"{r.oracle},{rel},{r.note.replace(',', ';')}"
            )
        _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_coeffs(args) -> int:
    req = CoeffsRequest(
        family=args.family,
        K=args.K,
        mu=args.mu,
        z=parse_complex(args.z) if args.z else None,
    )
    resp = handle_coeffs(req)
    if args.format == "json":
        _write(args.output, resp.model_dump_json(indent=2) + "\n")
    else:
        _write(args.output, "\n".join(e.text for e in resp.entries) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    resp = handle_check(
        CheckRequest(precision=args.precision, cases=args.cases, seed=args.seed)
    )
    results = [
        CheckResult(name=c.name, cases=c.cases, max_residual=c.max_residual, tol=c.tol)
        for c in resp.checks
    ]
    if args.format == "json":
        _write(args.output, resp.model_dump_json(indent=2) + "\n")
    else:
        _write(args.output, render_checks(results))
    return EXIT_OK if resp.all_passed else EXIT_TOLERANCE


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("gbpoly.service:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbpoly",
        description="Generalized Bessel polynomials: exact and asymptotic evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--precision", "-P", type=int, default=_default_precision_arg(),
                       help="working precision in decimal digits (default 60)")
        p.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
        if with_format:
            p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("eval", help="evaluate one polynomial value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--z", required=True, help="argument 're' or 're,im'")
    p.add_argument("--method", choices=METHOD_CHOICES, default="exact")
    p.add_argument("--terms", "-K", type=int, default=None,
                   help="truncation index (default 20 simple / 4 others)")
    p.add_argument("--z-is", choices=("poly", "scaled"), default="poly", dest="z_is",
                   help="interpret --z as polynomial argument or scaled variable")
    p.add_argument("--digits", type=int, default=4)
    p.add_argument("--tol", type=float, default=None,
                   help="exit 3 when the error estimate exceeds this")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table1", help="reproduce the reference error table")
    p.add_argument("--terms", "-K", type=int, default=20)
    p.add_argument("--format", choices=("text", "csv", "markdown", "json"), default="text")
    common(p, with_format=False)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", help="compare methods against the oracle on a grid")
    p.add_argument("--z", required=True, help="grid points 're[,im]' separated by ';'")
    p.add_argument("--n", required=True, help="comma-separated degrees")
    p.add_argument("--methods", required=True,
                   help="comma-separated subset of " + ",".join(METHOD_CHOICES))
    p.add_argument("--mu", type=float, default=4.25)
    p.add_argument("--terms", "-K", type=int, default=None)
    p.add_argument("--z-is", choices=("poly", "scaled"), default="poly", dest="z_is")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("coeffs", help="dump coefficient families")
    p.add_argument("family", choices=COEFF_FAMILIES)
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--z", default=None, help="evaluation point for z-dependent families")
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("check", help="run the identity suite")
    p.add_argument("--cases", type=int, default=25)
    p.add_argument("--seed", type=int, default=20260809)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
