"""HTTP front end: stateless evaluation service wrapping the core package.

Run with

    uvicorn gbpoly.service:app
or
    gbpoly serve [--host ... --port ...]

All endpoints are POST with JSON bodies (see schemas) except /health.
Domain violations map to HTTP 400; malformed bodies to 422 via pydantic.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .api import (
    handle_check,
    handle_coeffs,
    handle_eval,
    handle_sweep,
    handle_table1,
)
from .errors import ConvergenceError, DomainError
from .schemas import (
    CheckRequest,
    CheckResponse,
    CoeffsRequest,
    CoeffsResponse,
    EvalRequest,
    EvalResponse,
    SweepRequest,
    SweepResponse,
    Table1Request,
    Table1Response,
)

app = FastAPI(
    title="gbpoly",
    description="Generalized Bessel polynomial evaluation service",
    version=__version__,
)


def _run(handler, req):
    try:
        return handler(req)
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except ConvergenceError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/eval", response_model=EvalResponse)
def eval_endpoint(req: EvalRequest) -> EvalResponse:
    return _run(handle_eval, req)


@app.post("/table1", response_model=Table1Response)
def table1_endpoint(req: Table1Request) -> Table1Response:
    return _run(handle_table1, req)


@app.post("/sweep", response_model=SweepResponse)
def sweep_endpoint(req: SweepRequest) -> SweepResponse:
    return _run(handle_sweep, req)


@app.post("/coeffs", response_model=CoeffsResponse)
def coeffs_endpoint(req: CoeffsRequest) -> CoeffsResponse:
    return _run(handle_coeffs, req)


@app.post("/check", response_model=CheckResponse)
def check_endpoint(req: CheckRequest) -> CheckResponse:
    return _run(handle_check, req)
