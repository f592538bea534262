"""Request/response models shared by the HTTP service and the CLI.

The CLI builds the same request objects and calls the same handlers as the
service routes, so both front ends expose one behaviour.  The eval JSON
layout (keys and nesting) is the package's stable machine interface:

    {"n": ..., "mu": ..., "z": {"re": ..., "im": ...}, "method": ...,
     "terms": ..., "value": {"re_mantissa": ..., "im_mantissa": ...,
     "exp2": ..., "decimal": "..."}, "err_estimate": ...}
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .reports import EvalReport
from .scaled import ScaledComplex


class ComplexModel(BaseModel):
    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexModel":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class ValueModel(BaseModel):
    re_mantissa: float
    im_mantissa: float
    exp2: int
    decimal: str

    @classmethod
    def from_scaled(cls, v: ScaledComplex, digits: int = 4) -> "ValueModel":
        return cls(
            re_mantissa=v.mantissa.real,
            im_mantissa=v.mantissa.imag,
            exp2=v.exp2,
            decimal=v.decimal(digits),
        )


class EvalRequest(BaseModel):
    n: int = Field(ge=0)
    mu: float
    z: ComplexModel
    method: str = "exact"
    terms: int | None = None
    precision: int | None = None
    z_is: str = "poly"
    digits: int = 4
    tol: float | None = None


class EvalResponse(BaseModel):
    n: int
    mu: float
    z: ComplexModel
    method: str
    terms: int
    value: ValueModel
    err_estimate: float | None
    notes: str = ""

    def machine_json(self) -> dict:
        """The stable machine layout (notes carried separately)."""
        return self.model_dump(exclude={"notes"})

    @classmethod
    def from_report(
        cls, req: EvalRequest, report: EvalReport, digits: int = 4
    ) -> "EvalResponse":
        return cls(
            n=req.n,
            mu=req.mu,
            z=req.z,
            method=report.method.value,
            terms=report.terms_used,
            value=ValueModel.from_scaled(report.value, digits),
            err_estimate=report.err_estimate,
            notes=report.notes,
        )


class Table1Request(BaseModel):
    precision: int | None = None
    terms: int = 20


class Table1RowModel(BaseModel):
    n: int
    j: int
    z: float
    y: str
    delta: float
    ref_y: str
    ref_delta: float
    y_ok: bool
    delta_ok: bool


class Table1Response(BaseModel):
    rows: list[Table1RowModel]
    all_ok: bool


class SweepRequest(BaseModel):
    z_values: list[ComplexModel]
    n_values: list[int]
    methods: list[str]
    mu: float = 4.25
    terms: int | None = None
    precision: int | None = None
    z_is: str = "poly"


class SweepRowModel(BaseModel):
    n: int
    z: ComplexModel
    method: str
    K: int
    value: str
    oracle: str
    rel_err: float | None
    note: str = ""


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]


class CoeffsRequest(BaseModel):
    family: str
    K: int = 4
    mu: float = 0.0
    z: ComplexModel | None = None


class CoeffEntry(BaseModel):
    k: int
    text: str


class CoeffsResponse(BaseModel):
    family: str
    entries: list[CoeffEntry]


class CheckRequest(BaseModel):
    precision: int | None = None
    cases: int = 25
    seed: int = 20260809


class CheckRowModel(BaseModel):
    name: str
    cases: int
    max_residual: float
    tol: float
    passed: bool


class CheckResponse(BaseModel):
    checks: list[CheckRowModel]
    all_passed: bool
