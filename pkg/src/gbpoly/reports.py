"""Evaluation parameter and result records."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .scaled import ScaledComplex

__all__ = ["Method", "PolyParams", "EvalReport"]


class Method(str, Enum):
    EXACT_SUM = "exact_sum"
    RECURRENCE_N = "recurrence_n"
    RECURRENCE_MU = "recurrence_mu"
    SIMPLE = "simple"
    ELEMENTARY_POS = "elementary_pos"
    ELEMENTARY_NEG_F = "elementary_neg_F"
    ELEMENTARY_NEG_U = "elementary_neg_U"
    # combined F + U value of the negative-sector split
    ELEMENTARY_NEG = "elementary_neg"
    BESSEL_TYPE = "bessel_type"


@dataclass(frozen=True)
class PolyParams:
    """Degree n, order mu, and an argument whose meaning is per-operation.

    Exact evaluators read z as the polynomial argument itself; the
    asymptotic evaluators read z as the scaled variable of their expansion
    (the polynomial is then evaluated at 1/(nu*z) or its negative, with
    nu = n + 1/2), as documented on each operation.
    """

    n: int
    mu: float
    z: complex

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree n must be nonnegative")
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "mu", float(self.mu))

    @property
    def nu(self) -> float:
        return self.n + 0.5


@dataclass(frozen=True)
class EvalReport:
    """One evaluation result with its provenance."""

    value: ScaledComplex
    method: Method
    terms_used: int
    err_estimate: float | None = None
    notes: str = ""

    def __post_init__(self):
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if self.err_estimate is not None and not self.err_estimate >= 0:
            raise ValueError("err_estimate must be nonnegative when present")
