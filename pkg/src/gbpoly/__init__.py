"""Generalized Bessel polynomials at large degree.

Exact (arbitrary-precision) evaluation plus three asymptotic expansion
families, each validated against the exact oracle:

  * a simple expansion with Laguerre-polynomial coefficients, for
    arguments bounded away from the origin;
  * sector expansions in elementary functions via saddle-point analysis
    of the underlying Laplace integrals;
  * an expansion in modified Bessel functions valid for all arguments,
    including the turning points of the scaled variable.

Use the CLI (`gbpoly ...`) or the HTTP service (`gbpoly serve`).
"""

__version__ = "0.1.0"

from .besseltype import (
    BesselSource,
    BesselTypeCoeffs,
    confluent_interp,
    eval_bessel_type,
    ibp_coeffs,
)
from .besseluniform import (
    BesselKind,
    eval_bessel_uniform,
    exact_half_integer_K,
    gen_uk,
    gen_vk,
)
from .elementary import eval_elementary_neg, eval_elementary_pos
from .errors import ConvergenceError, DomainError
from .exact import (
    derivative_check,
    eval_exact_sum,
    eval_recurrence_n,
    kummer_split,
    pochhammer,
    recurrence_mu_residual,
)
from .precision import (
    GammaStarCoeffs,
    Precision,
    default_precision,
    gamma_real,
    gamma_star_series,
)
from .ratpoly import RationalPoly
from .reports import EvalReport, Method, PolyParams
from .saddle import (
    ElementaryCoeffs,
    ElementaryKind,
    PFactor,
    SaddleGeometry,
    abc_coeffs,
    fk_coeffs,
    revert_mapping,
    saddle_geometry,
)
from .scaled import ScaledComplex, normalize, to_decimal_string
from .series import TruncatedSeries
from .simple import LaguerreCoeffs, eval_simple, laguerre_coeffs, phi_pochhammer_ladder
from .sweep import evaluate, run_sweep
from .table import compute_table1

__all__ = [
    "__version__",
    "BesselKind",
    "BesselSource",
    "BesselTypeCoeffs",
    "ConvergenceError",
    "DomainError",
    "ElementaryCoeffs",
    "ElementaryKind",
    "EvalReport",
    "GammaStarCoeffs",
    "LaguerreCoeffs",
    "Method",
    "PFactor",
    "PolyParams",
    "Precision",
    "RationalPoly",
    "SaddleGeometry",
    "ScaledComplex",
    "TruncatedSeries",
    "abc_coeffs",
    "compute_table1",
    "confluent_interp",
    "default_precision",
    "derivative_check",
    "eval_bessel_type",
    "eval_bessel_uniform",
    "eval_elementary_neg",
    "eval_elementary_pos",
    "eval_exact_sum",
    "eval_recurrence_n",
    "eval_simple",
    "evaluate",
    "exact_half_integer_K",
    "fk_coeffs",
    "gamma_real",
    "gamma_star_series",
    "gen_uk",
    "gen_vk",
    "ibp_coeffs",
    "kummer_split",
    "laguerre_coeffs",
    "normalize",
    "phi_pochhammer_ladder",
    "pochhammer",
    "recurrence_mu_residual",
    "revert_mapping",
    "run_sweep",
    "saddle_geometry",
    "to_decimal_string",
]
