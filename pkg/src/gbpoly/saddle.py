"""Saddle-point machinery for the sector expansions.

The phase of the underlying Laplace integrals is

    phi(s) = 2 z s - ln s - ln(1+s),

with saddle points s_± = (1 - z ± sqrt(1+z^2)) / (2z).  Away from the
turning points z = ±i the positive saddle carries the expansion: the local
mapping phi(s) - phi(s_+) = (1/2) phi''(s_+) w^2 is reverted numerically to
a truncated series s(w), the integrand factors are composed onto it, and
the raw even-order coefficients are mixed with the gamma-correction series
to produce the final coefficient families

    A_k (positive-sector expansion of Y),
    B_k (exponentially small part U at reversed argument),
    C_k (regular part F at reversed argument).

Coefficient arithmetic is double-precision complex; magnitudes are O(1)
well inside the sector.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .precision import GAMMA_STAR_MAX_ORDER, gamma_star_poly
from .series import TruncatedSeries, pow_unit, revert

__all__ = [
    "SaddleGeometry",
    "saddle_geometry",
    "revert_mapping",
    "PFactor",
    "fk_coeffs",
    "ElementaryKind",
    "ElementaryCoeffs",
    "abc_coeffs",
    "DEFAULT_SECTOR_MARGIN",
    "TURNING_POINT_RADIUS",
]

DEFAULT_SECTOR_MARGIN = 0.05
TURNING_POINT_RADIUS = 1e-8
DEFAULT_REVERSION_LENGTH = 16


@dataclass(frozen=True)
class SaddleGeometry:
    """Derived quantities of the phase at a given z (principal branches)."""

    z: complex
    t: complex          # 1/sqrt(1+z^2)
    eta: complex        # sqrt(1+z^2) + log(z / (1 + sqrt(1+z^2)))
    s_plus: complex
    s_minus: complex
    phi2: complex       # phi''(s_plus)


def sector_phase_ok(z: complex, margin: float = 0.0) -> bool:
    return abs(cmath.phase(complex(z))) <= cmath.pi / 2 - margin


def saddle_geometry(z) -> SaddleGeometry:
    """Geometry at z; rejects the closed left half plane and z ~ ±i."""
    z = complex(z)
    if z == 0 or not sector_phase_ok(z):
        raise DomainError("saddle geometry needs |ph z| < pi/2")
    w = 1 + z * z
    if abs(w) < TURNING_POINT_RADIUS:
        raise DomainError(
            "coincident saddles near z = ±i; use the Bessel-type expansion"
        )
    r = cmath.sqrt(w)
    t = 1 / r
    eta = r + cmath.log(z / (1 + r))
    s_plus = (1 - z + r) / (2 * z)
    s_minus = (1 - z - r) / (2 * z)
    phi2 = 4 * z * z * r / (1 + r)
    return SaddleGeometry(z=z, t=t, eta=eta, s_plus=s_plus, s_minus=s_minus, phi2=phi2)


def revert_mapping(geom: SaddleGeometry, L: int = DEFAULT_REVERSION_LENGTH) -> TruncatedSeries:
    """s(w) = s_+ + w + s_2 w^2 + ... solving the quadratic-phase mapping.

    Series in w around 0 with constant term s_+; the linear coefficient is
    exactly 1 by the normalization of the mapping.
    """
    if L < 2:
        raise DomainError("reversion needs L >= 2")
    sp = geom.s_plus
    # phase increment as a series in u = s - s_+ ; the linear term is
    # phi'(s_+) = 0 and is dropped exactly rather than re-derived.
    c = [0j, 0j] + [
        (-1) ** m * (sp ** (-m) + (1 + sp) ** (-m)) / m for m in range(2, L + 3)
    ]
    inner = TruncatedSeries(0j, [0j] + [c[j + 2] / c[2] for j in range(1, L + 1)])
    root = pow_unit(inner, 0.5)
    w_of_u = TruncatedSeries(0j, [0j] + root.c[:L])
    u_of_w = revert(w_of_u)
    return TruncatedSeries(0j, [sp] + u_of_w.c[1:])


class PFactor(str, Enum):
    """Choice of the slowly varying integrand factor."""

    P_POS = "p_pos"    # s^mu / sqrt(s(1+s))
    P_NEG = "p_neg"    # (1+s)^mu / sqrt(s(1+s))
    Q_NEG = "q_neg"    # (1+s)^-mu / sqrt(s(1+s))


def _integrand_series(geom: SaddleGeometry, mu: float, variant: PFactor,
                      s_series: TruncatedSeries) -> TruncatedSeries:
    """f(w) = p(s(w)) * ds/dw as a truncated series in w."""
    sp = geom.s_plus
    L = s_series.order
    u = TruncatedSeries(0j, [0j] + s_series.c[1:])

    def shifted_pow(base, alpha):
        rel = u.scale(1 / base)
        return pow_unit(rel, alpha).scale(base ** alpha)

    inv_root = shifted_pow(sp, -0.5) * shifted_pow(1 + sp, -0.5)
    if variant is PFactor.P_POS:
        p = shifted_pow(sp, mu) * inv_root
    elif variant is PFactor.P_NEG:
        p = shifted_pow(1 + sp, mu) * inv_root
    else:
        p = shifted_pow(1 + sp, -mu) * inv_root
    ds_dw = TruncatedSeries(0j, [k * a for k, a in enumerate(s_series.c)][1:] + [0j])
    return (p * ds_dw).truncate(L)


def fk_coeffs(geom: SaddleGeometry, mu: float, variant: PFactor, K: int,
              L: int | None = None) -> list[complex]:
    """Raw normalized even-order coefficients of the Laplace expansion.

    Entry k is (1/2)_k 2^k f_{2k} / (phi''(s_+)^k f_0); entry 0 is 1.
    """
    if L is None:
        L = max(DEFAULT_REVERSION_LENGTH, 2 * K + 2)
    if K > L // 2 - 1:
        raise DomainError(f"series length {L} supports at most K = {L // 2 - 1}")
    s_series = revert_mapping(geom, L)
    f = _integrand_series(geom, mu, variant, s_series)
    out = [1 + 0j]
    scale = 1 + 0j
    for k in range(1, K + 1):
        scale *= (0.5 + (k - 1)) * 2 / geom.phi2
        out.append(scale * f.c[2 * k] / f.c[0])
    return out


class ElementaryKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class ElementaryCoeffs:
    kind: ElementaryKind
    mu: float
    z: complex
    values: tuple


def abc_coeffs(geom: SaddleGeometry, mu: float, K: int = GAMMA_STAR_MAX_ORDER,
               L: int | None = None) -> tuple[ElementaryCoeffs, ElementaryCoeffs, ElementaryCoeffs]:
    """A_0..A_K, B_0..B_K, C_0..C_K at the geometry's z.

    K is capped at the tabulated gamma-correction order; callers asking for
    more receive the capped count (the evaluators report the cap).
    """
    K = min(K, GAMMA_STAR_MAX_ORDER)
    f1 = fk_coeffs(geom, mu, PFactor.P_POS, K, L)
    f2 = fk_coeffs(geom, mu, PFactor.P_NEG, K, L)
    g = fk_coeffs(geom, mu, PFactor.Q_NEG, K, L)
    gam_mu = [float(gamma_star_poly(k)(mu)) for k in range(K + 1)]
    gam_half = [float(gamma_star_poly(k)(0.0)) for k in range(K + 1)]
    a: list[complex] = []
    b: list[complex] = []
    c: list[complex] = []
    for k in range(K + 1):
        a.append(f1[k] - sum(a[j] * gam_mu[k - j] for j in range(k)))
        b.append(f2[k] - sum(b[j] * gam_mu[k - j] for j in range(k)))
        c.append(sum((-1) ** j * g[j] * gam_half[k - j] for j in range(k + 1)))
    mk = lambda kind, vals: ElementaryCoeffs(kind=kind, mu=mu, z=geom.z, values=tuple(vals))
    return (
        mk(ElementaryKind.A, a),
        mk(ElementaryKind.B, b),
        mk(ElementaryKind.C, c),
    )
