"""Precision contexts and gamma utilities."""

from fractions import Fraction

import pytest

from gbpoly.errors import DomainError
from gbpoly.precision import (
    Precision,
    gamma_real,
    gamma_star_poly,
    gamma_star_series,
    gamma_star_value,
)


def test_contexts_are_isolated():
    a = Precision(30)
    b = Precision(80)
    x = a.ctx.mpf(2)
    y = b.ctx.mpf(2)
    assert a.ctx.dps == 30 and b.ctx.dps == 80
    # computing in one context leaves the other untouched
    _ = b.ctx.sqrt(y)
    assert len(str(a.ctx.sqrt(x))) < len(str(b.ctx.sqrt(y)))


def test_gamma_real_integers():
    prec = Precision(50)
    assert gamma_real(1, prec) == 1
    assert gamma_real(5, prec) == 24


def test_gamma_real_half_integer_via_duplication():
    # independent route: Gamma(1.5) = 0.5 * Gamma(0.5) = sqrt(pi)/2
    prec = Precision(50)
    got = gamma_real(1.5, prec)
    want = prec.ctx.sqrt(prec.ctx.pi) / 2
    assert float(abs(got - want) / want) < 1e-45
    assert float(got) == pytest.approx(0.8862269255, abs=1e-10)


def test_gamma_real_rejects_nonpositive():
    with pytest.raises(DomainError):
        gamma_real(0, Precision(30))
    with pytest.raises(DomainError):
        gamma_real(-2.5, Precision(30))


def test_gamma_functional_equation_grid():
    prec = Precision(60)
    tol = 10.0 ** (5 - prec.dps)
    x = 0.25
    while x <= 10.0:
        lhs = gamma_real(x + 1, prec)
        rhs = prec.ctx.mpf(x) * gamma_real(x, prec)
        assert float(abs(lhs - rhs) / abs(rhs)) <= tol
        x += 0.25


def test_gamma_star_k0_is_one():
    for alpha in (0.5, 1.0, 4.75):
        assert gamma_star_series(alpha, 0).coeffs == (1.0,)


def test_gamma_star_k1_polynomial():
    # (-1 + 12 mu^2)/24 at mu = alpha - 1/2
    g = gamma_star_series(4.25 + 0.5, 1)
    assert g.coeffs[1] == pytest.approx((-1 + 12 * 4.25**2) / 24, rel=1e-15)
    g0 = gamma_star_series(0.5, 1)
    assert g0.coeffs[1] == pytest.approx(-1 / 24, rel=1e-15)


def test_gamma_star_exact_fractions():
    # exact rational values at mu in {0, 1, 17/4}
    assert gamma_star_value(1, Fraction(0)) == Fraction(-1, 24)
    assert gamma_star_value(1, Fraction(1)) == Fraction(11, 24)
    assert gamma_star_value(1, Fraction(17, 4)) == Fraction(863, 96)
    assert gamma_star_value(2, Fraction(0)) == Fraction(1, 1152)
    assert gamma_star_value(3, Fraction(0)) == Fraction(1003, 414720)
    assert gamma_star_value(4, Fraction(0)) == Fraction(-4027, 39813120)


def test_gamma_star_matches_gamma_asymptotics():
    """The tabulated polynomials reproduce gstar = Gamma(v+a)/(sqrt(2pi) v^(v+a-1/2) e^-v)."""
    prec = Precision(60)
    ctx = prec.ctx
    for mu in (0.0, 1.0, 4.25):
        alpha = mu + 0.5
        for v in (200, 500):
            vv = ctx.mpf(v)
            exact = ctx.gamma(vv + alpha) / (
                ctx.sqrt(2 * ctx.pi) * vv ** (vv + alpha - ctx.mpf("0.5")) * ctx.exp(-vv)
            )
            mu_frac = Fraction(mu).limit_denominator()
            series = ctx.mpf(0)
            for k in range(5):
                g = gamma_star_value(k, mu_frac)
                series += ctx.mpf(g.numerator) / g.denominator / vv**k
            # truncation error ~ gamma_5 / v^5
            assert float(abs(exact - series)) < 50.0 * float(vv) ** -5


def test_gamma_star_order_cap():
    with pytest.raises(ValueError):
        gamma_star_series(0.5, 5)
    with pytest.raises(ValueError):
        gamma_star_series(0.5, -1)
    with pytest.raises(ValueError):
        gamma_star_poly(7)
