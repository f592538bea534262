"""Uniform modified-Bessel expansions and exact half-integer oracles."""

from fractions import Fraction

import pytest

from gbpoly.besseluniform import (
    BesselKind,
    bessel_uniform_mp,
    eval_bessel_uniform,
    exact_half_integer_K,
    gen_uk,
    gen_vk,
    half_integer_I_mp,
    half_integer_I_prime_mp,
    half_integer_K_mp,
    half_integer_K_prime_mp,
)
from gbpoly.errors import DomainError
from gbpoly.exact import exact_sum_mp
from gbpoly.precision import Precision
from gbpoly.ratpoly import RationalPoly

P60 = Precision(60)


def rel(a, b):
    return float(abs(a - b) / abs(b))


# ---- coefficient polynomials --------------------------------------------


def test_u_polynomials_exact():
    us = gen_uk(2)
    assert us[0] == RationalPoly((1,))
    assert us[1] == RationalPoly((0, Fraction(3, 24), 0, Fraction(-5, 24)))
    assert us[2] == RationalPoly(
        (0, 0, Fraction(81, 1152), 0, Fraction(-462, 1152), 0, Fraction(385, 1152))
    )


def test_v_polynomials_exact():
    vs = gen_vk(2)
    assert vs[0] == RationalPoly((1,))
    assert vs[1] == RationalPoly((0, Fraction(-9, 24), 0, Fraction(7, 24)))
    assert vs[2] == RationalPoly(
        (0, 0, Fraction(-135, 1152), 0, Fraction(594, 1152), 0, Fraction(-455, 1152))
    )


def test_degree_pattern():
    us, vs = gen_uk(8), gen_vk(8)
    for k in range(9):
        assert us[k].degree == 3 * k
        assert vs[k].degree == 3 * k


def test_uk_vanish_at_origin():
    for k, u in enumerate(gen_uk(6)):
        if k >= 1:
            assert u.coeffs[0] == 0


def test_denominator_pattern():
    assert gen_uk(2)[1].common_denominator() == 24
    assert gen_uk(2)[2].common_denominator() == 1152


# ---- exact half-integer forms -------------------------------------------


def test_half_integer_K_base_case():
    # order 1/2: sqrt(pi/(2x)) e^-x exactly
    ctx = P60.ctx
    for x in (0.5, 2.0, 10.0):
        got = half_integer_K_mp(P60, 0, x)
        want = ctx.sqrt(ctx.pi / (2 * ctx.mpf(x))) * ctx.exp(-x)
        assert rel(got, want) < 1e-55


def test_half_integer_K_order_three_halves():
    # K_{3/2}(2) = sqrt(pi/4) e^-2 (1 + 1/2)
    ctx = P60.ctx
    got = half_integer_K_mp(P60, 1, 2.0)
    want = ctx.sqrt(ctx.pi / 4) * ctx.exp(-2) * ctx.mpf("1.5")
    assert rel(got, want) < 1e-55


def test_half_integer_I_small_order_closed_form():
    # I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    ctx = P60.ctx
    for x in (0.7, 3.0, 20.0):
        got = half_integer_I_mp(P60, 0, x)
        want = ctx.sqrt(2 / (ctx.pi * ctx.mpf(x))) * ctx.sinh(x)
        assert rel(got, want) < 1e-50


def test_half_integer_I_resolves_small_values():
    """x far below the order: massive cancellation, absorbed internally."""
    ctx = P60.ctx
    got = half_integer_I_mp(P60, 40, 1.0)
    # independent route: ascending series of I at half-integer order
    nu = ctx.mpf(40) + ctx.mpf(1) / 2
    term = (ctx.mpf(1) / 2) ** nu / ctx.gamma(nu + 1)
    total = term
    for k in range(1, 60):
        term = term * (ctx.mpf(1) / 4) / (k * (nu + k))
        total += term
    assert rel(got, total) < 1e-40


def test_wronskian_of_exact_forms():
    """K I' - K' I = 1/x, an identity of the closed forms."""
    ctx = P60.ctx
    for n, x in ((5, 3.0), (40, 60.75), (20, 8.0)):
        k = half_integer_K_mp(P60, n, x)
        i = half_integer_I_mp(P60, n, x)
        kp = half_integer_K_prime_mp(P60, n, x)
        ip = half_integer_I_prime_mp(P60, n, x)
        resid = float(abs((k * ip - kp * i) - 1 / ctx.mpf(x)) * ctx.mpf(x))
        assert resid < 1e-50


def test_combination_identity_reversed_argument():
    """sqrt(2/(pi z)) e^(-1/z) ((-1)^n K + pi I) at 1/z equals Y(n,0;-z)."""
    ctx = P60.ctx
    n, z = 30, ctx.mpf("0.8")
    lhs = (
        ctx.sqrt(2 / (ctx.pi * z))
        * ctx.exp(-1 / z)
        * (
            ctx.mpf(-1) ** n * half_integer_K_mp(P60, n, 1 / z)
            + ctx.pi * half_integer_I_mp(P60, n, 1 / z)
        )
    )
    rhs, _, _ = exact_sum_mp(P60, n, 0.0, -z)
    assert rel(lhs, rhs) < 1e-9


def test_public_exact_K_wrapper():
    v = exact_half_integer_K(1, 2.0, P60)
    ctx = P60.ctx
    want = ctx.sqrt(ctx.pi / 4) * ctx.exp(-2) * ctx.mpf("1.5")
    assert rel(v.to_mpmath(ctx), want) < 1e-14


# ---- uniform expansions ---------------------------------------------------

NU, Z = 40.5, 1.5
X = NU * Z


@pytest.mark.parametrize(
    "kind,oracle_fn,tol",
    [
        (BesselKind.K, half_integer_K_mp, 1e-9),       # measured 5.1e-12
        (BesselKind.I, half_integer_I_mp, 1e-9),       # measured 1.6e-12
        (BesselKind.KPRIME, half_integer_K_prime_mp, 1e-9),  # 1.7e-11
        (BesselKind.IPRIME, half_integer_I_prime_mp, 1e-9),  # 1.3e-11
    ],
)
def test_uniform_expansions_vs_exact(kind, oracle_fn, tol):
    got = bessel_uniform_mp(P60, kind, NU, complex(Z), 4)
    want = oracle_fn(P60, 40, X)
    assert rel(got, want) < tol


def test_iprime_with_uk_would_fail():
    """Evidence for the coefficient choice in the I' expansion: swapping in
    u_k leaves a first-order defect (measured 4.8e-3 vs 1.3e-11)."""
    ctx = P60.ctx
    nu = ctx.mpf(NU)
    z = ctx.mpf(Z)
    r = ctx.sqrt(1 + z * z)
    eta = r + ctx.log(z / (1 + r))
    t = 1 / r
    quarter = (1 + z * z) ** ctx.mpf("0.25")
    wrong_sum = sum(
        complex(u(complex(t))) / float(nu) ** k for k, u in enumerate(gen_uk(4))
    )
    wrong = quarter / z * ctx.exp(nu * eta) / ctx.sqrt(2 * ctx.pi * nu) * P60.mpc(wrong_sum)
    want = half_integer_I_prime_mp(P60, 40, X)
    assert rel(wrong, want) > 1e-3


def test_uniform_wronskian_cross_check():
    """Wronskian residual of the four expansions ~ their truncation error."""
    ctx = P60.ctx
    k = bessel_uniform_mp(P60, BesselKind.K, NU, complex(Z), 4)
    i = bessel_uniform_mp(P60, BesselKind.I, NU, complex(Z), 4)
    kp = bessel_uniform_mp(P60, BesselKind.KPRIME, NU, complex(Z), 4)
    ip = bessel_uniform_mp(P60, BesselKind.IPRIME, NU, complex(Z), 4)
    resid = float(abs((k * ip - kp * i) - 1 / ctx.mpf(X)) * ctx.mpf(X))
    assert resid < 1e-7


def test_accuracy_improves_with_order():
    want = half_integer_K_mp(P60, 40, X)
    errs = []
    for K_order in range(5):
        got = bessel_uniform_mp(P60, BesselKind.K, NU, complex(Z), K_order)
        errs.append(rel(got, want))
    assert all(errs[i + 1] < errs[i] for i in range(4))


def test_eval_wrapper_and_guards():
    r = eval_bessel_uniform(BesselKind.K, NU, 1.5, 4, P60)
    want = half_integer_K_mp(P60, 40, X)
    assert rel(r.value.to_mpmath(P60.ctx), want) < 1e-9
    with pytest.raises(DomainError):
        eval_bessel_uniform(BesselKind.K, NU, -1.0, 4, P60)
    with pytest.raises(DomainError):
        eval_bessel_uniform(BesselKind.K, -2.0, 1.5, 4, P60)
