"""Bessel-type expansion: coefficients, turning-point anchors, global validity."""

import cmath

import pytest

from gbpoly.besseltype import (
    BesselSource,
    confluent_interp,
    eval_bessel_type,
    eval_bessel_type_mu_neg1_closed,
    ibp_coeffs,
)
from gbpoly.elementary import elementary_pos_mp, eval_elementary_pos
from gbpoly.errors import DomainError
from gbpoly.exact import exact_sum_mp
from gbpoly.precision import Precision
from gbpoly.reports import PolyParams
from gbpoly.series import TruncatedSeries

P60 = Precision(60)


def oracle_at_scaled(prec, n, mu, z):
    ctx = prec.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    val, _, _ = exact_sum_mp(prec, n, mu, 1 / (nu * prec.mpc(z)))
    return val


def rel(a, b):
    return float(abs(a - b) / abs(b))


# ---- coefficient families -----------------------------------------------


def test_mu0_collapses_to_unit_coefficients():
    for z in (0.7, 2.0, 1 + 1j):
        c = ibp_coeffs(z, 0.0, 4)
        assert c.C[0] == 1
        assert all(x == 0 for x in c.C[1:])
        assert all(x == 0 for x in c.D)


@pytest.mark.parametrize(
    "z", [0.7, 2 + 1j, 0.2, 5.0, cmath.exp(1j * 0.9)]
)
def test_mu_minus1_closed_forms(z):
    c = ibp_coeffs(z, -1.0, 4)
    for k in range(5):
        want_c = (z - 1) / 2**k
        want_d = -z / 2**k
        assert abs(c.C[k] - want_c) <= 1e-12 * max(1.0, abs(want_c))
        assert abs(c.D[k] - want_d) <= 1e-12 * max(1.0, abs(want_d))


def test_mu_minus1_example_values():
    c = ibp_coeffs(2.0, -1.0, 3)
    assert [x.real for x in c.C] == pytest.approx([1, 0.5, 0.25, 0.125], abs=1e-13)
    assert [x.real for x in c.D] == pytest.approx([-2, -1, -0.5, -0.25], abs=1e-13)


def test_turning_point_anchors():
    """Confluent values at z = i against the printed closed forms."""
    mu = 4.25
    c = ibp_coeffs(1j, mu, 1)
    assert c.confluent
    c0 = (2**-0.5 * cmath.exp(-0.75j * cmath.pi)) ** mu
    c1 = (1 - 1j) * mu * (mu - 1) * (-2 * mu + 1 + 3j) * c0 / 24
    d0 = 0.5 * (1 - 1j) * mu * c0
    d1 = -1j * mu**2 * (mu - 1) * (-mu + 2 + 3j) * c0 / 24
    assert abs(c.C[0] - c0) <= 1e-12 * abs(c0)
    assert abs(c.D[0] - d0) <= 1e-12 * abs(d0)
    assert abs(c.C[1] - c1) <= 1e-9 * abs(c1)
    assert abs(c.D[1] - d1) <= 1e-9 * abs(d1)


def test_confluent_interp_identities():
    s0 = -(1 + 1j) / 2
    # constant function
    f = TruncatedSeries(s0, [3.5 + 0j, 0j, 0j])
    a, b = confluent_interp(f, s0)
    assert a == 3.5 and b == 0
    # s^mu germ: interpolation reproduces the value at the node
    mu = 4.25
    val = s0**mu
    der = mu * s0 ** (mu - 1)
    f = TruncatedSeries(s0, [val, der, 0j])
    a, b = confluent_interp(f, s0)
    assert abs(a + b * s0 - val) <= 1e-14 * abs(val)


def test_interpolation_residual_invariant():
    _, states = ibp_coeffs(1.3, 4.25, 4, collect_states=True)
    assert len(states) == 5
    for st in states:
        assert st.interp_residual <= 1e-10


def test_continuity_across_confluent_switch():
    """No jump when the scheme switches to the merged-saddle path.

    Separations 2*tau and tau/2 around tau = 1e-6 (measured jump 9e-12)."""
    tau = 1e-6
    z1 = 1j * (1 + (2 * tau) ** 2 / 2)
    z2 = 1j * (1 + (tau / 2) ** 2 / 2)
    c1 = ibp_coeffs(z1, 4.25, 4)
    c2 = ibp_coeffs(z2, 4.25, 4)
    assert not c1.confluent and c2.confluent
    for a, b in zip(c1.C + c1.D, c2.C + c2.D):
        assert abs(a - b) <= 1e-6 * max(1.0, abs(a))


def test_real_inputs_real_coefficients():
    for z in (0.3, 1.0, 2.0):
        for mu in (2.0, 4.25, -0.3):
            c = ibp_coeffs(z, mu, 4)
            for v in list(c.C) + list(c.D):
                assert abs(v.imag) <= 1e-12 * max(1.0, abs(v.real))


def test_series_length_guard():
    with pytest.raises(DomainError):
        ibp_coeffs(1.0, 1.0, 4, L=10)
    with pytest.raises(DomainError):
        ibp_coeffs(0.0, 1.0, 4)


# ---- evaluation ----------------------------------------------------------


def test_mu0_identity_reduction():
    """mu=0 collapses to the exact closed form (arithmetic noise only)."""
    r = eval_bessel_type(PolyParams(n=30, mu=0.0, z=1.4), K=4, precision=P60)
    want = oracle_at_scaled(P60, 30, 0.0, 1.4)
    assert rel(r.value.to_mpmath(P60.ctx), want) <= 1e-13


def test_mu_minus1_truncated_and_closed_sum():
    n, z = 30, 0.9
    # truncated at K=4: the geometric tail (1/(2 nu))^5 is 1.18e-9
    r = eval_bessel_type(PolyParams(n=n, mu=-1.0, z=z), K=4, precision=P60)
    want = oracle_at_scaled(P60, n, -1.0, z)
    assert rel(r.value.to_mpmath(P60.ctx), want) < 2.5e-9
    # closed geometric sums: exact up to rounding
    closed = eval_bessel_type_mu_neg1_closed(n, z, P60)
    assert rel(closed.to_mpmath(P60.ctx), want) < 1e-12


def test_mu_minus1_closed_sum_vs_order_recurrence_route():
    """Cross-check through the order recurrence linking mu = -1, 0, 1."""
    n, z = 30, 0.9
    ctx = P60.ctx
    nu = ctx.mpf(n) + ctx.mpf(1) / 2
    zeta = 1 / (nu * ctx.mpf(z))
    y0, _, _ = exact_sum_mp(P60, n, 0.0, zeta)
    y1, _, _ = exact_sum_mp(P60, n, 1.0, zeta)
    y_m1 = zeta / 2 * ((n + 1) * y1 - (2 * n + 1 - 2 / zeta) * y0)
    closed = eval_bessel_type_mu_neg1_closed(n, z, P60).to_mpmath(ctx)
    assert rel(closed, y_m1) < 1e-12


def test_general_mu_against_oracle_global_sweep():
    """Uniform validity: both sides of the turning point, sector edges."""
    pts = [0.2, 1.0, 5.0, cmath.exp(1j * cmath.pi / 4), cmath.exp(1j * 0.49 * cmath.pi),
           0.999j, 1.001j]
    for z in pts:
        r = eval_bessel_type(PolyParams(n=100, mu=4.25, z=z), K=4, precision=P60)
        want = oracle_at_scaled(P60, 100, 4.25, z)
        assert rel(r.value.to_mpmath(P60.ctx), want) <= 1e-6, f"z={z}"


def test_near_turning_point_beats_sector_expansion():
    """On |1+z^2| in [1e-3, 1e-1] this expansion stays accurate while the
    sector form refuses (phase at the margin) or degrades past 1e-2."""
    ring = [1j * (1 + 5e-4), 1j * (1 - 5e-4), 1j * (1 + 5e-3), 1j * (1 - 5e-3),
            1j * (1 + 4.8e-2), 1j * (1 - 4.8e-2),
            0.999 * cmath.exp(1j * (cmath.pi / 2 - 0.01))]
    for z in ring:
        assert 9e-4 <= abs(1 + z * z) <= 1.1e-1
        want = oracle_at_scaled(P60, 60, 4.25, z)
        r = eval_bessel_type(PolyParams(n=60, mu=4.25, z=z), K=3, precision=P60)
        assert rel(r.value.to_mpmath(P60.ctx), want) <= 1e-4, f"z={z}"
        try:
            eval_elementary_pos(PolyParams(n=60, mu=4.25, z=z), 4, P60)
            refused = False
        except DomainError:
            refused = True
        if not refused:
            v2, _, _ = elementary_pos_mp(P60, 60, 4.25, z, K=4)
            assert rel(v2, want) > 1e-2
        else:
            # the unguarded kernel confirms the breakdown the guard prevents
            v2, _, _ = elementary_pos_mp(P60, 60, 4.25, z, K=4)
            assert rel(v2, want) > 1e-2


def test_real_output_for_real_inputs():
    r = eval_bessel_type(PolyParams(n=60, mu=4.25, z=1.7), K=4, precision=P60)
    v = r.value.to_mpmath(P60.ctx)
    assert float(abs(P60.ctx.im(v))) <= 1e-12 * float(abs(P60.ctx.re(v)))


def test_uniform_expansion_source():
    """Swapping the exact Bessel source for the uniform expansions keeps
    the result within their own truncation error."""
    r = eval_bessel_type(
        PolyParams(n=60, mu=4.25, z=1.4),
        K=4,
        bessel_source=BesselSource.UNIFORM_EXPANSION,
        precision=P60,
    )
    want = oracle_at_scaled(P60, 60, 4.25, 1.4)
    assert rel(r.value.to_mpmath(P60.ctx), want) <= 1e-8


def test_domain_guards():
    with pytest.raises(DomainError):
        eval_bessel_type(PolyParams(n=2, mu=1.0, z=1.0), K=3, precision=P60)
    with pytest.raises(DomainError):
        eval_bessel_type(PolyParams(n=30, mu=-35.0, z=1.0), K=3, precision=P60)


def test_report_notes_mark_confluence():
    r = eval_bessel_type(PolyParams(n=40, mu=2.5, z=1j), K=3, precision=P60)
    assert "confluent" in r.notes
    want = oracle_at_scaled(P60, 40, 2.5, 1j)
    assert rel(r.value.to_mpmath(P60.ctx), want) <= 1e-5
