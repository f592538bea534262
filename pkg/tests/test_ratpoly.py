"""Exact rational polynomial arithmetic."""

from fractions import Fraction

from gbpoly.ratpoly import RationalPoly


def test_arithmetic():
    p = RationalPoly((1, 2))        # 1 + 2x
    q = RationalPoly((0, 0, 3))     # 3x^2
    assert (p + q).coeffs == (Fraction(1), Fraction(2), Fraction(3))
    assert (p * q).coeffs == (Fraction(0), Fraction(0), Fraction(3), Fraction(6))
    assert (p - p).coeffs == (Fraction(0),)
    assert p.shift(2).coeffs == (Fraction(0), Fraction(0), Fraction(1), Fraction(2))


def test_deriv_integrate_roundtrip():
    p = RationalPoly((Fraction(1, 3), Fraction(-5, 7), 0, Fraction(2)))
    q = p.integrate().deriv()
    assert q.coeffs == p.coeffs
    assert p.integrate().coeffs[0] == 0


def test_eval_types():
    p = RationalPoly((Fraction(1, 2), 0, Fraction(3, 4)))
    assert p(Fraction(2)) == Fraction(1, 2) + 3  # exact
    assert abs(p(2.0) - 3.5) < 1e-15
    assert p(1j) == (0.5 - 0.75)  # complex Horner


def test_text_rendering():
    u2 = RationalPoly((0, 0, Fraction(81, 1152), 0, Fraction(-462, 1152), 0, Fraction(385, 1152)))
    assert u2.text("t") == "(81*t^2-462*t^4+385*t^6)/1152"
    g1 = RationalPoly((Fraction(-1, 24), 0, Fraction(12, 24)))
    assert g1.text("mu") == "(-1+12*mu^2)/24"
    assert RationalPoly((1,)).text() == "1"
    assert RationalPoly((0,)).text() == "0"
    assert RationalPoly((0, 1)).text("t") == "t"
    assert RationalPoly((0, Fraction(1, 8), 0, Fraction(-5, 24))).text("t") == "(3*t-5*t^3)/24"


def test_trailing_zeros_trimmed():
    p = RationalPoly((1, 2, 0, 0))
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
