"""Scaled-complex arithmetic and decimal rendering."""

import math
import random

import pytest

from gbpoly.precision import Precision
from gbpoly.scaled import ScaledComplex, normalize, parse_decimal, to_decimal_string


def test_normalize_power_of_two_rescale():
    x = normalize(6 + 0j, 0)
    assert x.mantissa == 1.5 + 0j
    assert x.exp2 == 2


def test_normalize_canonical_zero():
    x = normalize(0j, 77)
    assert x.mantissa == 0j
    assert x.exp2 == 0


def test_normalize_complex_components():
    x = normalize(0.3 + 0.4j, 10)
    assert x.mantissa == pytest.approx(1.2 + 1.6j)
    assert x.exp2 == 8


def test_normalize_idempotent_bit_exact():
    rng = random.Random(7)
    for _ in range(500):
        m = complex(rng.uniform(-1e8, 1e8), rng.uniform(-1e8, 1e8))
        e = rng.randint(-900, 900)
        a = normalize(m, e)
        b = normalize(a.mantissa, a.exp2)
        assert (a.mantissa, a.exp2) == (b.mantissa, b.exp2)


def test_invariant_band():
    rng = random.Random(11)
    for _ in range(500):
        x = normalize(complex(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.randint(-50, 50))
        if x.mantissa == 0:
            assert x.exp2 == 0
            continue
        peak = max(abs(x.mantissa.real), abs(x.mantissa.imag))
        assert 1.0 <= peak < 2.0


def test_mul_agrees_with_context_product():
    prec = Precision(40)
    rng = random.Random(3)
    for _ in range(300):
        a = normalize(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.randint(-400, 400))
        b = normalize(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.randint(-400, 400))
        if a.is_zero or b.is_zero:
            continue
        got = (a * b).to_mpmath(prec.ctx)
        want = a.to_mpmath(prec.ctx) * b.to_mpmath(prec.ctx)
        assert float(abs(got - want) / abs(want)) < 1e-14


def test_add_div_pow():
    a = ScaledComplex.from_number(3 + 4j)
    b = ScaledComplex.from_number(1 - 2j)
    assert (a + b).to_complex() == pytest.approx(4 + 2j)
    assert (a - b).to_complex() == pytest.approx(2 + 6j)
    assert (a / b).to_complex() == pytest.approx((3 + 4j) / (1 - 2j))
    assert (a**3).to_complex() == pytest.approx((3 + 4j) ** 3)
    assert (a**0).to_complex() == 1
    assert (a**-2).to_complex() == pytest.approx((3 + 4j) ** -2)


def test_add_far_apart_magnitudes():
    big = normalize(1.5 + 0j, 400)
    small = normalize(1.5 + 0j, 0)
    assert big + small == big


def test_huge_magnitudes_survive():
    # magnitudes far beyond double range
    x = normalize(1.2 + 0j, 5000) * normalize(1.9 + 0j, 4000)
    assert x.exp2 > 8000
    assert x.log10_abs() == pytest.approx(9000 * math.log10(2) + math.log10(2.28), rel=1e-12)


def test_decimal_string_examples():
    prec = Precision(40)
    v = prec.ctx.mpf(10) ** 130 * prec.ctx.mpf("0.5131")
    x = ScaledComplex.from_mpmath(v, prec.ctx)
    assert to_decimal_string(x, 4) == "0.5131e130"
    assert to_decimal_string(ScaledComplex.from_number(1), 4) == "0.1000e1"
    v2 = prec.ctx.mpf("0.4232") * prec.ctx.mpf(10) ** 34
    assert to_decimal_string(ScaledComplex.from_mpmath(v2, prec.ctx), 4) == "0.4232e34"


def test_decimal_string_negative_and_small():
    assert to_decimal_string(ScaledComplex.from_number(-1), 4) == "-0.1000e1"
    assert to_decimal_string(ScaledComplex.from_number(0.00125), 3) == "0.125e-2"
    assert to_decimal_string(ScaledComplex.from_number(0), 4) == "0.0000e0"


def test_decimal_string_complex_renders_both():
    s = to_decimal_string(ScaledComplex.from_number(1 + 2j), 4)
    assert s == "0.1000e1+0.2000e1i"
    s = to_decimal_string(ScaledComplex.from_number(1 - 2j), 4)
    assert s == "0.1000e1-0.2000e1i"


def test_decimal_round_trip_many():
    rng = random.Random(20260809)
    digits = 10
    for _ in range(10_000):
        x = normalize(
            complex(rng.uniform(-2, 2), rng.uniform(-2, 2) if rng.random() < 0.3 else 0.0),
            rng.randint(-300, 300),
        )
        if x.is_zero:
            continue
        s = to_decimal_string(x, digits)
        back = parse_decimal(s)
        want = x.to_complex()
        # agreement within one unit of the last printed digit
        assert abs(back - want) <= 10.0 ** (x.log10_abs() - digits + 1.01)


def test_rounding_half_even_boundary():
    # 0.99995 rounds up and bumps the exponent
    x = ScaledComplex.from_number(0.999951)
    assert to_decimal_string(x, 4) == "0.1000e1"
