"""Tests for exact scalars, weight vectors, and their text forms."""

import random
from fractions import Fraction

import pytest

from dulac.field import (
    IMAG,
    ONE,
    ZERO,
    Scalar,
    Weight,
    format_fraction,
    format_scalar,
    format_weight,
    parse_fraction,
    parse_scalar,
    parse_weight,
    weight_embed,
    weights_from_scalars,
)


def test_scalar_basic_arithmetic():
    a = Scalar(Fraction(1, 2), Fraction(3))
    b = Scalar(Fraction(-2), Fraction(1, 3))
    assert a + b == Scalar(Fraction(-3, 2), Fraction(10, 3))
    assert a - b == Scalar(Fraction(5, 2), Fraction(8, 3))
    # (1/2 + 3i)(-2 + i/3) = -1 - i - 6i + i^2 = -2 - 35i/6 ... compute directly
    prod = a * b
    assert prod.re == Fraction(1, 2) * Fraction(-2) - Fraction(3) * Fraction(1, 3)
    assert prod.im == Fraction(1, 2) * Fraction(1, 3) + Fraction(3) * Fraction(-2)


def test_scalar_division_and_inverse():
    a = Scalar(3, 4)
    assert a * a.inverse() == ONE
    assert (a / a) == ONE
    assert Scalar(1) / Scalar(0, 1) == Scalar(0, -1)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_scalar_powers():
    assert IMAG ** 2 == Scalar(-1)
    assert IMAG ** 0 == ONE
    assert Scalar(2) ** -2 == Scalar(Fraction(1, 4))
    assert (Scalar(1, 1) ** 2) == Scalar(0, 2)


def test_scalar_predicates():
    assert ZERO.is_zero()
    assert not ONE.is_zero()
    assert Scalar(5).is_rational()
    assert not IMAG.is_rational()
    assert Scalar(2, 3).conjugate() == Scalar(2, -3)
    assert Scalar(3, 4).magnitude_squared() == 25


def test_scalar_mixed_coercion():
    assert Scalar(2) + 1 == Scalar(3)
    assert 1 - Scalar(2) == Scalar(-1)
    assert Scalar(2) * Fraction(1, 2) == ONE
    assert 2 / Scalar(4) == Scalar(Fraction(1, 2))


def test_format_parse_scalar_round_trip():
    rng = random.Random(2024)
    for _ in range(300):
        re = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        im = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        s = Scalar(re, im) if rng.random() < 0.5 else Scalar(re)
        assert parse_scalar(format_scalar(s)) == s


def test_scalar_text_forms():
    assert format_scalar(Scalar(Fraction(3, 2))) == "3/2"
    assert format_scalar(Scalar(-2)) == "-2"
    assert format_scalar(Scalar(1, 1)) == "1+1*i"
    assert format_scalar(Scalar(0, Fraction(-1, 3))) == "0-1/3*i"
    assert parse_scalar("0+1*i") == IMAG
    assert parse_scalar("-5/4") == Scalar(Fraction(-5, 4))


def test_parse_scalar_rejects_garbage():
    for bad in ["", "1//2", "2+i", "1+2j", "x"]:
        with pytest.raises(ValueError):
            parse_scalar(bad)


def test_fraction_text_forms():
    assert format_fraction(Fraction(-7, 3)) == "-7/3"
    assert format_fraction(Fraction(4)) == "4"
    assert parse_fraction("9/6") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_fraction("1.5")


def test_weight_arithmetic():
    u = Weight((Fraction(1), Fraction(2)))
    v = Weight((Fraction(-1), Fraction(1)))
    assert u + v == Weight((0, 3))
    assert u - v == Weight((2, 1))
    assert u.scale(3) == Weight((3, 6))
    assert (-v) == Weight((1, -1))
    assert Weight.zero(2).is_zero()
    assert u.dim == 2


def test_weight_sort_key_is_total():
    rng = random.Random(5)
    ws = [Weight((Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))))
          for _ in range(50)]
    ordered = sorted(ws, key=lambda w: w.sort_key())
    for a, b in zip(ordered, ordered[1:]):
        assert a.sort_key() <= b.sort_key()


def test_weights_from_scalars_rational():
    weights, embedding = weights_from_scalars([Scalar(1), Scalar(3)])
    assert embedding == (ONE,)
    assert all(w.dim == 1 for w in weights)
    assert weight_embed(weights[0], embedding) == Scalar(1)
    assert weight_embed(weights[1], embedding) == Scalar(3)


def test_weights_from_scalars_gaussian():
    values = [Scalar(0, 1), Scalar(0, -1), Scalar(2)]
    weights, embedding = weights_from_scalars(values)
    assert embedding == (ONE, IMAG)
    assert [weight_embed(w, embedding) for w in weights] == values
    assert weights[0] + weights[1] == Weight.zero(2)


def test_format_parse_weight():
    w = Weight((Fraction(1, 2), Fraction(-3)))
    assert format_weight(w) == "[1/2, -3]"
    assert parse_weight(["1/2", "-3"]) == w
    scalar_like = Weight((Fraction(5),))
    assert format_weight(scalar_like) == "5"
