import math
from fractions import Fraction

import pytest

from fiolab.exceptions import InvalidExponentError
from fiolab.exponent import LebesgueExponent


def test_exponent_parse_and_methods() -> None:
    exponent = LebesgueExponent.parse("6")

    assert exponent.as_fraction() == Fraction(6)
    assert exponent.reciprocal() == Fraction(1, 6)
    assert exponent.as_float() == 6.0
    assert not exponent.is_infinite()
    assert str(exponent) == "6"
    assert repr(exponent) == "LebesgueExponent('6')"


def test_exponent_parses_decimals_fractions_and_infinity() -> None:
    assert LebesgueExponent.parse("1.25").as_fraction() == Fraction(5, 4)
    assert LebesgueExponent.parse(1.5).as_fraction() == Fraction(3, 2)
    assert LebesgueExponent.parse("10/3").as_fraction() == Fraction(10, 3)
    assert LebesgueExponent.parse(Fraction(4)).as_fraction() == Fraction(4)
    assert LebesgueExponent.parse("inf").is_infinite()
    assert LebesgueExponent.parse(math.inf).is_infinite()
    assert LebesgueExponent.infinity().reciprocal() == 0
    assert LebesgueExponent.infinity().as_float() == math.inf


def test_exponent_labels_are_file_name_safe() -> None:
    assert LebesgueExponent.parse("1.25").label() == "1.25"
    assert LebesgueExponent.parse("10/3").label() == "10-over-3"
    assert LebesgueExponent.infinity().label() == "inf"
    assert str(LebesgueExponent.parse("10/3")) == "10/3"


def test_exponent_equality_is_exact() -> None:
    assert LebesgueExponent.parse("1.5") == LebesgueExponent.parse("3/2")
    assert LebesgueExponent.parse("2") != LebesgueExponent.infinity()


def test_exponent_invalid_values() -> None:
    with pytest.raises(InvalidExponentError) as err:
        LebesgueExponent.parse("0.5")
    assert "p must be >= 1" in str(err.value)

    with pytest.raises(InvalidExponentError):
        LebesgueExponent.parse("abc")

    with pytest.raises(InvalidExponentError):
        LebesgueExponent.parse(math.nan)

    with pytest.raises(InvalidExponentError):
        LebesgueExponent.parse(-math.inf)

    with pytest.raises(InvalidExponentError):
        LebesgueExponent.parse(True)  # noqa: FBT003
