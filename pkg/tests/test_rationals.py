from fractions import Fraction

import pytest

from tcox.rationals import format_rational, format_vector, parse_integer, parse_rational, rational_vector


@pytest.mark.parametrize("text, value", [
    ("-3/2", Fraction(-3, 2)),
    ("−3/2", Fraction(-3, 2)),
    ("7", Fraction(7)),
    (" 1/2 ", Fraction(1, 2)),
    (4, Fraction(4)),
    (Fraction(2, 3), Fraction(2, 3)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "1/2/3", "", "abc", "1/0"])
def test_parse_rational_rejects_malformed_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_parse_rational_rejects_non_literals(bad):
    with pytest.raises(TypeError):
        parse_rational(bad)


def test_parse_integer():
    assert parse_integer("-4") == -4
    assert parse_integer("6/3") == 2
    with pytest.raises(ValueError):
        parse_integer("1/2")


def test_format_is_parseable():
    values = [Fraction(-3, 2), Fraction(0), Fraction(5), Fraction(1, 7)]
    assert format_vector(values) == ["-3/2", "0", "5", "1/7"]
    assert rational_vector(format_vector(values)) == tuple(values)
    assert format_rational(Fraction(-4, 2)) == "-2"
