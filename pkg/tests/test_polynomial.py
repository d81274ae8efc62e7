import pytest
from hypothesis import given, strategies as st

from cleanring.errors import ParseError
from cleanring.polynomial import format_polynomial, parse_polynomial, trim


@pytest.mark.parametrize("text, coeffs", [
    ("x^2+x+1", [1, 1, 1]),
    ("x^2", [0, 0, 1]),
    ("x^1", [0, 1]),
    ("3", [3]),
    ("2x^3 + 4", [4, 0, 0, 2]),
    (" x ^ 2 + x ", [0, 1, 1]),
    ("x^2-x", [0, -1, 1]),
    ("-x+1", [1, -1]),
    ("2*x^2", [0, 0, 2]),
    ("x+x", [0, 2]),
])
def test_parse(text, coeffs):
    assert parse_polynomial(text) == coeffs


@pytest.mark.parametrize("text, column", [
    ("", 1), ("x^", 3), ("x++1", 3), ("x+", 3), ("2y", 2), ("x^2+1\n+ q", 3),
])
def test_parse_errors_carry_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.column == column


def test_multiline_error_reports_line():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x^2+1\n+ q")
    assert info.value.line == 2


def test_format():
    assert format_polynomial([1, 1, 1]) == "x^2+x+1"
    assert format_polynomial([0, -1, 1]) == "x^2-x"
    assert format_polynomial([0, 0, 0]) == "0"
    assert format_polynomial([-3]) == "-3"


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_format_then_parse_round_trips(coeffs):
    coeffs = trim(coeffs)
    text = format_polynomial(coeffs)
    if text == "0":
        assert coeffs == [0]
    else:
        assert parse_polynomial(text) == coeffs
