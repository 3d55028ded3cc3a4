from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from galog.cli.parser import MvSyntaxError, parse_coefficients, parse_mv, print_mv
from galog.core import Multivector


def test_basic_expression():
    c = parse_coefficients("-2 + e1 + e23 - 3e123")
    assert c == [Fraction(-2), 1, 0, 0, 0, 0, 1, -3]


def test_fractions_products_and_pseudoscalar():
    c = parse_coefficients("9/10 - 1/3*e3 + 2 I + .5e1")
    assert c[0] == Fraction(9, 10) and c[3] == Fraction(-1, 3) and c[7] == 2 and c[1] == Fraction(1, 2)


def test_repeated_blades_sum():
    assert parse_coefficients("e1 + 2e1 - e1")[1] == 2


def test_whitespace_and_leading_plus():
    assert parse_coefficients("  + 1.5   *  e12 ")[4] == Fraction(3, 2)


@pytest.mark.parametrize("text,pos", [("e1 e2", 3), ("", 0), ("1 +", 3), ("+-e1", 1)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(MvSyntaxError) as exc:
        parse_coefficients(text)
    assert exc.value.pos == pos
    assert f"at position {pos}" in str(exc.value)


@pytest.mark.parametrize("text", ["e4", "1/0", "e21", "1e5", "2**e1", "e1*", "x"])
def test_rejected(text):
    with pytest.raises(MvSyntaxError):
        parse_coefficients(text)


def test_parse_mv_signature():
    a = parse_mv("1 + e1", "cl21")
    assert a.sig.value == "cl21" and a == Multivector([1, 1, 0, 0, 0, 0, 0, 0], "cl21")


def test_print_zero_and_plain():
    assert print_mv(Multivector.zero("cl30")) == "0"
    assert print_mv(Multivector([1, 0, -2.5, 0, 0, 0, 0, 1], "cl30")) == "1 - 2.5*e2 + 1*e123"


def test_print_small_values_positional():
    s = print_mv(Multivector([0, 1.23456789, -0.0000123456789, 0, 0, 0, 0, 0], "cl30"))
    assert "e-" not in s
    assert s == "1.23456789*e1 - 0.0000123456789*e2"


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=8, max_size=8))
def test_print_parse_print_fixed_point(c):
    a = Multivector(c, "cl03")
    once = print_mv(a)
    again = print_mv(parse_mv(once, "cl03"))
    assert once == again


@given(st.lists(st.integers(-1000, 1000), min_size=8, max_size=8))
def test_integer_round_trip_exact(c):
    a = Multivector(c, "cl30")
    assert np.array_equal(parse_mv(print_mv(a), "cl30").coeffs, a.coeffs)
