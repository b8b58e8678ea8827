from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shilov.core import (
    INF,
    LogValue,
    ParseError,
    Polynomial,
    fmt_rational,
    parse_polynomial,
    parse_rational,
    split_variables,
    value_max,
)
from strategies import polynomials

XY = ["x", "y"]


class TestLogValue:
    def test_order_is_value_order(self):
        assert LogValue(1) < LogValue(Fraction(1, 2)) < LogValue.one()
        assert LogValue.zero() < LogValue(100)

    def test_arithmetic(self):
        assert LogValue(Fraction(1, 2)) * LogValue(Fraction(1, 3)) == LogValue(Fraction(5, 6))
        assert LogValue(1) ** 3 == LogValue(3)
        assert LogValue(1).root(2) == LogValue(Fraction(1, 2))
        assert (LogValue.zero() * LogValue(-5)).is_zero

    def test_text_and_json(self):
        assert str(LogValue(Fraction(1, 2))) == "2^(-1/2)"
        assert str(LogValue(-1)) == "2^(1)"
        assert str(LogValue.zero()) == "0"
        assert str(LogValue.one()) == "1"
        assert LogValue(Fraction(7, 6)).to_json() == {"log2_exponent": "7/6"}
        assert LogValue.zero().to_json() == {"log2_exponent": "inf"}

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            LogValue(0.5)

    def test_value_max_empty_is_zero(self):
        assert value_max([]) == LogValue.zero()

    @given(st.fractions(max_denominator=50), st.integers(1, 9))
    def test_json_roundtrip_and_root(self, q, k):
        v = LogValue(q)
        assert LogValue.from_json(v.to_json()) == v
        assert v.root(k) ** k == v


def test_rationals():
    assert fmt_rational(Fraction(7, 6)) == "7/6"
    assert fmt_rational(Fraction(4, 2)) == "2"
    assert fmt_rational(INF) == "inf"
    assert parse_rational("-3/9") == Fraction(-1, 3)
    assert parse_rational("inf") == INF


class TestParsing:
    def test_basic(self):
        p = parse_polynomial("x^2*y + 3", XY)
        assert dict(p.items()) == {(2, 1): 1, (0, 0): 3}

    def test_implicit_structure(self):
        p = parse_polynomial("(x + y)^2 - 2*x*y", XY)
        assert p == parse_polynomial("x^2 + y^2", XY)

    def test_rational_coefficients(self):
        assert parse_polynomial("3/2*x", XY).coeff((1, 0)) == Fraction(3, 2)
        assert parse_polynomial("x/4", XY).coeff((1, 0)) == Fraction(1, 4)

    def test_laurent(self):
        p = parse_polynomial("x*y^-1", XY, laurent=True)
        assert p.exponents() == [(1, -1)]
        assert parse_polynomial("x/y", XY, laurent=True) == p
        assert p.format(XY) == "x*y^-1"

    def test_negative_exponent_rejected_outside_laurent(self):
        with pytest.raises(ParseError):
            parse_polynomial("y^-1", XY)

    @pytest.mark.parametrize(
        "text, pos",
        [("x^", 2), ("x + * y", 4), ("(x + y", 6), ("q", 0), ("", 0), ("x / y", 2)],
    )
    def test_error_positions(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_polynomial(text, XY)
        assert exc.value.position == pos

    def test_split_variables(self):
        assert split_variables("x, y ,z") == ["x", "y", "z"]


class TestPolynomial:
    def test_formatting(self):
        assert parse_polynomial("3 + y*x^2", XY).format(XY) == "x^2*y + 3"
        assert Polynomial.zero(2).format(XY) == "0"
        assert parse_polynomial("-x + 1", XY).format(XY) == "-x + 1"

    def test_negative_power_of_monomial(self):
        p = Polynomial.monomial((1, 2), 2) ** -2
        assert dict(p.items()) == {(-2, -4): Fraction(1, 4)}
        with pytest.raises(ValueError):
            (Polynomial.monomial((1, 0)) + 1) ** -1

    @given(polynomials(2), polynomials(2), polynomials(2))
    def test_ring_axioms(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == Polynomial.zero(2)

    @given(polynomials(2, lo=-3))
    def test_format_parse_roundtrip(self, f):
        assert parse_polynomial(f.format(XY), XY, laurent=True) == f

    @given(polynomials(2), st.integers(0, 4))
    def test_power_matches_repeated_product(self, f, k):
        p = Polynomial.constant(1, 2)
        for _ in range(k):
            p = p * f
        assert f ** k == p
