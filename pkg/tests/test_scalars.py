"""Exact scalar tower: rationals and the quadratic extension."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyderive import (
    QuadExt,
    RadicandMismatchError,
    format_scalar,
    parse_rational,
    parse_scalar,
    rational,
    scalar_sign,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
nonzero_rationals = rationals.filter(bool)


def quad(a, b, d=Fraction(2)) -> QuadExt:
    return QuadExt(Fraction(a), Fraction(b), d)


quads = st.builds(quad, rationals, rationals)
nonzero_quads = quads.filter(bool)


class TestRational:
    def test_gcd_reduction(self):
        assert rational(2, 4) == Fraction(1, 2)

    def test_sign_normalization(self):
        value = rational(3, -6)
        assert value == Fraction(-1, 2)
        assert value.denominator > 0

    def test_zero(self):
        value = rational(0, 7)
        assert value.numerator == 0 and value.denominator == 1

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rational(1, 0)

    def test_normalization_is_idempotent(self):
        value = rational(42, -56)
        assert rational(value.numerator, value.denominator) == value

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3", Fraction(3)),
            ("-7/2", Fraction(-7, 2)),
            ("0.25", Fraction(1, 4)),
            ("  1/3 ", Fraction(1, 3)),
            ("2e-3", Fraction(1, 500)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    def test_parse_rejects_floats(self):
        with pytest.raises(TypeError):
            parse_rational(0.25)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("one half")
        with pytest.raises(ValueError):
            parse_rational("1/0")

    def test_string_round_trip(self):
        for value in (Fraction(1, 2), Fraction(-3), Fraction(0)):
            assert parse_rational(format_scalar(value)) == value


class TestQuadExtArithmetic:
    def test_sqrt_squares_to_radicand(self):
        root = QuadExt.sqrt(2)
        assert root * root == Fraction(2)

    def test_multiplicative_identity(self):
        x = quad("1/3", "-5/2")
        assert QuadExt(1, 0, 2) * x == x

    def test_scale_root_squares_exactly(self):
        root = QuadExt.sqrt(Fraction(8, 5))
        assert root * root == Fraction(8, 5)

    def test_inverse_of_rational_value(self):
        assert QuadExt(2, 0, 3).inverse() == QuadExt(Fraction(1, 2), 0, 3)

    def test_inverse_of_pure_root(self):
        assert QuadExt.sqrt(2).inverse() == QuadExt(0, Fraction(1, 2), 2)

    def test_inverse_round_trip(self):
        x = quad(1, 1)
        assert x.inverse() == quad(-1, 1)
        assert x * x.inverse() == 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            QuadExt(0, 0, 2).inverse()

    def test_inverse_detects_square_radicand(self):
        with pytest.raises(ValueError, match="square of a rational"):
            QuadExt(2, 1, 4).inverse()

    def test_division(self):
        x, y = quad(1, 2), quad(3, "1/2")
        assert (x / y) * y == x
        assert (2 / QuadExt.sqrt(2)) == QuadExt.sqrt(2)

    def test_subtraction_and_negation(self):
        x, y = quad(5, -1), quad(2, 3)
        assert x - y == quad(3, -4)
        assert -(x - y) == y - x
        assert 1 - quad(0, 1) == quad(1, -1)

    def test_mixed_arithmetic_with_rationals(self):
        x = quad(1, 1)
        assert x + Fraction(1, 2) == quad("3/2", 1)
        assert Fraction(2) * x == quad(2, 2)
        assert x / 2 == quad("1/2", "1/2")

    def test_radicand_must_be_positive(self):
        with pytest.raises(ValueError):
            QuadExt(1, 1, -2)
        with pytest.raises(ValueError):
            QuadExt(1, 1, 0)


class TestQuadExtComparisons:
    def test_equality_needs_matching_radicand(self):
        with pytest.raises(RadicandMismatchError):
            QuadExt(1, 1, 2) == QuadExt(1, 1, 3)

    def test_rational_values_compare_across_radicands(self):
        assert QuadExt(3, 0, 2) == QuadExt(3, 0, 5)

    def test_arithmetic_rejects_mismatched_radicands(self):
        with pytest.raises(RadicandMismatchError):
            QuadExt(1, 1, 2) + QuadExt(1, 1, 3)
        with pytest.raises(RadicandMismatchError):
            QuadExt(1, 1, 2) * QuadExt(0, 1, 5)

    def test_equality_with_rationals(self):
        assert QuadExt(Fraction(3, 4), 0, 2) == Fraction(3, 4)
        assert QuadExt(Fraction(3, 4), 1, 2) != Fraction(3, 4)
        assert QuadExt(5, 0, 7) == 5

    def test_hash_agrees_with_rational_equality(self):
        assert hash(QuadExt(Fraction(3, 4), 0, 2)) == hash(Fraction(3, 4))

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (1, 1, 1),
            (-1, -1, -1),
            (0, 1, 1),
            (0, -2, -1),
            (3, 0, 1),
            (1, -1, -1),  # 1 - sqrt(2) < 0
            (-1, 1, 1),  # sqrt(2) - 1 > 0
            (3, -2, 1),  # 3 - 2*sqrt(2) > 0
            (0, 0, 0),
        ],
    )
    def test_sign(self, a, b, expected):
        assert quad(a, b).sign() == expected

    def test_sign_detects_square_radicand(self):
        with pytest.raises(ValueError, match="square of a rational"):
            QuadExt(2, -1, 4).sign()

    def test_float_conversion(self):
        assert float(quad(1, 1)) == pytest.approx(1 + math.sqrt(2))

    def test_str_forms(self):
        assert str(quad(0, 1)) == "sqrt(2)"
        assert str(quad("1/2", -1)) == "1/2-sqrt(2)"
        assert str(quad(3, 0)) == "3"
        assert str(QuadExt(0, Fraction(5, 8), Fraction(8, 5))) == "5/8*sqrt(8/5)"


class TestScalarHelpers:
    def test_scalar_sign_on_rationals(self):
        assert scalar_sign(Fraction(-2, 3)) == -1
        assert scalar_sign(0) == 0
        assert scalar_sign(5) == 1

    def test_format_and_parse_quadext(self):
        value = QuadExt(Fraction(1, 2), Fraction(-3), Fraction(8, 5))
        encoded = format_scalar(value)
        assert encoded == {"a": "1/2", "b": "-3", "d": "8/5"}
        assert parse_scalar(encoded) == value

    def test_parse_scalar_rejects_partial_objects(self):
        with pytest.raises(ValueError):
            parse_scalar({"a": "1", "b": "2"})


class TestFieldAxioms:
    @given(rationals, rationals, rationals)
    def test_rational_associativity_and_distributivity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z

    @given(nonzero_rationals)
    def test_rational_inverse(self, x):
        assert x * (1 / x) == 1

    @given(quads, quads, quads)
    def test_quadext_associativity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)

    @given(quads, quads, quads)
    def test_quadext_distributivity(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @given(nonzero_quads)
    def test_quadext_inverse(self, x):
        assert x * x.inverse() == 1

    @given(rationals, rationals)
    def test_embedding_commutes_with_arithmetic(self, p, q):
        def embed(value):
            return QuadExt.from_rational(value, Fraction(2))

        assert embed(p) + embed(q) == embed(p + q)
        assert embed(p) * embed(q) == embed(p * q)

    @given(quads)
    def test_reconstruction_is_stable(self, x):
        assert QuadExt(x.a, x.b, x.d) == x
