from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cauchydet.rational import as_rational, format_fraction, parse_fraction, rat


class TestRat:
    def test_reduces(self):
        assert rat(2, 4) == Fraction(1, 2)

    def test_sign_normalized(self):
        q = rat(3, -6)
        assert q == Fraction(-1, 2)
        assert q.denominator == 2

    def test_zero_canonical(self):
        q = rat(0, 7)
        assert q.numerator == 0 and q.denominator == 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError, match="denominator"):
            rat(1, 0)


class TestParse:
    @pytest.mark.parametrize(
        "text,num,den",
        [("3", 3, 1), ("-3", -3, 1), ("0", 0, 1), ("1/2", 1, 2), ("-7/3", -7, 3)],
    )
    def test_accepts_canonical(self, text, num, den):
        q = parse_fraction(text)
        assert (q.numerator, q.denominator) == (num, den)

    @pytest.mark.parametrize(
        "text",
        ["2/4", "3/1", "0/5", "-0", "+3", "03", "1/-2", "1 /2", " 3", "3 ", "", "1/0", "a", "1/2/3", "1.5"],
    )
    def test_rejects_non_canonical(self, text):
        with pytest.raises(ValueError):
            parse_fraction(text)

    def test_rejects_non_string(self):
        with pytest.raises(ValueError):
            parse_fraction(3)


class TestFormat:
    def test_integer_omits_denominator(self):
        assert format_fraction(Fraction(3)) == "3"

    def test_fraction_form(self):
        assert format_fraction(Fraction(-7, 3)) == "-7/3"

    @given(st.fractions())
    def test_round_trip(self, q):
        assert parse_fraction(format_fraction(q)) == q


class TestAsRational:
    def test_accepts_int_and_fraction(self):
        assert as_rational(5) == Fraction(5)
        assert as_rational(Fraction(1, 3)) == Fraction(1, 3)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            as_rational(0.1)


class TestFieldAxioms:
    # Exactness of the number type itself: the identities that floating
    # point breaks must hold bit-for-bit here.
    @given(st.fractions(), st.fractions())
    def test_add_then_subtract(self, a, b):
        assert (a + b) - b == a

    @given(st.fractions(), st.fractions().filter(lambda q: q != 0))
    def test_multiply_then_divide(self, a, b):
        assert (a * b) / b == a
