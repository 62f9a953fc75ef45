"""Truncated series arithmetic and truncation propagation."""

from fractions import Fraction

import pytest

from sextactic.series import SeriesError, TruncSeries


def ts(coeffs, trunc):
    return TruncSeries(coeffs, trunc)


class TestConstruction:
    def test_rejects_exponent_at_truncation(self):
        with pytest.raises(SeriesError):
            ts({5: 1}, 5)

    def test_rejects_negative_exponent(self):
        with pytest.raises(SeriesError):
            ts({-1: 1}, 5)

    def test_drops_zero_coefficients(self):
        assert ts({2: 0, 3: 1}, 5).coeffs == {3: 1}

    def test_valuation(self):
        assert ts({2: 1, 6: 1}, 8).valuation() == 2
        assert ts({}, 8).valuation() is None


class TestArithmetic:
    def test_mul_by_unit(self):
        a = ts({2: 1, 6: 1}, 9)
        one = ts({0: 1}, 9)
        assert (a * one).coeffs == {2: 1, 6: 1}

    def test_square_of_monomial(self):
        a = ts({3: 1}, 9)
        sq = a * a
        assert sq.coeffs == {6: 1}
        assert sq.trunc == 12  # known up to 3 + 9

    def test_unit_times_series(self):
        # y * z for a branch (t^3 : a t^5 : 1): the product is a t^5 + unknown
        a = Fraction(7, 2)
        y = ts({5: a}, 11)
        z = ts({0: 1}, 11)
        prod = y * z
        assert prod.coeffs == {5: a}
        assert prod.trunc == 11

    def test_add_truncates_to_min(self):
        a = ts({1: 1}, 5)
        b = ts({2: 1, 6: 1}, 8)
        c = a + b
        assert c.trunc == 5
        assert c.coeffs == {1: 1, 2: 1}

    def test_mul_truncation_rule(self):
        # product knowledge ends where a factor's unknown tail can interfere
        a = ts({2: 1}, 5)   # t^2 + O(t^5)
        b = ts({3: 1}, 10)  # t^3 + O(t^10)
        c = a * b
        assert c.trunc == min(5 + 3, 10 + 2)
        assert c.coeffs == {5: 1}

    def test_mul_with_unknown_factor(self):
        a = ts({}, 4)       # O(t^4)
        b = ts({1: 1}, 10)
        c = a * b
        assert c.coeffs == {}
        assert c.trunc == 4 + 1

    def test_scalar_ops(self):
        a = ts({2: 1}, 6)
        assert (3 * a).coeffs == {2: 3}
        assert (a - a).coeffs == {}
        assert (-a).coeffs == {2: -1}

    def test_cancellation_keeps_truncation(self):
        a = ts({1: 1, 3: 1}, 6)
        b = ts({1: 1}, 6)
        c = a - b
        assert c.valuation() == 3
        assert c.trunc == 6


class TestPrinting:
    def test_str(self):
        assert str(ts({2: 1, 6: -1}, 9)) == "t^2 - t^6 + O(t^9)"
        assert str(ts({}, 4)) == "O(t^4)"
        assert str(ts({0: Fraction(1, 2)}, 3)) == "1/2 + O(t^3)"
