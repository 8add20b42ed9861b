"""Tests for classical Stirling, Cauchy and Bernoulli numbers."""

from fractions import Fraction

import pytest

from src.classical.cauchy import (
    ClassicalTable,
    bernoulli_classical,
    cauchy_classical,
    cauchy_order_classical,
    classical_table,
    expm1_over_z,
    log1p_over_z,
    poly_cauchy,
    stirling_sum_identity_check,
)
from src.classical.stirling import stirling_classical, stirling_inversion_sum

CAUCHY = [
    Fraction(1),
    Fraction(1, 2),
    Fraction(-1, 6),
    Fraction(1, 4),
    Fraction(-19, 30),
    Fraction(9, 4),
    Fraction(-863, 84),
    Fraction(1375, 24),
]

# c_1^(3) .. c_8^(3)
CAUCHY_ORDER_3 = [
    Fraction(3, 2),
    Fraction(1),
    Fraction(0),
    Fraction(1, 10),
    Fraction(-1, 4),
    Fraction(16, 21),
    Fraction(-11, 4),
    Fraction(329, 30),
]


class TestStirling:
    """Test cases for classical Stirling numbers."""

    def test_values(self):
        """Test a few rows of both kinds."""
        assert stirling_classical("first", 4, 2) == 11
        assert stirling_classical("second", 4, 2) == 7
        assert stirling_classical("first", 5, 5) == 1
        assert stirling_classical("second", 3, 5) == 0

    def test_inversion(self):
        """Test both inversion sums give the Kronecker delta."""
        for n in range(10):
            for k in range(n + 1):
                expected = 1 if n == k else 0
                assert stirling_inversion_sum(n, k) == expected
                assert stirling_inversion_sum(n, k, first_outer=False) == expected

    def test_bad_arguments(self):
        """Test unknown kinds and negative indices raise."""
        with pytest.raises(ValueError):
            stirling_classical("third", 3, 1)
        with pytest.raises(ValueError):
            stirling_classical("first", -1, 0)


class TestCauchy:
    """Test cases for c_n and c_n^(m)."""

    def test_generating_series_heads(self):
        """Test the heads of log(1+z)/z and (e^z - 1)/z."""
        assert log1p_over_z(3).coeffs == (1, Fraction(-1, 2), Fraction(1, 3))
        assert expm1_over_z(3).coeffs == (1, Fraction(1, 2), Fraction(1, 6))

    def test_series_values(self):
        """Test c_0..c_7."""
        assert [cauchy_classical(n) for n in range(8)] == CAUCHY

    @pytest.mark.parametrize("method", ["compositions", "weighted", "stirling"])
    def test_closed_formulas(self, method):
        """Test every closed formula reproduces c_1..c_7."""
        assert [cauchy_classical(n, method) for n in range(1, 8)] == CAUCHY[1:]

    def test_order_three(self):
        """Test c_1^(3)..c_8^(3)."""
        assert [cauchy_order_classical(n, 3) for n in range(1, 9)] == CAUCHY_ORDER_3

    @pytest.mark.parametrize("method", ["compositions", "weighted", "stirling"])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_order_formulas(self, method, m):
        """Test each higher-order formula against the series."""
        for n in range(1, 8):
            assert cauchy_order_classical(n, m, method) == cauchy_order_classical(n, m)

    def test_order_one_is_cauchy(self):
        """Test c_n^(1) = c_n."""
        assert [cauchy_order_classical(n, 1) for n in range(8)] == CAUCHY

    def test_poly_cauchy_index_one(self):
        """Test poly-Cauchy numbers with k = 1 are the Cauchy numbers."""
        assert [poly_cauchy(n, 1) for n in range(8)] == CAUCHY

    def test_stirling_sum_identity(self):
        """Test the reciprocal-product sum against [[n+k, k]]."""
        for n in range(7):
            for k in range(1, 5):
                assert stirling_sum_identity_check(n, k)

    def test_bad_arguments(self):
        """Test unknown methods and out-of-range indices raise."""
        with pytest.raises(ValueError):
            cauchy_classical(3, "guess")
        with pytest.raises(ValueError):
            cauchy_classical(0, "compositions")
        with pytest.raises(ValueError):
            cauchy_order_classical(3, 0)
        with pytest.raises(ValueError):
            poly_cauchy(3, 0)


class TestBernoulli:
    """Test cases for the classical Bernoulli numbers."""

    def test_values(self):
        """Test B_0..B_6 with B_1 = -1/2."""
        expected = [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]

        assert [bernoulli_classical(n) for n in range(7)] == expected

    def test_methods_agree(self):
        """Test the Stirling formula against the series."""
        for n in range(15):
            assert bernoulli_classical(n, "stirling") == bernoulli_classical(n, "series")


class TestClassicalTable:
    """Test cases for classical_table."""

    def test_cauchy_table(self):
        """Test the Cauchy table rows."""
        table = classical_table("cauchy", 7)

        assert isinstance(table, ClassicalTable)
        assert [value for _, _, value in table.rows()] == CAUCHY

    def test_order_table(self):
        """Test the order is recorded and used."""
        table = classical_table("cauchy_m", 8, order=3)

        assert table.order == 3
        assert [table.values[n] for n in range(1, 9)] == CAUCHY_ORDER_3

    def test_stirling_tables(self):
        """Test triangular keys and boundary checks."""
        table = classical_table("stirling2", 5)

        assert table.values[(4, 2)] == 7
        assert len(table.values) == 21
        assert table.check_boundaries() == []

    def test_unknown_kind(self):
        """Test an unknown kind raises."""
        with pytest.raises(ValueError, match="Unknown classical kind"):
            classical_table("euler", 3)
