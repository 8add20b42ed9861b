"""Tests for Stirling-Carlitz, Cauchy-Carlitz and Bernoulli-Carlitz numbers."""

import pytest

from src.arith.finite_field import make_field
from src.arith.ratfunc import RatFunc, parse_ratfunc
from src.carlitz.numbers import (
    CarlitzNumberTable,
    bernoulli_carlitz,
    bernoulli_carlitz_direct,
    bernoulli_carlitz_ht,
    carlitz_table,
    cauchy_carlitz,
    cauchy_carlitz_direct,
    cauchy_carlitz_ht,
    cauchy_carlitz_ht_terms,
    cauchy_carlitz_order,
    check_digit_vanishing,
    stirling_carlitz,
    stirling_carlitz_closed_form,
)
from src.carlitz.towers import CarlitzCache, digit_sum


@pytest.fixture
def cache3():
    return CarlitzCache(make_field(3))


@pytest.fixture
def cache2():
    return CarlitzCache(make_field(2))


def R(cache, text):
    return parse_ratfunc(cache.field, text)


class TestStirlingCarlitz:
    """Test cases for the Stirling-Carlitz numbers."""

    @pytest.mark.parametrize("n,k,expected", [(4, 2, 1), (6, 2, 1), (8, 2, 0)])
    def test_first_kind_values_f3(self, cache3, n, k, expected):
        """Test known first-kind values over F_3."""
        assert stirling_carlitz(cache3, "first", n, k) == expected

    @pytest.mark.parametrize("n,k,expected", [(4, 2, 2), (6, 2, 1), (8, 2, 0)])
    def test_second_kind_values_f3(self, cache3, n, k, expected):
        """Test known second-kind values over F_3."""
        assert stirling_carlitz(cache3, "second", n, k) == expected

    @pytest.mark.parametrize("kind", ["first", "second"])
    def test_boundary_rows(self, cache3, kind):
        """Test value(n, n) = 1, value(n, 0) = 0 for n >= 1 and value(n, m) = 0 for n < m."""
        assert stirling_carlitz(cache3, kind, 0, 0) == 1
        for n in range(1, 12):
            assert stirling_carlitz(cache3, kind, n, n) == 1
            assert stirling_carlitz(cache3, kind, n, 0) == 0
            assert stirling_carlitz(cache3, kind, n, n + 2) == 0

    @pytest.mark.parametrize("kind", ["first", "second"])
    @pytest.mark.parametrize("p", [2, 3])
    def test_closed_forms(self, kind, p):
        """Test the values at (r^a, r^b) against the D_i/L_j products."""
        cache = CarlitzCache(make_field(p))
        r = cache.r
        for a in range(3):
            for b in range(a + 1):
                expected = stirling_carlitz_closed_form(cache, kind, a, b)
                assert stirling_carlitz(cache, kind, r ** a, r ** b) == expected

    def test_closed_form_over_f3(self, cache3):
        """Test the values at (9, 3) are [2]/[1] = T^6 + T^4 + T^2 + 1 up to sign."""
        quotient = R(cache3, "T^6 + T^4 + T^2 + 1")

        assert stirling_carlitz(cache3, "second", 9, 3) == quotient
        assert stirling_carlitz(cache3, "first", 9, 3) == -quotient

    def test_orthogonality(self, cache2):
        """Test sum_k first(n, k) second(k, m) = delta_(n, m) over F_2."""
        for n in range(9):
            for m in range(n + 1):
                total = RatFunc.zero(cache2.field)
                for k in range(m, n + 1):
                    total = total + stirling_carlitz(cache2, "first", n, k) * stirling_carlitz(cache2, "second", k, m)
                assert total == (1 if n == m else 0)

    def test_digit_vanishing(self, cache3):
        """Test both kinds vanish when the digit sum of n exceeds that of m."""
        for n in range(1, 14):
            for m in range(1, n + 1):
                assert check_digit_vanishing(cache3, n, m)
                if digit_sum(n, 3) > digit_sum(m, 3):
                    assert stirling_carlitz(cache3, "first", n, m) == 0

    def test_argument_errors(self, cache3):
        """Test bad kinds and indices raise."""
        with pytest.raises(ValueError):
            stirling_carlitz(cache3, "third", 2, 1)
        with pytest.raises(ValueError):
            stirling_carlitz(cache3, "first", -1, 0)
        with pytest.raises(ValueError):
            stirling_carlitz_closed_form(cache3, "first", 1, 2)
        with pytest.raises(ValueError):
            check_digit_vanishing(cache3, 0, 1)


class TestCauchyCarlitz:
    """Test cases for CC_n."""

    def test_values_f3(self, cache3):
        """Test CC_0..CC_8 over F_3."""
        inv_bracket = R(cache3, "1 / (T^3 + 2*T)")
        expected = {
            0: RatFunc.one(cache3.field),
            1: RatFunc.zero(cache3.field),
            2: inv_bracket,
            3: RatFunc.zero(cache3.field),
            4: inv_bracket,
            6: inv_bracket,
            8: inv_bracket * R(cache3, "1 / (T^9 + 2*T)"),
        }
        for n, value in expected.items():
            assert cauchy_carlitz(cache3, n) == value

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
    def test_three_paths_agree(self, p, e):
        """Test the Stirling sum, the series coefficient and the Hasse-Teichmueller expansion."""
        cache = CarlitzCache(make_field(p, e))
        for n in range(1, 13):
            value = cauchy_carlitz(cache, n)
            assert cauchy_carlitz_direct(cache, n) == value
            assert cauchy_carlitz_ht(cache, n) == value

    def test_ht_terms_example(self):
        """Test the multisets for r = 3, n = 8: {2} with k = 1 and {1, 1, 1, 1} with k = 4."""
        assert cauchy_carlitz_ht_terms(3, 8) == {1: [((2, 1),)], 4: [((1, 4),)]}
        with pytest.raises(ValueError):
            cauchy_carlitz_ht_terms(3, 0)

    def test_support(self, cache3):
        """Test CC_n = 0 unless (r - 1) divides n."""
        for n in range(1, 20, 2):
            assert cauchy_carlitz(cache3, n) == 0


class TestBernoulliCarlitz:
    """Test cases for BC_n."""

    @pytest.mark.parametrize(
        "n,text",
        [
            (2, "2 / (T^3 + 2*T)"),
            (4, "1 / (T^3 + 2*T)"),
            (6, "2 / (T^3 + 2*T)"),
            (8, "1 / (T^6 + T^4 + T^2 + 1)"),
        ],
    )
    def test_values_f3(self, cache3, n, text):
        """Test BC_2..BC_8 over F_3 and their canonical strings."""
        value = bernoulli_carlitz(cache3, n)

        assert str(value) == text
        assert value == R(cache3, text)

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
    def test_three_paths_agree(self, p, e):
        """Test the Stirling sum, the series coefficient and the Hasse-Teichmueller expansion."""
        cache = CarlitzCache(make_field(p, e))
        for n in range(1, 13):
            value = bernoulli_carlitz(cache, n)
            assert bernoulli_carlitz_direct(cache, n) == value
            assert bernoulli_carlitz_ht(cache, n) == value

    def test_bc_zero(self, cache3):
        """Test BC_0 = 1."""
        assert bernoulli_carlitz(cache3, 0) == 1


class TestHigherOrder:
    """Test cases for CC_n^(m)."""

    def test_order_one_is_cc(self, cache3):
        """Test CC_n^(1) = CC_n."""
        for n in range(10):
            assert cauchy_carlitz_order(cache3, n, 1) == cauchy_carlitz(cache3, n)

    @pytest.mark.parametrize("m", [2, 3])
    def test_expansion_matches_series(self, cache3, m):
        """Test the M^(m) expansion against the m-th power of z/log_C(z)."""
        for n in range(1, 9):
            assert cauchy_carlitz_order(cache3, n, m, "expansion") == cauchy_carlitz_order(cache3, n, m, "direct")

    def test_arguments(self, cache3):
        """Test bad orders, methods and indices raise."""
        with pytest.raises(ValueError):
            cauchy_carlitz_order(cache3, 2, 0)
        with pytest.raises(ValueError):
            cauchy_carlitz_order(cache3, 2, 1, "guess")
        with pytest.raises(ValueError):
            cauchy_carlitz_order(cache3, 0, 2, "expansion")


class TestCarlitzTable:
    """Test cases for carlitz_table."""

    def test_cc_table(self, cache3):
        """Test one value per n and the last row CC_8."""
        table = carlitz_table(cache3, "CC", 8)

        assert isinstance(table, CarlitzNumberTable)
        assert len(table.values) == 9
        assert list(table.rows())[-1] == (8, 0, cauchy_carlitz(cache3, 8))
        assert table.check_boundaries() == []

    @pytest.mark.parametrize("kind", ["stf_C", "sts_C"])
    def test_triangular_tables(self, cache3, kind):
        """Test (n, k) keys for 0 <= k <= n and clean boundaries."""
        table = carlitz_table(cache3, kind, 6)

        assert table.is_triangular
        assert len(table.values) == 28
        assert table.check_boundaries() == []

    def test_boundary_violations_reported(self, cache3):
        """Test a broken diagonal is reported."""
        table = CarlitzNumberTable(kind="sts_C", r=3, values={(2, 2): RatFunc.zero(cache3.field)})

        assert table.check_boundaries() == ["diagonal (2, 2) is 0, expected 1"]

    def test_ccm_table_keeps_order(self, cache3):
        """Test the CCm table records its order."""
        table = carlitz_table(cache3, "CCm", 4, order=2)

        assert table.order == 2
        assert table.values[0] == 1

    def test_unknown_kind(self, cache3):
        """Test an unknown kind raises."""
        with pytest.raises(ValueError, match="Unknown Carlitz kind"):
            carlitz_table(cache3, "XX", 3)


@pytest.mark.slow
class TestCrossMethodBounds:
    """Test the independent paths agree up to the full bounds per field."""

    @pytest.mark.parametrize("p,max_n", [(2, 30), (3, 26), (5, 24)])
    def test_cauchy_carlitz_paths(self, p, max_n):
        """Test CC_n by the Stirling sum, the series coefficient and the expansion."""
        cache = CarlitzCache(make_field(p))
        for n in range(max_n + 1):
            value = cauchy_carlitz(cache, n)
            assert cauchy_carlitz_direct(cache, n) == value, n
            if n:
                assert cauchy_carlitz_ht(cache, n) == value, n

    @pytest.mark.parametrize("p,max_n", [(2, 30), (3, 26), (5, 24)])
    def test_bernoulli_carlitz_paths(self, p, max_n):
        """Test BC_n by the Stirling sum, the series coefficient and the expansion."""
        cache = CarlitzCache(make_field(p))
        for n in range(max_n + 1):
            value = bernoulli_carlitz(cache, n)
            assert bernoulli_carlitz_direct(cache, n) == value, n
            if n:
                assert bernoulli_carlitz_ht(cache, n) == value, n

    def test_support_over_f5(self):
        """Test CC_n = BC_n = 0 over F_5 unless 4 divides n."""
        cache = CarlitzCache(make_field(5))
        for n in range(1, 25):
            if n % 4:
                assert cauchy_carlitz(cache, n) == 0
                assert bernoulli_carlitz(cache, n) == 0
