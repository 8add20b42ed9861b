"""Tests for modular binomials, multinomials, multiset enumeration and exact rationals."""

from fractions import Fraction
from math import comb

import pytest

from src.arith.compositions import group_by_size, iter_multisets, multiplicities, multiset_parts
from src.arith.lucas import binomial_mod_p, multinomial, multinomial_mod_p
from src.arith.rational import rational_arith, rational_parts, rational_to_latex


class TestLucas:
    """Test cases for binomials reduced mod p."""

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_matches_exact_binomial(self, p):
        """Test Lucas' theorem against math.comb."""
        for m in range(40):
            for n in range(m + 2):
                assert binomial_mod_p(m, n, p) == comb(m, n) % p

    def test_negative_arguments_rejected(self):
        """Test negative indices raise."""
        with pytest.raises(ValueError):
            binomial_mod_p(-1, 0, 3)

    def test_multinomials(self):
        """Test exact and reduced multinomials."""
        assert multinomial([2, 1]) == 3
        assert multinomial([1, 1, 1]) == 6
        assert multinomial_mod_p([1, 1, 1], 3) == 0
        assert multinomial_mod_p([2, 2], 5) == 1


class TestMultisets:
    """Test cases for multiset enumeration."""

    def test_plain_sum(self):
        """Test the two-part multisets of 4 with parts 1..3."""
        found = {tuple(sorted(multiset_parts(m))) for m in iter_multisets(2, 4, [1, 2, 3])}

        assert found == {(1, 3), (2, 2)}

    def test_weighted_sum(self):
        """Test exponent parts weighted by powers of 3."""
        found = list(iter_multisets(4, 12, range(1, 3), lambda i: 3 ** i))

        assert found == [((1, 4),)]
        assert multiplicities(found[0]) == [4]

    def test_zero_parts_allowed(self):
        """Test parts of value zero when counting compositions with zeros."""
        found = {tuple(sorted(multiset_parts(m))) for m in iter_multisets(3, 2, range(0, 3))}

        assert found == {(0, 0, 2), (0, 1, 1)}

    def test_impossible_targets(self):
        """Test empty results for negative sizes and unreachable totals."""
        assert list(iter_multisets(-1, 3, [1])) == []
        assert list(iter_multisets(2, 1, [1, 2])) == []

    def test_group_by_size_omits_empty_sizes(self):
        """Test size k = 1 and k = 4 are the only solutions of 3^i_1 + ... + 3^i_k = 8 + k."""
        groups = group_by_size(range(1, 9), lambda k: 8 + k, range(1, 3), lambda i: 3 ** i)

        assert groups == {1: [((2, 1),)], 4: [((1, 4),)]}


class TestRational:
    """Test cases for the characteristic-zero helpers."""

    def test_parts_and_latex(self):
        """Test numerator and denominator strings keep the sign on top."""
        assert rational_parts(Fraction(-1, 6)) == ("-1", "6")
        assert rational_parts(3) == ("3", "1")
        assert rational_to_latex(Fraction(-863, 84)) == "-\\frac{863}{84}"
        assert rational_to_latex(Fraction(2)) == "2"

    def test_rational_arith(self):
        """Test named rational operations and division by zero."""
        assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
        assert rational_arith(Fraction(1, 2), None, "inv") == 2
        with pytest.raises(ZeroDivisionError):
            rational_arith(Fraction(1), 0, "div")
