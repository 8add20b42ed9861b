"""Tests for the Carlitz towers and factorial."""

import os
from unittest.mock import patch

import pytest

from src.arith.finite_field import make_field
from src.arith.polynomial import parse_poly
from src.carlitz.towers import (
    CarlitzCache,
    TowerCapExceeded,
    bracket,
    carlitz_factorial,
    carlitz_factorial_alt,
    d_of,
    digit_sum,
    l_of,
    r_digits,
    tower_depth,
)
from src.config.loader import tower_cap_from_env


@pytest.fixture
def cache3():
    return CarlitzCache(make_field(3))


class TestTowers:
    """Test cases for [i], D_i and L_i."""

    def test_first_levels_over_f3(self, cache3):
        """Test [1] = D_1 = L_1 = T^3 - T and D_2 = [2][1]^3."""
        field = cache3.field
        b1 = parse_poly(field, "T^3 + 2*T")
        b2 = parse_poly(field, "T^9 + 2*T")

        assert bracket(cache3, 1) == b1
        assert d_of(cache3, 1) == b1
        assert l_of(cache3, 1) == b1
        assert d_of(cache3, 2) == b2 * b1 ** 3
        assert l_of(cache3, 2) == b2 * b1
        assert d_of(cache3, 0) == 1

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
    def test_degrees(self, p, e):
        """Test deg D_i = i r^i and deg L_i = r + ... + r^i."""
        cache = CarlitzCache(make_field(p, e))
        r = cache.r
        for i in range(1, 4):
            assert d_of(cache, i).degree == i * r ** i
            assert l_of(cache, i).degree == sum(r ** j for j in range(1, i + 1))

    def test_index_errors(self, cache3):
        """Test invalid indices raise."""
        with pytest.raises(ValueError):
            bracket(cache3, 0)
        with pytest.raises(ValueError):
            d_of(cache3, -1)

    def test_guard_cap(self):
        """Test indices above the cap raise TowerCapExceeded, a ValueError."""
        cache = CarlitzCache(make_field(2), cap=2)

        assert d_of(cache, 2).degree == 8
        with pytest.raises(TowerCapExceeded, match="guard cap 2"):
            d_of(cache, 3)
        assert issubclass(TowerCapExceeded, ValueError)

    def test_cap_must_be_positive(self):
        """Test a cap of zero is refused."""
        with pytest.raises(ValueError):
            CarlitzCache(make_field(2), cap=0)

    @patch.dict(os.environ, {'CARLITZ_CACHE_CAP': '5'})
    def test_cap_from_env(self):
        """Test CARLITZ_CACHE_CAP overrides the default cap."""
        assert tower_cap_from_env() == 5

    @patch.dict(os.environ, {'CARLITZ_CACHE_CAP': 'lots'})
    def test_invalid_cap_env_ignored(self):
        """Test a non-integer cap falls back to the default."""
        assert tower_cap_from_env() == 12


class TestDigits:
    """Test cases for base-r digits."""

    def test_digits(self):
        """Test little-endian digits, digit sums and tower depth."""
        assert r_digits(10, 3) == [1, 0, 1]
        assert r_digits(0, 3) == []
        assert digit_sum(8, 3) == 4
        assert tower_depth(9, 3) == 2
        assert tower_depth(8, 3) == 1
        assert tower_depth(2, 3) == 0

    def test_bad_base(self):
        """Test a base below 2 raises."""
        with pytest.raises(ValueError):
            r_digits(5, 1)


class TestCarlitzFactorial:
    """Test cases for Pi(n)."""

    def test_small_values(self, cache3):
        """Test Pi(n) = 1 for n < r and Pi(4) = D_1 over F_3."""
        assert carlitz_factorial(cache3, 0) == 1
        assert carlitz_factorial(cache3, 2) == 1
        assert carlitz_factorial(cache3, 4) == d_of(cache3, 1)
        assert carlitz_factorial(cache3, 9) == d_of(cache3, 2)

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2)])
    def test_digit_and_floor_formulas_agree(self, p, e):
        """Test the digit product equals the product of brackets to the floor powers."""
        cache = CarlitzCache(make_field(p, e))
        for n in range(40):
            assert carlitz_factorial(cache, n) == carlitz_factorial_alt(cache, n)

    def test_negative_rejected(self, cache3):
        """Test Pi(-1) raises."""
        with pytest.raises(ValueError):
            carlitz_factorial(cache3, -1)
