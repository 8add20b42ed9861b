"""Tests for finite field arithmetic."""

import pytest

from src.arith.finite_field import (
    FieldMismatchError,
    FFElement,
    ff_arith,
    format_fp_poly,
    is_irreducible_over_fp,
    make_field,
    parse_fp_poly,
    smallest_irreducible,
)


class TestFieldConstruction:
    """Test cases for building F_r."""

    def test_prime_field(self):
        """Test a prime field has r = p and no modulus."""
        field = make_field(3)

        assert field.r == 3
        assert field.is_prime
        assert field.modulus is None
        assert str(field) == "F_3"

    def test_non_prime_characteristic_rejected(self):
        """Test that p = 4 is refused."""
        with pytest.raises(ValueError, match="4 is not prime"):
            make_field(4)

    def test_extension_degree_must_be_positive(self):
        """Test that e = 0 is refused."""
        with pytest.raises(ValueError, match="Extension degree"):
            make_field(2, 0)

    def test_default_modulus_is_smallest_irreducible(self):
        """Test the automatic modulus choice for F_4 and F_9."""
        assert make_field(2, 2).modulus == (1, 1, 1)
        assert make_field(3, 2).modulus == (1, 0, 1)
        assert smallest_irreducible(2, 3) == (1, 0, 1, 1)

    def test_reducible_modulus_rejected(self):
        """Test that x^2 + 1 = (x + 1)^2 over F_2 is refused."""
        with pytest.raises(ValueError, match="reducible"):
            make_field(2, 2, "x^2+1")

    def test_modulus_degree_must_match(self):
        """Test a modulus of the wrong degree is refused."""
        with pytest.raises(ValueError, match="degree"):
            make_field(2, 3, "x^2+x+1")

    def test_irreducibility(self):
        """Test irreducibility by trial division."""
        assert is_irreducible_over_fp((1, 1, 1), 2)
        assert not is_irreducible_over_fp((1, 0, 1), 2)
        assert is_irreducible_over_fp((1, 0, 1), 3)

    def test_modulus_text_round_trip(self):
        """Test F_p polynomial text parsing and formatting."""
        coeffs = parse_fp_poly("x^2+2x+1", 3)

        assert coeffs == [1, 2, 1]
        assert format_fp_poly(coeffs, "x") == "x^2+2x+1"


class TestFieldArithmetic:
    """Test cases for arithmetic on element codes."""

    @pytest.fixture
    def f4(self):
        return make_field(2, 2)

    @pytest.fixture
    def f9(self):
        return make_field(3, 2)

    def test_prime_field_ops(self):
        """Test arithmetic mod 5."""
        field = make_field(5)

        assert field.add(3, 4) == 2
        assert field.mul(3, 4) == 2
        assert field.inv(2) == 3
        assert field.neg(1) == 4

    def test_generator_relation_f4(self, f4):
        """Test a^2 = a + 1 and a^(-1) = a + 1 in F_4."""
        a = 2  # code of the generator
        assert f4.mul(a, a) == 3
        assert f4.inv(a) == 3

    def test_generator_relation_f9(self, f9):
        """Test a^2 = -1 in F_9 = F_3[a]/(a^2 + 1)."""
        assert f9.mul(3, 3) == 2

    @pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 2), (5, 1), (2, 3)])
    def test_every_nonzero_element_is_a_unit(self, p, e):
        """Test a^(r-1) = 1 and a * a^(-1) = 1 for every nonzero element."""
        field = make_field(p, e)
        for code in range(1, field.r):
            assert field.pow(code, field.r - 1) == 1
            assert field.mul(code, field.inv(code)) == 1

    def test_zero_has_no_inverse(self, f4):
        """Test inverting zero raises."""
        with pytest.raises(ZeroDivisionError):
            f4.inv(0)

    def test_code_formatting(self, f4):
        """Test extension elements print in brackets and parse back."""
        assert f4.format_code(3) == "[a+1]"
        assert f4.parse_code("[a+1]") == 3
        assert f4.parse_code("1") == 1

    def test_element_operators(self, f9):
        """Test FFElement operators and ff_arith dispatch."""
        a = f9.element([0, 1])

        assert (a * a).code == 2
        assert ff_arith(a, a, "add") == a * 2
        assert ff_arith(a, None, "inv") * a == f9.element(1)
        assert ff_arith(a, 2, "pow") == a * a
        with pytest.raises(ValueError, match="Unknown field operation"):
            ff_arith(a, a, "mod")

    def test_mixed_fields_raise(self):
        """Test that combining elements of different fields raises."""
        a = FFElement(make_field(3), 1)
        b = FFElement(make_field(5), 1)

        with pytest.raises(FieldMismatchError):
            a + b
