"""Tests for configuration models."""

import pytest

from src.config.models import COMPUTE_KINDS, CliConfig, FieldSpec, SuiteConfig


class TestFieldSpec:
    """Test cases for FieldSpec class."""

    def test_default_values(self):
        """Test the default field is F_3."""
        spec = FieldSpec()

        assert spec.p == 3
        assert spec.e == 1
        assert spec.modulus is None
        assert spec.r == 3

    def test_validate_extension(self):
        """Test a prime power field with an explicit modulus validates."""
        spec = FieldSpec(p=2, e=2, modulus="x^2+x+1")

        assert spec.validate() is True
        assert spec.r == 4
        assert spec.to_field().modulus == (1, 1, 1)

    def test_validate_prime_power_hint(self):
        """Test p = 4 is refused with a hint to use p = 2, e = 2."""
        with pytest.raises(ValueError, match=r"4 is not prime \(use --p 2 --e 2\)"):
            FieldSpec(p=4).validate()

    def test_validate_composite(self):
        """Test p = 6 is refused without a hint."""
        with pytest.raises(ValueError, match="^6 is not prime$"):
            FieldSpec(p=6).validate()

    @pytest.mark.parametrize("p,e", [(1, 1), (3, 0)])
    def test_validate_bad_ranges(self, p, e):
        """Test p < 2 and e < 1 are refused."""
        with pytest.raises(ValueError):
            FieldSpec(p=p, e=e).validate()

    def test_validate_reducible_modulus(self):
        """Test a reducible modulus is refused."""
        with pytest.raises(ValueError):
            FieldSpec(p=2, e=2, modulus="x^2+1").validate()

    def test_dict_round_trip(self):
        """Test to_dict and from_dict."""
        spec = FieldSpec(p=3, e=2, modulus="x^2+1")

        assert spec.to_dict() == {'p': 3, 'e': 2, 'modulus': "x^2+1"}
        assert FieldSpec.from_dict(spec.to_dict()) == spec
        assert FieldSpec.from_dict({}) == FieldSpec()


class TestSuiteConfig:
    """Test cases for SuiteConfig class."""

    def test_default_values(self):
        """Test defaults cover F_2 and F_3."""
        config = SuiteConfig()

        assert [(spec.p, spec.e) for spec in config.fields] == [(2, 1), (3, 1)]
        assert config.max_n == 16
        assert config.prec == 33
        assert config.k_max == 2
        assert config.seed == 2017
        assert config.identities is None
        assert config.max_failures == 5
        assert config.validate() is True

    @pytest.mark.parametrize(
        "kwargs,message",
        [
            ({'max_n': 0}, "max_n bound too small"),
            ({'prec': 1}, "prec bound too small"),
            ({'k_max': -1}, "k_max"),
            ({'max_failures': 0}, "max_failures"),
            ({'fields': []}, "At least one field"),
        ],
    )
    def test_validate_bounds(self, kwargs, message):
        """Test each bound is checked."""
        with pytest.raises(ValueError, match=message):
            SuiteConfig(**kwargs).validate()

    def test_validate_identities(self):
        """Test identity ids are checked against a supplied registry only."""
        config = SuiteConfig(identities=["orthogonality", "bogus"])

        assert config.validate() is True
        with pytest.raises(ValueError, match="Unknown identities: bogus"):
            config.validate(known_identities=["orthogonality"])

    def test_dict_round_trip(self):
        """Test to_dict and from_dict."""
        config = SuiteConfig(fields=[FieldSpec(p=5)], max_n=8, prec=12, identities=["support"])

        restored = SuiteConfig.from_dict(config.to_dict())

        assert restored == config

    def test_from_dict_defaults(self):
        """Test missing keys fall back to defaults."""
        config = SuiteConfig.from_dict({'max_n': 4})

        assert config.max_n == 4
        assert len(config.fields) == 2


class TestCliConfig:
    """Test cases for CliConfig class."""

    def test_compute_kinds(self):
        """Test Carlitz kinds precede the classical ones."""
        assert COMPUTE_KINDS[:5] == ["CC", "BC", "CCm", "stf_C", "sts_C"]
        assert "cauchy" in COMPUTE_KINDS

    def test_validate_valid(self):
        """Test a plain compute request validates."""
        config = CliConfig(command="compute", kind="BC", max_n=10)

        assert config.validate() is True
        assert config.is_carlitz_kind

    def test_classical_kind_skips_field(self):
        """Test classical kinds do not validate the field."""
        config = CliConfig(command="compute", kind="cauchy", p=4)

        assert config.validate() is True
        assert not config.is_carlitz_kind

    @pytest.mark.parametrize(
        "kwargs,message",
        [
            ({'command': "plot"}, "command must be one of"),
            ({'command': "compute", 'fmt': "xml"}, "format must be one of"),
            ({'command': "compute", 'order': 0}, "order must be >= 1"),
            ({'command': "compute", 'max_n': -1}, "max_n must be >= 0"),
            ({'command': "verify", 'max_n': 0}, "max_n bound too small"),
            ({'command': "series", 'prec': 0}, "prec must be >= 1"),
            ({'command': "compute", 'max_n': 65}, "use --unsafe-large"),
            ({'command': "series", 'prec': 201}, "use --unsafe-large"),
            ({'command': "compute", 'kind': "XX"}, "kind must be one of"),
            ({'command': "series", 'name': "sinC"}, "series name must be one of"),
            ({'command': "compute", 'p': 9}, r"use --p 3 --e 2"),
        ],
    )
    def test_validate_errors(self, kwargs, message):
        """Test each bad option is named."""
        with pytest.raises(ValueError, match=message):
            CliConfig(**kwargs).validate()

    def test_unsafe_large_lifts_caps(self):
        """Test --unsafe-large lifts the size caps."""
        config = CliConfig(command="compute", max_n=100, unsafe_large=True)

        assert config.validate() is True

    def test_dict_round_trip(self):
        """Test to_dict and from_dict."""
        config = CliConfig(command="verify", p=2, identity="support", all_fields=True, fmt="json")

        data = config.to_dict()

        assert data['all_fields'] is True
        assert CliConfig.from_dict(data) == config
