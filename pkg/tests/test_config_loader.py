"""Tests for configuration loader."""

import json
import os
from unittest.mock import patch, mock_open

from src.config.loader import load_suite_config, save_suite_config, tower_cap_from_env
from src.config.models import FieldSpec, SuiteConfig


class TestLoadSuiteConfig:
    """Test cases for loading the suite configuration."""

    @patch.dict(os.environ, {}, clear=True)
    def test_missing_file_uses_defaults(self, tmp_path):
        """Test a missing file yields the default suite."""
        config = load_suite_config(tmp_path / "absent.json")

        assert config == SuiteConfig()

    @patch.dict(os.environ, {}, clear=True)
    def test_load_from_file(self, tmp_path):
        """Test values are read from JSON."""
        path = tmp_path / "suite.json"
        path.write_text(json.dumps({'fields': [{'p': 5}], 'max_n': 8, 'identities': ["support"]}))

        config = load_suite_config(path)

        assert config is not None
        assert config.fields == [FieldSpec(p=5)]
        assert config.max_n == 8
        assert config.identities == ["support"]
        assert config.prec == 33

    @patch.dict(os.environ, {'CARLITZ_MAX_N': '6', 'CARLITZ_PREC': '10', 'CARLITZ_SEED': '1'}, clear=True)
    def test_env_overrides_file(self, tmp_path):
        """Test environment variables take priority over the file."""
        path = tmp_path / "suite.json"
        path.write_text(json.dumps({'max_n': 8, 'prec': 20}))

        config = load_suite_config(path)

        assert (config.max_n, config.prec, config.seed) == (6, 10, 1)

    @patch.dict(os.environ, {'CARLITZ_MAX_N': 'many'}, clear=True)
    def test_non_integer_env_ignored(self, tmp_path):
        """Test a non-integer override is ignored."""
        config = load_suite_config(tmp_path / "absent.json")

        assert config.max_n == 16

    @patch('builtins.open', new_callable=mock_open, read_data="invalid json")
    @patch.dict(os.environ, {}, clear=True)
    def test_invalid_json(self, mock_file):
        """Test invalid JSON returns None."""
        assert load_suite_config("suite.json") is None

    @patch.dict(os.environ, {'CARLITZ_PREC': '1'}, clear=True)
    def test_invalid_values(self, tmp_path):
        """Test a config that fails validation returns None."""
        assert load_suite_config(tmp_path / "absent.json") is None


class TestSaveSuiteConfig:
    """Test cases for saving the suite configuration."""

    @patch.dict(os.environ, {}, clear=True)
    def test_save_and_reload(self, tmp_path):
        """Test a saved config loads back unchanged."""
        path = tmp_path / "nested" / "suite.json"
        config = SuiteConfig(fields=[FieldSpec(p=2, e=2)], max_n=9)

        assert save_suite_config(config, path) is True
        assert json.loads(path.read_text())['max_n'] == 9
        assert load_suite_config(path) == config

    @patch('builtins.open')
    def test_save_file_error(self, mock_file, tmp_path):
        """Test write errors return False."""
        mock_file.side_effect = IOError("File write error")

        assert save_suite_config(SuiteConfig(), tmp_path / "suite.json") is False


class TestTowerCap:
    """Test cases for tower_cap_from_env."""

    @patch.dict(os.environ, {}, clear=True)
    def test_default(self):
        """Test the default cap."""
        assert tower_cap_from_env() == 12

    @patch.dict(os.environ, {'CARLITZ_CACHE_CAP': '4'})
    def test_override(self):
        """Test the environment override."""
        assert tower_cap_from_env() == 4

    @patch.dict(os.environ, {'CARLITZ_CACHE_CAP': '0'})
    def test_non_positive_ignored(self):
        """Test a cap below 1 falls back to the default."""
        assert tower_cap_from_env() == 12
