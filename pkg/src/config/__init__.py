"""Configuration management module."""

from .models import CliConfig, FieldSpec, SuiteConfig
from .loader import load_suite_config, save_suite_config, tower_cap_from_env

__all__ = ['CliConfig', 'FieldSpec', 'SuiteConfig', 'load_suite_config', 'save_suite_config', 'tower_cap_from_env']
