"""Command implementations behind carlitz_cli.py."""

from typing import Tuple

from ..carlitz.generating import (
    carlitz_exp_series,
    carlitz_log_series,
    z_over_exp_series,
    z_over_log_series,
)
from ..carlitz.numbers import carlitz_table
from ..carlitz.towers import CarlitzCache
from ..classical.cauchy import classical_table
from ..config.loader import load_suite_config, tower_cap_from_env
from ..config.models import CliConfig, SuiteConfig
from ..series.power_series import Series, series_pow
from ..utils.constants import DEFAULT_PREC, EXIT_IDENTITY_FAILURE, EXIT_OK
from ..utils.logging_config import get_logger
from ..verification.suite import run_all
from .render import render_reports, render_series, render_table

logger = get_logger(__name__)


def build_cache(config: CliConfig) -> CarlitzCache:
    field = config.field_spec().to_field()
    return CarlitzCache(field, cap=tower_cap_from_env())


def cmd_compute(config: CliConfig) -> str:
    """Table of the selected kind for n = 0..max_n in the requested format."""
    config.validate()
    if config.is_carlitz_kind:
        cache = build_cache(config)
        table = carlitz_table(cache, config.kind, config.max_n, config.order)
        logger.info(f"Computed {config.kind} over F_{cache.r} for n <= {config.max_n}")
        return render_table(table, config.fmt, cache.field)
    table = classical_table(config.kind, config.max_n, config.order)
    logger.info(f"Computed classical {config.kind} for n <= {config.max_n}")
    return render_table(table, config.fmt)


def _named_series(cache: CarlitzCache, name: str, prec: int, order: int) -> Series:
    if name == "eC":
        return carlitz_exp_series(cache, prec)
    if name == "logC":
        return carlitz_log_series(cache, prec)
    if name == "zOverLogC":
        return z_over_log_series(cache, prec)
    if name == "zOverEC":
        return z_over_exp_series(cache, prec)
    if name == "logCPow":
        return series_pow(carlitz_log_series(cache, prec), order)
    raise ValueError(f"Unknown series name '{name}'")


def cmd_series(config: CliConfig) -> str:
    """Truncated e_C, log_C, their reciprocals times z, or (log_C)^order."""
    config.validate()
    cache = build_cache(config)
    prec = config.prec or config.max_n + 1
    series = _named_series(cache, config.name, prec, config.order)
    return render_series(series, config.fmt, config.name, cache.field)


def suite_config_for(config: CliConfig) -> SuiteConfig:
    """The suite run a verify invocation asks for."""
    if config.all_fields:
        suite = load_suite_config()
        if suite is None:
            raise ValueError("Invalid suite configuration")
        suite.max_n = config.max_n
        suite.seed = config.seed
    else:
        suite = SuiteConfig(fields=[config.field_spec()], max_n=config.max_n, seed=config.seed)
    suite.prec = config.prec or suite.prec or DEFAULT_PREC
    if config.identity:
        suite.identities = [config.identity]
    return suite


def cmd_verify(config: CliConfig) -> Tuple[int, str]:
    """Run the selected identities; exit code 0 only when every report passes."""
    config.validate()
    reports = run_all(suite_config_for(config))
    exit_code = EXIT_OK if all(report.passed for report in reports) else EXIT_IDENTITY_FAILURE
    return exit_code, render_reports(reports, config.fmt)
