"""Carlitz-module towers, generating series and special numbers."""

from .towers import (
    CarlitzCache,
    TowerCapExceeded,
    bracket,
    d_of,
    l_of,
    r_digits,
    digit_sum,
    tower_depth,
    carlitz_factorial,
    carlitz_factorial_alt,
)
from .generating import (
    carlitz_exp_linear,
    carlitz_log_linear,
    carlitz_exp_series,
    carlitz_log_series,
    z_over_exp_series,
    z_over_log_series,
)
from .numbers import (
    CARLITZ_TABLE_KINDS,
    CarlitzNumberTable,
    stirling_carlitz,
    stirling_carlitz_closed_form,
    cauchy_carlitz,
    cauchy_carlitz_direct,
    cauchy_carlitz_ht,
    cauchy_carlitz_ht_terms,
    bernoulli_carlitz,
    bernoulli_carlitz_direct,
    bernoulli_carlitz_ht,
    cauchy_carlitz_order,
    check_digit_vanishing,
    carlitz_table,
)

__all__ = [
    'CarlitzCache',
    'TowerCapExceeded',
    'bracket',
    'd_of',
    'l_of',
    'r_digits',
    'digit_sum',
    'tower_depth',
    'carlitz_factorial',
    'carlitz_factorial_alt',
    'carlitz_exp_linear',
    'carlitz_log_linear',
    'carlitz_exp_series',
    'carlitz_log_series',
    'z_over_exp_series',
    'z_over_log_series',
    'CARLITZ_TABLE_KINDS',
    'CarlitzNumberTable',
    'stirling_carlitz',
    'stirling_carlitz_closed_form',
    'cauchy_carlitz',
    'cauchy_carlitz_direct',
    'cauchy_carlitz_ht',
    'cauchy_carlitz_ht_terms',
    'bernoulli_carlitz',
    'bernoulli_carlitz_direct',
    'bernoulli_carlitz_ht',
    'cauchy_carlitz_order',
    'check_digit_vanishing',
    'carlitz_table',
]
