"""Truncated power series engine over exact coefficient domains."""

from .domains import QQ, CoefficientDomain, FunctionFieldDomain, RationalDomain
from .linear import LinearSeries, h_coefficients, levels_for, linear_series_inverse
from .power_series import (
    QUOTIENT_RULES,
    Series,
    ht_derivative,
    ht_product_rule,
    ht_quotient_check,
    ht_value_at_zero,
    series_arith,
    series_compose,
    series_pow,
    series_reciprocal,
)

__all__ = [
    "QQ",
    "CoefficientDomain",
    "FunctionFieldDomain",
    "RationalDomain",
    "LinearSeries",
    "h_coefficients",
    "levels_for",
    "linear_series_inverse",
    "QUOTIENT_RULES",
    "Series",
    "ht_derivative",
    "ht_product_rule",
    "ht_quotient_check",
    "ht_value_at_zero",
    "series_arith",
    "series_compose",
    "series_pow",
    "series_reciprocal",
]
