"""Classical (characteristic 0) Stirling, Cauchy and poly-Cauchy numbers."""

from .stirling import CLASSICAL_STIRLING_KINDS, stirling_classical, stirling_inversion_sum
from .cauchy import (
    BERNOULLI_METHODS,
    CAUCHY_METHODS,
    CAUCHY_ORDER_METHODS,
    CLASSICAL_TABLE_KINDS,
    ClassicalTable,
    bernoulli_classical,
    cauchy_classical,
    cauchy_order_classical,
    classical_table,
    poly_cauchy,
    stirling_sum_identity_check,
)

__all__ = [
    'CLASSICAL_STIRLING_KINDS',
    'stirling_classical',
    'stirling_inversion_sum',
    'BERNOULLI_METHODS',
    'CAUCHY_METHODS',
    'CAUCHY_ORDER_METHODS',
    'CLASSICAL_TABLE_KINDS',
    'ClassicalTable',
    'bernoulli_classical',
    'cauchy_classical',
    'cauchy_order_classical',
    'classical_table',
    'poly_cauchy',
    'stirling_sum_identity_check',
]
