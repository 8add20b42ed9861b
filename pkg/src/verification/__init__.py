"""Batch verification of the identities as pass/fail reports."""

from .report import Failure, IdentityReport
from .identities import (
    run_check,
    verify_bc_agreement,
    verify_bc_annihilation,
    verify_bc_cc_transmutation,
    verify_boundary_rows,
    verify_cc_agreement,
    verify_cc_annihilation,
    verify_cc_order,
    verify_classical_bernoulli,
    verify_classical_cauchy,
    verify_classical_cauchy_order,
    verify_classical_stirling,
    verify_closed_forms,
    verify_digit_vanishing,
    verify_factorial_formulas,
    verify_h_relations,
    verify_ht_rules,
    verify_log_coefficients,
    verify_orthogonality,
    verify_series_functional_equations,
    verify_stirling_factorisation,
    verify_support,
    verify_tower_degrees,
)
from .suite import ALL_IDENTITIES, CLASSICAL_IDENTITIES, FIELD_IDENTITIES, run_all

__all__ = [
    'Failure',
    'IdentityReport',
    'run_check',
    'verify_bc_agreement',
    'verify_bc_annihilation',
    'verify_bc_cc_transmutation',
    'verify_boundary_rows',
    'verify_cc_agreement',
    'verify_cc_annihilation',
    'verify_cc_order',
    'verify_classical_bernoulli',
    'verify_classical_cauchy',
    'verify_classical_cauchy_order',
    'verify_classical_stirling',
    'verify_closed_forms',
    'verify_digit_vanishing',
    'verify_factorial_formulas',
    'verify_h_relations',
    'verify_ht_rules',
    'verify_log_coefficients',
    'verify_orthogonality',
    'verify_series_functional_equations',
    'verify_stirling_factorisation',
    'verify_support',
    'verify_tower_degrees',
    'ALL_IDENTITIES',
    'CLASSICAL_IDENTITIES',
    'FIELD_IDENTITIES',
    'run_all',
]
