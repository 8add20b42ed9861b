"""Registry of identities and the batch runner."""

from typing import Callable, Dict, List

from ..carlitz.generating import carlitz_exp_linear, carlitz_log_linear, domain_of
from ..carlitz.towers import CarlitzCache
from ..config.loader import tower_cap_from_env
from ..config.models import SuiteConfig
from ..series.domains import QQ
from ..series.linear import levels_for
from ..utils.logging_config import get_logger
from ..utils.performance import performance_monitor
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
from .report import IdentityReport
from .sampling import make_rng, random_linear_series

logger = get_logger(__name__)

FieldRunner = Callable[[CarlitzCache, SuiteConfig], List[IdentityReport]]
ClassicalRunner = Callable[[SuiteConfig], List[IdentityReport]]

# the M^(m) expansion enumerates partitions of n; keep its bound modest
CC_ORDER_BOUND = 10


def _h_relations(cache: CarlitzCache, config: SuiteConfig) -> List[IdentityReport]:
    order = levels_for(cache.r, config.prec)
    rng = make_rng(config.seed + cache.r)
    candidates = (
        ("e_C", carlitz_exp_linear(cache, order)),
        ("log_C", carlitz_log_linear(cache, order)),
        ("random", random_linear_series(cache.field, rng, order)),
    )
    return [
        verify_h_relations(f, config.prec, config.k_max, config.max_failures, label=label)
        for label, f in candidates
    ]


FIELD_IDENTITIES: Dict[str, FieldRunner] = {
    "tower_degrees": lambda cache, cfg: [verify_tower_degrees(cache, 3, cfg.max_failures)],
    "factorial_formulas": lambda cache, cfg: [verify_factorial_formulas(cache, cfg.max_n, cfg.max_failures)],
    "orthogonality": lambda cache, cfg: [verify_orthogonality(cache, cfg.max_n, cfg.max_failures)],
    "closed_forms": lambda cache, cfg: [verify_closed_forms(cache, cfg.max_n, cfg.max_failures)],
    "digit_vanishing": lambda cache, cfg: [verify_digit_vanishing(cache, cfg.max_n, cfg.max_failures)],
    "boundary_rows": lambda cache, cfg: [verify_boundary_rows(cache, cfg.max_n, cfg.max_failures)],
    "stirling_factorisation": lambda cache, cfg: [verify_stirling_factorisation(cache, cfg.max_n, cfg.max_failures)],
    "cc_agreement": lambda cache, cfg: [verify_cc_agreement(cache, cfg.max_n, cfg.max_failures)],
    "bc_agreement": lambda cache, cfg: [verify_bc_agreement(cache, cfg.max_n, cfg.max_failures)],
    "support": lambda cache, cfg: [verify_support(cache, cfg.max_n, cfg.max_failures)],
    "cc_annihilation": lambda cache, cfg: [verify_cc_annihilation(cache, cfg.max_n, cfg.max_failures)],
    "bc_annihilation": lambda cache, cfg: [verify_bc_annihilation(cache, cfg.max_n, cfg.max_failures)],
    "bc_cc_transmutation": lambda cache, cfg: [verify_bc_cc_transmutation(cache, cfg.max_n, cfg.max_failures)],
    "cc_order": lambda cache, cfg: [
        verify_cc_order(cache, min(cfg.max_n, CC_ORDER_BOUND), max_failures=cfg.max_failures)
    ],
    "functional_equations": lambda cache, cfg: [
        verify_series_functional_equations(cache, cfg.prec, cfg.max_failures)
    ],
    "log_coefficients": lambda cache, cfg: [verify_log_coefficients(cache, 30, cfg.max_failures)],
    "h_relations": _h_relations,
    "ht_rules": lambda cache, cfg: [
        verify_ht_rules(domain_of(cache), cfg.seed, max_failures=cfg.max_failures)
    ],
}

CLASSICAL_IDENTITIES: Dict[str, ClassicalRunner] = {
    "classical_cauchy": lambda cfg: [verify_classical_cauchy(cfg.max_n, cfg.max_failures)],
    "classical_cauchy_order": lambda cfg: [verify_classical_cauchy_order(cfg.max_n, max_failures=cfg.max_failures)],
    "classical_stirling": lambda cfg: [verify_classical_stirling(cfg.max_n, cfg.max_failures)],
    "classical_bernoulli": lambda cfg: [verify_classical_bernoulli(cfg.max_n, cfg.max_failures)],
    "ht_rules_rational": lambda cfg: [
        verify_ht_rules(QQ, cfg.seed, max_failures=cfg.max_failures, identity_id="ht_rules_rational")
    ],
}

ALL_IDENTITIES = list(FIELD_IDENTITIES) + list(CLASSICAL_IDENTITIES)


def _guarded(identity_id: str, params: dict, runner: Callable[[], List[IdentityReport]], max_failures: int) -> List[IdentityReport]:
    """Run a registry entry; errors raised outside the verifier body still yield a report."""
    try:
        return runner()
    except Exception as e:
        logger.error(f"Identity {identity_id} could not start: {e}")

        def body(report: IdentityReport, error: Exception = e) -> None:
            raise error

        return [run_check(identity_id, params, body, max_failures)]


@performance_monitor
def run_all(config: SuiteConfig) -> List[IdentityReport]:
    """Execute every selected identity for every configured field, then the classical ones."""
    config.validate(known_identities=ALL_IDENTITIES)
    selected = set(config.identities) if config.identities is not None else set(ALL_IDENTITIES)
    cap = tower_cap_from_env()
    reports: List[IdentityReport] = []

    for spec in config.fields:
        field = spec.to_field()
        cache = CarlitzCache(field, cap=cap)
        logger.info(f"Verifying identities over F_{field.r} (N={config.max_n}, prec={config.prec})")
        for identity_id, runner in FIELD_IDENTITIES.items():
            if identity_id in selected:
                params = {'p': field.p, 'e': field.e, 'r': field.r, 'N': config.max_n}
                reports.extend(
                    _guarded(identity_id, params, lambda: runner(cache, config), config.max_failures)
                )

    for identity_id, runner in CLASSICAL_IDENTITIES.items():
        if identity_id in selected:
            reports.extend(
                _guarded(identity_id, {'N': config.max_n}, lambda: runner(config), config.max_failures)
            )

    failed = [report.identity_id for report in reports if not report.passed]
    if failed:
        logger.warning(f"{len(failed)} identity report(s) failed: {', '.join(failed)}")
    else:
        logger.info(f"All {len(reports)} identity reports passed")
    return reports
