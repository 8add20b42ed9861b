"""Machine-checkable identities over finite bounds.

Every verifier returns an ``IdentityReport``. Counterexamples are recorded
(up to the failure cap) rather than raised, and an unexpected exception
inside a check becomes a single recorded failure.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Optional

from ..arith.polynomial import Poly
from ..arith.ratfunc import RatFunc
from ..carlitz.generating import (
    carlitz_exp_linear,
    carlitz_exp_series,
    carlitz_log_linear,
    carlitz_log_series,
    domain_of,
)
from ..carlitz.numbers import (
    bernoulli_carlitz,
    bernoulli_carlitz_direct,
    bernoulli_carlitz_ht,
    carlitz_table,
    cauchy_carlitz,
    cauchy_carlitz_direct,
    cauchy_carlitz_ht,
    cauchy_carlitz_order,
    check_digit_vanishing,
    stirling_carlitz,
    stirling_carlitz_closed_form,
)
from ..carlitz.towers import (
    CarlitzCache,
    carlitz_factorial,
    carlitz_factorial_alt,
    d_of,
    l_of,
    r_digits,
)
from ..classical.cauchy import (
    CAUCHY_METHODS,
    CAUCHY_ORDER_METHODS,
    bernoulli_classical,
    cauchy_classical,
    cauchy_order_classical,
    poly_cauchy,
    stirling_sum_identity_check,
)
from ..classical.stirling import stirling_classical, stirling_inversion_sum
from ..series.domains import CoefficientDomain, FunctionFieldDomain
from ..series.linear import LinearSeries, h_coefficients, levels_for, linear_series_inverse
from ..series.power_series import (
    QUOTIENT_RULES,
    Series,
    ht_derivative,
    ht_product_rule,
    ht_quotient_check,
    ht_value_at_zero,
    series_compose,
    series_pow,
    series_reciprocal,
)
from ..utils.constants import MAX_FAILURES_PER_IDENTITY
from ..utils.logging_config import get_logger
from ..utils.performance import Stopwatch
from .report import IdentityReport
from .sampling import make_rng, random_unit_series

logger = get_logger(__name__)


def _field_params(cache: CarlitzCache, **bounds) -> dict:
    params = {'p': cache.p, 'e': cache.field.e, 'r': cache.r}
    params.update(bounds)
    return params


def run_check(
    identity_id: str,
    params: dict,
    body: Callable[[IdentityReport], None],
    max_failures: int = MAX_FAILURES_PER_IDENTITY,
) -> IdentityReport:
    """Run ``body`` against a fresh report, timing it and trapping unexpected errors."""
    report = IdentityReport(identity_id, params, max_failures=max_failures)
    with Stopwatch() as watch:
        try:
            body(report)
        except Exception as e:
            logger.error(f"Identity {identity_id} raised {type(e).__name__}: {e}")
            report.record(("exception",), "no exception", f"{type(e).__name__}: {e}")
    report.elapsed = watch.elapsed
    if report.failures:
        logger.warning(f"Identity {identity_id} failed {len(report.failures)} case(s) with {params}")
    else:
        logger.info(f"Identity {identity_id} passed {report.cases_checked} case(s) in {report.elapsed:.2f}s")
    return report


def _require_bound(name: str, value: int, least: int) -> None:
    if value < least:
        raise ValueError(f"{name} bound too small: {value} (need >= {least})")


def _compare_series(report: IdentityReport, label: str, expected: Series, actual: Series) -> bool:
    """Coefficient-wise comparison at the common precision."""
    prec = min(expected.prec, actual.prec)
    for n in range(prec):
        if not report.check((label, n), expected.coeffs[n], actual.coeffs[n]):
            return False
    return True


# -- Stirling-Carlitz structure ---------------------------------------------


def verify_orthogonality(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """sum_m [[n m]]_C {m k}_C = delta_{n,k} and the mirrored sum, for 0 <= k <= n <= N."""
    _require_bound("N", N, 1)
    one, zero = RatFunc.one(cache.field), RatFunc.zero(cache.field)

    def body(report: IdentityReport) -> None:
        for first, second, label in (("first", "second", "stf_sts"), ("second", "first", "sts_stf")):
            for n in range(N + 1):
                for k in range(n + 1):
                    total = zero
                    for m in range(k, n + 1):
                        left = stirling_carlitz(cache, first, n, m)
                        if left:
                            total = total + left * stirling_carlitz(cache, second, m, k)
                    if not report.check((label, n, k), one if n == k else zero, total):
                        return

    return run_check("orthogonality", _field_params(cache, N=N), body, max_failures)


def verify_closed_forms(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """Stirling-Carlitz numbers at (r^a, r^b) against their D/L product forms, r^a <= N."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        a = 0
        while cache.r ** a <= N:
            for b in range(a + 1):
                for kind in ("first", "second"):
                    expected = stirling_carlitz_closed_form(cache, kind, a, b)
                    actual = stirling_carlitz(cache, kind, cache.r ** a, cache.r ** b)
                    if not report.check((kind, a, b), expected, actual):
                        return
            a += 1

    return run_check("closed_forms", _field_params(cache, N=N), body, max_failures)


def verify_digit_vanishing(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """lambda(n) > lambda(m) forces both Stirling-Carlitz numbers to vanish, 1 <= m <= n <= N."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(1, N + 1):
            for m in range(1, n + 1):
                if not report.check((n, m), True, check_digit_vanishing(cache, n, m)):
                    return

    return run_check("digit_vanishing", _field_params(cache, N=N), body, max_failures)


def verify_boundary_rows(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """Zero first column, unit diagonal and zero upper triangle of both Stirling-Carlitz tables."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for kind in ("stf_C", "sts_C"):
            table = carlitz_table(cache, kind, N)
            report.cases_checked += len(table.values)
            for problem in table.check_boundaries():
                report.record((kind,), "boundary value", problem)
            # above the diagonal the tables are implicit; spot-check the row n = N
            for k in range(N + 1, N + 3):
                kind_name = "first" if kind == "stf_C" else "second"
                if not report.check((kind, N, k), RatFunc.zero(cache.field), stirling_carlitz(cache, kind_name, N, k)):
                    return

    return run_check("boundary_rows", _field_params(cache, N=N), body, max_failures)


def verify_stirling_factorisation(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """(log_C z)^m equals the product of Frobenius twists (log_C z)^(r^a) over the base-r digits of m.

    The twist by r^a replaces each coefficient c_i of z^(r^i) by c_i^(r^a) at z^(r^(i+a)).
    The same holds for e_C.
    """
    _require_bound("N", N, 1)
    prec = N + 1

    def twisted(linear: LinearSeries, a: int) -> Series:
        terms = {}
        for i, c in enumerate(linear.coeffs):
            exponent = cache.r ** (i + a)
            if exponent < prec:
                terms[exponent] = c.frobenius(a)
        return Series.from_terms(linear.domain, terms, prec)

    def body(report: IdentityReport) -> None:
        levels = levels_for(cache.r, prec - 1)
        for name, linear, plain in (
            ("log", carlitz_log_linear(cache, levels), carlitz_log_series(cache, prec)),
            ("exp", carlitz_exp_linear(cache, levels), carlitz_exp_series(cache, prec)),
        ):
            for m in range(1, N + 1):
                product = Series.one(linear.domain, prec)
                for a, digit in enumerate(r_digits(m, cache.r)):
                    for _ in range(digit):
                        product = product * twisted(linear, a)
                if not _compare_series(report, f"{name}^{m}", series_pow(plain, m), product):
                    return

    return run_check("stirling_factorisation", _field_params(cache, N=N), body, max_failures)


# -- towers and factorials ---------------------------------------------------


def verify_factorial_formulas(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """Both factorial formulas, deg Pi(n) from digits, and Pi(r^d - 1) L_d = D_d for d <= 3."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(N + 1):
            pi = carlitz_factorial(cache, n)
            if not report.check(("alt", n), pi, carlitz_factorial_alt(cache, n)):
                return
            expected_degree = sum(c * j * cache.r ** j for j, c in enumerate(r_digits(n, cache.r)))
            if not report.check(("degree", n), expected_degree, pi.degree):
                return
        for d in range(min(3, cache.cap) + 1):
            pi = carlitz_factorial(cache, cache.r ** d - 1)
            if not report.check(("pi_l_d", d), d_of(cache, d), pi * l_of(cache, d)):
                return
            product = Poly.one(cache.field)
            for j in range(d):
                product = product * d_of(cache, j)
            if not report.check(("pi_d_product", d), product ** (cache.r - 1), pi):
                return

    return run_check("factorial_formulas", _field_params(cache, N=N), body, max_failures)


def verify_tower_degrees(cache: CarlitzCache, levels: int = 3, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """deg D_i = i r^i and deg L_i = r + r^2 + ... + r^i."""

    def body(report: IdentityReport) -> None:
        for i in range(min(levels, cache.cap) + 1):
            if not report.check(("D", i), i * cache.r ** i, d_of(cache, i).degree):
                return
            expected = sum(cache.r ** j for j in range(1, i + 1))
            if not report.check(("L", i), expected, l_of(cache, i).degree):
                return

    return run_check("tower_degrees", _field_params(cache, levels=levels), body, max_failures)


# -- Cauchy-Carlitz and Bernoulli-Carlitz numbers ----------------------------


def verify_cc_agreement(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """CC_n from the Stirling sum, from z/log_C(z) and from the L_i expansion agree."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(1, N + 1):
            value = cauchy_carlitz(cache, n)
            if not report.check(("direct", n), cauchy_carlitz_direct(cache, n), value):
                return
            if not report.check(("ht", n), cauchy_carlitz_ht(cache, n), value):
                return

    return run_check("cc_agreement", _field_params(cache, N=N), body, max_failures)


def verify_bc_agreement(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """BC_n from the Stirling sum, from z/e_C(z) and from the D_i expansion agree."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(1, N + 1):
            value = bernoulli_carlitz(cache, n)
            if not report.check(("direct", n), bernoulli_carlitz_direct(cache, n), value):
                return
            if not report.check(("ht", n), bernoulli_carlitz_ht(cache, n), value):
                return

    return run_check("bc_agreement", _field_params(cache, N=N), body, max_failures)


def verify_support(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """CC_0 = BC_0 = 1, and CC_n = BC_n = 0 unless (r - 1) divides n.

    Over F_2 every n is divisible by r - 1, so only the constant terms are checked.
    """
    _require_bound("N", N, 1)
    zero = RatFunc.zero(cache.field)
    one = RatFunc.one(cache.field)

    def body(report: IdentityReport) -> None:
        if not report.check(("CC", 0), one, cauchy_carlitz(cache, 0)):
            return
        if not report.check(("BC", 0), one, bernoulli_carlitz(cache, 0)):
            return
        for n in range(1, N + 1):
            if n % (cache.r - 1) == 0:
                continue
            if not report.check(("CC", n), zero, cauchy_carlitz(cache, n)):
                return
            if not report.check(("BC", n), zero, bernoulli_carlitz(cache, n)):
                return

    return run_check("support", _field_params(cache, N=N), body, max_failures)


def _tower_value(cache: CarlitzCache, n: int, value: Callable[[int], RatFunc]) -> RatFunc:
    """value(j) if n = r^j - 1 for some j, else 0."""
    j = 0
    while cache.r ** j - 1 < n:
        j += 1
    if cache.r ** j - 1 == n:
        return value(j)
    return RatFunc.zero(cache.field)


def verify_cc_annihilation(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """sum_m {n m}_C CC_m = 1/L_j when n = r^j - 1, else 0."""
    _require_bound("N", N, 1)

    def expected(j: int) -> RatFunc:
        return RatFunc(Poly.one(cache.field), l_of(cache, j))

    def body(report: IdentityReport) -> None:
        for n in range(N + 1):
            total = RatFunc.zero(cache.field)
            for m in range(n + 1):
                s = stirling_carlitz(cache, "second", n, m)
                if s:
                    total = total + s * cauchy_carlitz(cache, m)
            if not report.check((n,), _tower_value(cache, n, expected), total):
                return

    return run_check("cc_annihilation", _field_params(cache, N=N), body, max_failures)


def verify_bc_annihilation(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """sum_m [[n m]]_C BC_m = (-1)^j D_j / L_j^2 when n = r^j - 1, else 0."""
    _require_bound("N", N, 1)

    def expected(j: int) -> RatFunc:
        return RatFunc(d_of(cache, j) * Poly.constant(cache.field, (-1) ** j), l_of(cache, j) ** 2)

    def body(report: IdentityReport) -> None:
        for n in range(N + 1):
            total = RatFunc.zero(cache.field)
            for m in range(n + 1):
                s = stirling_carlitz(cache, "first", n, m)
                if s:
                    total = total + s * bernoulli_carlitz(cache, m)
            if not report.check((n,), _tower_value(cache, n, expected), total):
                return

    return run_check("bc_annihilation", _field_params(cache, N=N), body, max_failures)


def verify_bc_cc_transmutation(cache: CarlitzCache, N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """BC_n from CC_l and CC_n from BC_l through the double Stirling-Carlitz sums over m = r^j - 1."""
    _require_bound("N", N, 1)
    field_ = cache.field

    def transmute(n: int, kind: str, source: Callable[[CarlitzCache, int], RatFunc]) -> RatFunc:
        total = RatFunc.zero(field_)
        j = 0
        while cache.r ** j - 1 <= n:
            m = cache.r ** j - 1
            outer = stirling_carlitz(cache, kind, n, m)
            if outer:
                inner = RatFunc.zero(field_)
                for l in range(m + 1):
                    s = stirling_carlitz(cache, kind, m, l)
                    if s:
                        inner = inner + s * source(cache, l)
                pi = carlitz_factorial(cache, m)
                weight = pi if kind == "second" else RatFunc(Poly.one(field_), pi)
                total = total + outer * inner * weight * (-1) ** j
            j += 1
        return total

    def body(report: IdentityReport) -> None:
        for n in range(N + 1):
            if not report.check(("BC", n), bernoulli_carlitz(cache, n), transmute(n, "second", cauchy_carlitz)):
                return
            if not report.check(("CC", n), cauchy_carlitz(cache, n), transmute(n, "first", bernoulli_carlitz)):
                return

    return run_check("bc_cc_transmutation", _field_params(cache, N=N), body, max_failures)


def verify_cc_order(
    cache: CarlitzCache,
    N: int,
    orders=(1, 2),
    max_failures: int = MAX_FAILURES_PER_IDENTITY,
) -> IdentityReport:
    """CC_n^(m) from (z/log_C z)^m against the M^(m) expansion; order 1 against CC_n."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for m in orders:
            if not report.check(("direct", 0, m), RatFunc.one(cache.field), cauchy_carlitz_order(cache, 0, m)):
                return
            for n in range(1, N + 1):
                direct = cauchy_carlitz_order(cache, n, m, "direct")
                if not report.check(("expansion", n, m), direct, cauchy_carlitz_order(cache, n, m, "expansion")):
                    return
                if m == 1 and not report.check(("order1", n), cauchy_carlitz(cache, n), direct):
                    return

    return run_check("cc_order", _field_params(cache, N=N, orders=list(orders)), body, max_failures)


# -- series identities ---------------------------------------------------------


def verify_series_functional_equations(cache: CarlitzCache, prec: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """e_C(Tz) = T e_C(z) + e_C(z)^r, T log_C(z) = log_C(Tz) + log_C(z^r), e_C(log_C z) = log_C(e_C z) = z."""
    _require_bound("prec", prec, 2)
    domain = domain_of(cache)
    t = RatFunc.from_poly(Poly.t(cache.field))

    def body(report: IdentityReport) -> None:
        e = carlitz_exp_series(cache, prec)
        log = carlitz_log_series(cache, prec)
        z = Series.z(domain, prec)
        checks = (
            ("exp_functional", e.scale(t), e * t + series_pow(e, cache.r)),
            ("log_functional", log * t, log.scale(t) + log.substitute_power(cache.r, prec)),
            ("exp_of_log", z, series_compose(e, log)),
            ("log_of_exp", z, series_compose(log, e)),
        )
        for label, left, right in checks:
            if not _compare_series(report, label, left, right):
                return

    return run_check("functional_equations", _field_params(cache, prec=prec), body, max_failures)


def verify_log_coefficients(cache: CarlitzCache, e_max: int = 30, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """H^(e)(log_C(z)/z) at 0 is (-1)^i/L_i for e = r^i - 1 and 0 otherwise; likewise 1/D_i for e_C(z)/z."""
    _require_bound("e_max", e_max, 0)
    prec = e_max + 1
    levels = levels_for(cache.r, prec)

    def body(report: IdentityReport) -> None:
        for name, linear in (("log", carlitz_log_linear(cache, levels)), ("exp", carlitz_exp_linear(cache, levels))):
            g = linear.over_z(prec)
            for e in range(prec):
                expected = _tower_value(cache, e, linear.coefficient)
                if not report.check((name, e), expected, ht_value_at_zero(g, e)):
                    return

    return run_check("log_coefficients", _field_params(cache, e_max=e_max), body, max_failures)


def verify_h_relations(f: LinearSeries, prec: int, k_max: int, max_failures: int = MAX_FAILURES_PER_IDENTITY, label: str = "f") -> IdentityReport:
    """h_(r^k - 1) = f_0^(r^k) g_k, and prod_j h_(r^k - r^(k_j)) = h_(sum_j (r^k - r^(k_j))) for 1 <= l <= r."""
    if not f.coefficient(0):
        raise ValueError("h relations need f_0 != 0")
    _require_bound("prec", prec, 2)
    r = f.r
    field_ = f.domain.field

    def body(report: IdentityReport) -> None:
        h = h_coefficients(f, prec)
        levels = levels_for(r, prec)
        g = linear_series_inverse(f, levels)
        f0 = f.coefficient(0)
        for k in range(levels):
            if not report.check(("inverse", k), f0 ** (r ** k) * g.coefficient(k), h[r ** k - 1]):
                return
        for k in range(k_max + 1):
            for l in range(1, r + 1):
                for ks in combinations_with_replacement(range(k + 1), l):
                    parts = [r ** k - r ** kj for kj in ks]
                    if sum(parts) >= prec:
                        continue
                    product = RatFunc.one(field_)
                    for part in parts:
                        product = product * h[part]
                    if not report.check(("product", k) + ks, h[sum(parts)], product):
                        return

    params = {'p': field_.p, 'e': field_.e, 'r': r, 'f': label, 'prec': prec, 'k_max': k_max}
    return run_check("h_relations", params, body, max_failures)


def verify_ht_rules(
    domain: CoefficientDomain,
    seed: Optional[int],
    trials: int = 20,
    prec: int = 10,
    max_order: int = 6,
    max_failures: int = MAX_FAILURES_PER_IDENTITY,
    identity_id: str = "ht_rules",
) -> IdentityReport:
    """Product rule and both quotient rules of the Hasse-Teichmueller derivative on random series."""
    if max_order >= prec:
        raise ValueError(f"max_order {max_order} needs precision > {max_order}, have {prec}")
    rng = make_rng(seed)

    def body(report: IdentityReport) -> None:
        for trial in range(trials):
            f1 = random_unit_series(domain, rng, prec)
            f2 = random_unit_series(domain, rng, prec)
            inverse = series_reciprocal(f1)
            product = f1 * f2
            for n in range(1, max_order + 1):
                if not _compare_series(report, f"product:{trial}:{n}", ht_derivative(product, n), ht_product_rule([f1, f2], n)):
                    return
                direct = ht_derivative(inverse, n)
                for rule in QUOTIENT_RULES:
                    if not _compare_series(report, f"{rule}:{trial}:{n}", direct, ht_quotient_check(f1, n, rule)):
                        return

    params = {'domain': str(domain), 'seed': seed, 'trials': trials, 'prec': prec, 'max_order': max_order}
    if isinstance(domain, FunctionFieldDomain):
        params.update({'p': domain.field.p, 'e': domain.field.e, 'r': domain.field.r})
    return run_check(identity_id, params, body, max_failures)


# -- classical side -------------------------------------------------------------


def verify_classical_cauchy(N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """c_n by all four methods; c_n^(1) and the poly-Cauchy numbers at k = 1 reduce to c_n."""
    _require_bound("N", N, 1)
    bound = min(N, 15)

    def body(report: IdentityReport) -> None:
        for n in range(1, bound + 1):
            value = cauchy_classical(n, "series")
            for method in CAUCHY_METHODS[:-1]:
                if not report.check((method, n), value, cauchy_classical(n, method)):
                    return
            if n <= 12:
                if not report.check(("order1", n), value, cauchy_order_classical(n, 1, "series")):
                    return
                if not report.check(("poly_cauchy", n), value, poly_cauchy(n, 1)):
                    return

    return run_check("classical_cauchy", {'N': bound}, body, max_failures)


def verify_classical_cauchy_order(N: int, orders=(1, 2, 3), max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """c_n^(m) by all four methods."""
    _require_bound("N", N, 1)
    bound = min(N, 12)

    def body(report: IdentityReport) -> None:
        for m in orders:
            for n in range(1, bound + 1):
                value = cauchy_order_classical(n, m, "series")
                for method in CAUCHY_ORDER_METHODS[:-1]:
                    if not report.check((method, n, m), value, cauchy_order_classical(n, m, method)):
                        return

    return run_check("classical_cauchy_order", {'N': bound, 'orders': list(orders)}, body, max_failures)


def verify_classical_stirling(N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """Stirling inversion, the composition-sum identity and the poly-Cauchy inversion."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(min(N, 15) + 1):
            for k in range(n + 1):
                delta = 1 if n == k else 0
                if not report.check(("inversion", n, k), delta, stirling_inversion_sum(n, k)):
                    return
                if not report.check(("inversion_mirror", n, k), delta, stirling_inversion_sum(n, k, first_outer=False)):
                    return
        for n in range(min(N, 10) + 1):
            for k in range(1, 6):
                if not report.check(("composition_sum", n, k), True, stirling_sum_identity_check(n, k)):
                    return
            for k in (1, 2):
                total = sum(stirling_classical("second", n, m) * poly_cauchy(m, k) for m in range(n + 1))
                if not report.check(("poly_cauchy", n, k), Fraction(1, (n + 1) ** k), total):
                    return

    return run_check("classical_stirling", {'N': N}, body, max_failures)


def verify_classical_bernoulli(N: int, max_failures: int = MAX_FAILURES_PER_IDENTITY) -> IdentityReport:
    """B_n from second-kind Stirling numbers against n! [z^n] z/(e^z - 1)."""
    _require_bound("N", N, 1)

    def body(report: IdentityReport) -> None:
        for n in range(N + 1):
            if not report.check((n,), bernoulli_classical(n, "series"), bernoulli_classical(n, "stirling")):
                return

    return run_check("classical_bernoulli", {'N': N}, body, max_failures)
