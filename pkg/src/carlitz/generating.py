"""The Carlitz exponential and logarithm as truncated series.

e_C(z) = sum z^(r^i)/D_i and log_C(z) = sum (-1)^i z^(r^i)/L_i. The
reciprocals z/log_C(z) and z/e_C(z) generate the Cauchy-Carlitz and
Bernoulli-Carlitz numbers; they are memoized per cache at the largest
precision requested so far.
"""

from ..arith.polynomial import Poly
from ..arith.ratfunc import RatFunc
from ..series.domains import FunctionFieldDomain
from ..series.linear import LinearSeries, h_coefficients, levels_for
from ..series.power_series import Series
from ..utils.logging_config import get_logger
from .towers import CarlitzCache, d_of, l_of

logger = get_logger(__name__)

GENERATORS = ("exp", "log")


def domain_of(cache: CarlitzCache) -> FunctionFieldDomain:
    return FunctionFieldDomain(cache.field)


def exp_coefficient(cache: CarlitzCache, i: int) -> RatFunc:
    """1/D_i."""
    return RatFunc(Poly.one(cache.field), d_of(cache, i), _reduced=True)


def log_coefficient(cache: CarlitzCache, i: int) -> RatFunc:
    """(-1)^i/L_i."""
    return RatFunc(Poly.constant(cache.field, (-1) ** i), l_of(cache, i), _reduced=True)


def carlitz_exp_linear(cache: CarlitzCache, order: int) -> LinearSeries:
    return LinearSeries(domain_of(cache), tuple(exp_coefficient(cache, i) for i in range(order)))


def carlitz_log_linear(cache: CarlitzCache, order: int) -> LinearSeries:
    return LinearSeries(domain_of(cache), tuple(log_coefficient(cache, i) for i in range(order)))


def carlitz_linear(cache: CarlitzCache, which: str, order: int) -> LinearSeries:
    if which == "exp":
        return carlitz_exp_linear(cache, order)
    if which == "log":
        return carlitz_log_linear(cache, order)
    raise ValueError(f"Unknown Carlitz generator '{which}', expected one of {GENERATORS}")


def _check_prec(prec: int) -> None:
    if prec < 1:
        raise ValueError(f"Series precision must be >= 1, got {prec}")


def carlitz_exp_series(cache: CarlitzCache, prec: int) -> Series:
    """e_C(z) + O(z^prec)."""
    _check_prec(prec)
    return carlitz_exp_linear(cache, levels_for(cache.r, prec - 1)).to_series(prec)


def carlitz_log_series(cache: CarlitzCache, prec: int) -> Series:
    """log_C(z) + O(z^prec)."""
    _check_prec(prec)
    return carlitz_log_linear(cache, levels_for(cache.r, prec - 1)).to_series(prec)


def carlitz_series(cache: CarlitzCache, which: str, prec: int) -> Series:
    _check_prec(prec)
    return carlitz_linear(cache, which, levels_for(cache.r, prec - 1)).to_series(prec)


def reciprocal_series(cache: CarlitzCache, which: str, prec: int) -> Series:
    """z/e_C(z) (``exp``) or z/log_C(z) (``log``) + O(z^prec)."""
    _check_prec(prec)
    key = ("reciprocal", which)
    with cache._lock:
        cached = cache.memo.get(key)
        if cached is not None and cached.prec >= prec:
            return cached.truncate(prec)
        f = carlitz_linear(cache, which, levels_for(cache.r, prec))
        series = h_coefficients(f, prec)
        cache.memo[key] = series
        logger.debug(f"Computed z/{which}_C(z) over F_{cache.r} to precision {prec}")
        return series


def z_over_log_series(cache: CarlitzCache, prec: int) -> Series:
    return reciprocal_series(cache, "log", prec)


def z_over_exp_series(cache: CarlitzCache, prec: int) -> Series:
    return reciprocal_series(cache, "exp", prec)
