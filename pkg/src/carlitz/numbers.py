"""Stirling-Carlitz, Cauchy-Carlitz and Bernoulli-Carlitz numbers.

Each family has at least two independent computation paths: coefficient
extraction from the defining generating series, a finite sum over Stirling
numbers, and an expansion by Hasse-Teichmueller derivatives that needs only
the towers L_i (or D_i).
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Tuple, Union

from ..arith.compositions import Multiset, group_by_size, iter_multisets, multiplicities
from ..arith.lucas import multinomial_mod_p
from ..arith.polynomial import Poly
from ..arith.ratfunc import RatFunc
from ..series.power_series import Series, series_pow
from ..utils.logging_config import get_logger
from ..utils.performance import performance_monitor
from .generating import carlitz_series, z_over_exp_series, z_over_log_series
from .towers import CarlitzCache, carlitz_factorial, d_of, digit_sum, l_of, tower_depth

logger = get_logger(__name__)

STIRLING_KINDS = ("first", "second")
CARLITZ_TABLE_KINDS = ("CC", "BC", "CCm", "stf_C", "sts_C")
CC_ORDER_METHODS = ("expansion", "direct")

# smallest precision a Stirling power row is built at
ROW_PRECISION_FLOOR = 16

Index = Union[int, Tuple[int, int]]


def _ratfunc(poly: Poly) -> RatFunc:
    return RatFunc.from_poly(poly)


def _check_kind(kind: str) -> str:
    if kind not in STIRLING_KINDS:
        raise ValueError(f"Stirling kind must be one of {STIRLING_KINDS}, got '{kind}'")
    return "log" if kind == "first" else "exp"


def _power_row(cache: CarlitzCache, kind: str, k: int, prec: int) -> Series:
    """(log_C z)^k or (e_C z)^k to at least ``prec``; rows grow one multiplication per k."""
    generator = _check_kind(kind)
    key = ("powers", kind)
    with cache._lock:
        entry = cache.memo.get(key)
        if entry is None or entry[0] < prec:
            old = entry[0] if entry else 0
            new_prec = max(prec, 2 * old, ROW_PRECISION_FLOOR)
            base = carlitz_series(cache, generator, new_prec)
            entry = (new_prec, [Series.one(base.domain, new_prec), base])
            cache.memo[key] = entry
            logger.debug(f"Rebuilt {generator}_C power rows over F_{cache.r} at precision {new_prec}")
        powers = entry[1]
        while len(powers) <= k:
            powers.append(powers[-1] * powers[1])
        return powers[k]


def stirling_carlitz(cache: CarlitzCache, kind: str, n: int, k: int) -> RatFunc:
    """[[n k]]_C (``first``) or {n k}_C (``second``).

    Pi(n)/Pi(k) times the coefficient of z^n in (log_C z)^k, resp. (e_C z)^k.
    """
    _check_kind(kind)
    if n < 0 or k < 0:
        raise ValueError(f"Stirling-Carlitz indices must be >= 0, got ({n}, {k})")
    field_ = cache.field
    if k > n:
        return RatFunc.zero(field_)
    if k == 0:
        return RatFunc.one(field_) if n == 0 else RatFunc.zero(field_)
    coefficient = _power_row(cache, kind, k, n + 1)[n]
    if not coefficient:
        return coefficient
    return coefficient * carlitz_factorial(cache, n) / carlitz_factorial(cache, k)


def stirling_carlitz_closed_form(cache: CarlitzCache, kind: str, a: int, b: int) -> RatFunc:
    """Stirling-Carlitz numbers at (r^a, r^b) as products of D_i and L_j."""
    _check_kind(kind)
    if a < b or b < 0:
        raise ValueError(f"Closed form needs a >= b >= 0, got a={a}, b={b}")
    ratio_num, ratio_den = d_of(cache, a), d_of(cache, b)
    if kind == "first":
        sign = Poly.constant(cache.field, (-1) ** (a - b))
        return RatFunc(ratio_num * sign, ratio_den * l_of(cache, a - b).frobenius(b))
    return RatFunc(ratio_num, ratio_den * d_of(cache, a - b).frobenius(b))


def _tower_indices(cache: CarlitzCache, n: int) -> Iterator[int]:
    """j = 0, 1, ... while r^j - 1 <= n."""
    j = 0
    while cache.r ** j - 1 <= n:
        yield j
        j += 1


def cauchy_carlitz(cache: CarlitzCache, n: int) -> RatFunc:
    """CC_n = sum_j [[n, r^j - 1]]_C / L_j."""
    if n < 0:
        raise ValueError(f"CC_n needs n >= 0, got {n}")
    total = RatFunc.zero(cache.field)
    for j in _tower_indices(cache, n):
        s = stirling_carlitz(cache, "first", n, cache.r ** j - 1)
        if s:
            total = total + s / l_of(cache, j)
    return total


def cauchy_carlitz_direct(cache: CarlitzCache, n: int) -> RatFunc:
    """Pi(n) [z^n] z/log_C(z)."""
    if n < 0:
        raise ValueError(f"CC_n needs n >= 0, got {n}")
    coefficient = z_over_log_series(cache, n + 1)[n]
    return coefficient * carlitz_factorial(cache, n) if coefficient else coefficient


def cauchy_carlitz_ht_terms(r: int, n: int) -> Dict[int, List[Multiset]]:
    """Multisets {i_1, ..., i_k}, i_j >= 1, with r^(i_1) + ... + r^(i_k) = n + k, grouped by k."""
    if n < 1:
        raise ValueError(f"The Hasse-Teichmueller expansion needs n >= 1, got {n}")
    parts = range(1, tower_depth(2 * n, r) + 1)
    return group_by_size(range(1, n + 1), lambda k: n + k, parts, lambda i: r ** i)


def _ht_expansion(cache: CarlitzCache, n: int, denominator: Callable[[int], Poly], signed: bool) -> RatFunc:
    """Pi(n) sum_k (-1)^k sum over multisets of count * prod sign_i / den_i."""
    field_ = cache.field
    total = RatFunc.zero(field_)
    for k, solutions in cauchy_carlitz_ht_terms(cache.r, n).items():
        for multiset in solutions:
            count = multinomial_mod_p(multiplicities(multiset), cache.p)
            if not count:
                continue
            exponent_sum = sum(i * mult for i, mult in multiset) if signed else 0
            sign = (-1) ** ((k + exponent_sum) % 2)
            den = Poly.one(field_)
            for i, mult in multiset:
                den = den * denominator(i) ** mult
            total = total + RatFunc(Poly.constant(field_, sign * count), den)
    if not total:
        return total
    return total * carlitz_factorial(cache, n)


def cauchy_carlitz_ht(cache: CarlitzCache, n: int) -> RatFunc:
    """CC_n = Pi(n) sum_k (-1)^k sum (-1)^(i_1+...+i_k) / (L_(i_1) ... L_(i_k))."""
    return _ht_expansion(cache, n, lambda i: l_of(cache, i), signed=True)


def bernoulli_carlitz(cache: CarlitzCache, n: int) -> RatFunc:
    """BC_n = sum_j (-1)^j D_j / L_j^2 {n, r^j - 1}_C."""
    if n < 0:
        raise ValueError(f"BC_n needs n >= 0, got {n}")
    field_ = cache.field
    total = RatFunc.zero(field_)
    for j in _tower_indices(cache, n):
        s = stirling_carlitz(cache, "second", n, cache.r ** j - 1)
        if s:
            weight = RatFunc(d_of(cache, j) * Poly.constant(field_, (-1) ** j), l_of(cache, j) ** 2)
            total = total + s * weight
    return total


def bernoulli_carlitz_direct(cache: CarlitzCache, n: int) -> RatFunc:
    """Pi(n) [z^n] z/e_C(z)."""
    if n < 0:
        raise ValueError(f"BC_n needs n >= 0, got {n}")
    coefficient = z_over_exp_series(cache, n + 1)[n]
    return coefficient * carlitz_factorial(cache, n) if coefficient else coefficient


def bernoulli_carlitz_ht(cache: CarlitzCache, n: int) -> RatFunc:
    """BC_n = Pi(n) sum_k (-1)^k sum 1 / (D_(i_1) ... D_(i_k)) over the same multisets as CC_n."""
    return _ht_expansion(cache, n, lambda i: d_of(cache, i), signed=False)


def _order_m_terms(cache: CarlitzCache, m: int, i: int) -> RatFunc:
    """M^(m)(i): sum over j_1..j_m >= 0 with sum r^(j_l) = i + m of (-1)^(sum j) / prod L_j."""
    field_ = cache.field
    parts = range(0, tower_depth(i + m, cache.r) + 1)
    total = RatFunc.zero(field_)
    for multiset in iter_multisets(m, i + m, parts, lambda j: cache.r ** j):
        count = multinomial_mod_p(multiplicities(multiset), cache.p)
        if not count:
            continue
        sign = (-1) ** (sum(j * mult for j, mult in multiset) % 2)
        den = Poly.one(field_)
        for j, mult in multiset:
            den = den * l_of(cache, j) ** mult
        total = total + RatFunc(Poly.constant(field_, sign * count), den)
    return total


def cauchy_carlitz_order(cache: CarlitzCache, n: int, m: int, method: str = "direct") -> RatFunc:
    """CC_n^(m), from (z/log_C z)^m (``direct``) or from the M^(m) expansion (``expansion``)."""
    if method not in CC_ORDER_METHODS:
        raise ValueError(f"Method must be one of {CC_ORDER_METHODS}, got '{method}'")
    if m < 1:
        raise ValueError(f"Order m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"CC_n^(m) needs n >= 0, got {n}")
    field_ = cache.field
    if method == "direct":
        key = ("cc_order", m)
        with cache._lock:
            cached = cache.memo.get(key)
            if cached is None or cached.prec < n + 1:
                old = cached.prec if cached is not None else 0
                new_prec = max(n + 1, 2 * old, ROW_PRECISION_FLOOR)
                cached = series_pow(z_over_log_series(cache, new_prec), m)
                cache.memo[key] = cached
        coefficient = cached[n]
        return coefficient * carlitz_factorial(cache, n) if coefficient else coefficient
    if n < 1:
        raise ValueError(f"The M^(m) expansion needs n >= 1, got {n}")
    m_values = {i: _order_m_terms(cache, m, i) for i in range(1, n + 1)}
    total = RatFunc.zero(field_)
    for k in range(1, n + 1):
        for multiset in iter_multisets(k, n, range(1, n + 1)):
            count = multinomial_mod_p(multiplicities(multiset), cache.p)
            if not count:
                continue
            term = RatFunc.constant(field_, (-1) ** k * count)
            for i, mult in multiset:
                term = term * m_values[i] ** mult
                if not term:
                    break
            total = total + term
    return total * carlitz_factorial(cache, n) if total else total


def check_digit_vanishing(cache: CarlitzCache, n: int, m: int) -> bool:
    """If lambda(n) > lambda(m) both Stirling-Carlitz numbers at (n, m) vanish; vacuous otherwise."""
    if n < 1 or m < 1:
        raise ValueError(f"Digit vanishing is stated for n, m >= 1, got ({n}, {m})")
    if digit_sum(n, cache.r) <= digit_sum(m, cache.r):
        return True
    return not stirling_carlitz(cache, "first", n, m) and not stirling_carlitz(cache, "second", n, m)


@dataclass
class CarlitzNumberTable:
    """Computed values keyed by n, or by (n, k) for the Stirling-Carlitz kinds."""
    kind: str
    r: int
    order: int = 1
    values: Dict[Index, RatFunc] = field(default_factory=dict)

    @property
    def is_triangular(self) -> bool:
        return self.kind in ("stf_C", "sts_C")

    def rows(self) -> Iterator[Tuple[int, int, RatFunc]]:
        """(n, k, value) with k = 0 for one-index kinds, in index order."""
        for index in sorted(self.values, key=lambda x: x if isinstance(x, tuple) else (x, 0)):
            if isinstance(index, tuple):
                yield index[0], index[1], self.values[index]
            else:
                yield index, 0, self.values[index]

    def check_boundaries(self) -> List[str]:
        """Violations of value(n, 0) = 0 for n >= 1, value(n, n) = 1 and value(n, m) = 0 for n < m."""
        if not self.is_triangular:
            return []
        problems = []
        for (n, k), value in self.values.items():
            if n == k and value != 1:
                problems.append(f"diagonal ({n}, {k}) is {value}, expected 1")
            elif (k == 0 < n or n < k) and value:
                problems.append(f"entry ({n}, {k}) is {value}, expected 0")
        return problems


@performance_monitor
def carlitz_table(cache: CarlitzCache, kind: str, max_n: int, order: int = 1) -> CarlitzNumberTable:
    """Values for n = 0..max_n (and 0 <= k <= n for the Stirling-Carlitz kinds)."""
    if kind not in CARLITZ_TABLE_KINDS:
        raise ValueError(f"Unknown Carlitz kind '{kind}', expected one of {CARLITZ_TABLE_KINDS}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    table = CarlitzNumberTable(kind=kind, r=cache.r, order=order if kind == "CCm" else 1)
    for n in range(max_n + 1):
        if kind == "CC":
            table.values[n] = cauchy_carlitz(cache, n)
        elif kind == "BC":
            table.values[n] = bernoulli_carlitz(cache, n)
        elif kind == "CCm":
            table.values[n] = cauchy_carlitz_order(cache, n, order, "direct")
        else:
            stirling_kind = "first" if kind == "stf_C" else "second"
            for k in range(n + 1):
                table.values[(n, k)] = stirling_carlitz(cache, stirling_kind, n, k)
    logger.debug(f"Built {kind} table over F_{cache.r} for n <= {max_n}")
    return table
