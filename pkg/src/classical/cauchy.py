"""Classical Cauchy numbers, Cauchy numbers of higher order and poly-Cauchy numbers.

c_n is defined by z/log(1+z) = sum c_n z^n/n! and c_n^(m) by the m-th power
of the same series. Every family is available through several independent
formulas; they agree exactly over Q.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator, Tuple, Union

from ..arith.compositions import iter_multisets, multiplicities
from ..arith.lucas import multinomial
from ..series.domains import QQ
from ..series.power_series import Series, series_pow, series_reciprocal
from ..utils.logging_config import get_logger
from ..utils.performance import performance_monitor
from .stirling import stirling_classical

logger = get_logger(__name__)

CAUCHY_METHODS = ("compositions", "weighted", "stirling", "series")
CAUCHY_ORDER_METHODS = ("compositions", "weighted", "stirling", "series")
BERNOULLI_METHODS = ("stirling", "series")
CLASSICAL_TABLE_KINDS = ("cauchy", "cauchy_m", "poly_cauchy", "stirling1", "stirling2")


def log1p_over_z(prec: int) -> Series:
    """log(1+z)/z = sum (-1)^j z^j/(j+1)."""
    return Series(QQ, [Fraction((-1) ** j, j + 1) for j in range(prec)], prec)


def expm1_over_z(prec: int) -> Series:
    """(e^z - 1)/z = sum z^j/(j+1)!."""
    return Series(QQ, [Fraction(1, factorial(j + 1)) for j in range(prec)], prec)


def _inverse_part_sum(n: int, k: int, lowest: int) -> Fraction:
    """sum over ordered i_1..i_k >= lowest with i_1+...+i_k = n+k of 1/(i_1...i_k)."""
    total = Fraction(0)
    for multiset in iter_multisets(k, n + k, range(lowest, n + 2)):
        denominator = 1
        for part, mult in multiset:
            denominator *= part ** mult
        total += Fraction(multinomial(multiplicities(multiset)), denominator)
    return total


def cauchy_classical(n: int, method: str = "series") -> Fraction:
    """c_n by the named method."""
    if method not in CAUCHY_METHODS:
        raise ValueError(f"Method must be one of {CAUCHY_METHODS}, got '{method}'")
    if method == "series":
        if n < 0:
            raise ValueError(f"c_n needs n >= 0, got {n}")
        return series_reciprocal(log1p_over_z(n + 1))[n] * factorial(n)
    if n < 1:
        raise ValueError(f"Method '{method}' needs n >= 1, got {n}")
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        if method == "compositions":
            total += sign * _inverse_part_sum(n, k, lowest=2)
        elif method == "weighted":
            total += sign * comb(n + 1, k + 1) * _inverse_part_sum(n, k, lowest=1)
        else:
            total += sign * Fraction(comb(n + 1, k + 1) * stirling_classical("first", n + k, k), comb(n + k, n))
    if method == "stirling":
        return (-1) ** n * total
    return (-1) ** n * factorial(n) * total


def _order_part_weight(i: int, m: int) -> Fraction:
    """[[i+m, m]] / (C(i+m, m) i!), the per-part factor of the higher-order formulas."""
    return Fraction(stirling_classical("first", i + m, m), comb(i + m, m) * factorial(i))


def _order_part_sum(n: int, k: int, m: int, lowest: int) -> Fraction:
    """sum over ordered i_1..i_k >= lowest summing to n of C(n; i) prod [[i_j+m, m]]/C(i_j+m, m)."""
    total = Fraction(0)
    for multiset in iter_multisets(k, n, range(lowest, n + 1)):
        term = Fraction(multinomial(multiplicities(multiset)) * factorial(n))
        for part, mult in multiset:
            term *= _order_part_weight(part, m) ** mult
        total += term
    return total


def cauchy_order_classical(n: int, m: int, method: str = "series") -> Fraction:
    """c_n^(m) by the named method."""
    if method not in CAUCHY_ORDER_METHODS:
        raise ValueError(f"Method must be one of {CAUCHY_ORDER_METHODS}, got '{method}'")
    if m < 1:
        raise ValueError(f"Order m must be >= 1, got {m}")
    if method == "series":
        if n < 0:
            raise ValueError(f"c_n^(m) needs n >= 0, got {n}")
        base = series_reciprocal(log1p_over_z(n + 1))
        return series_pow(base, m)[n] * factorial(n)
    if n < 1:
        raise ValueError(f"Method '{method}' needs n >= 1, got {n}")
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        if method == "compositions":
            total += sign * _order_part_sum(n, k, m, lowest=1)
        elif method == "weighted":
            total += sign * comb(n + 1, k + 1) * _order_part_sum(n, k, m, lowest=0)
        else:
            total += sign * Fraction(
                comb(n + 1, k + 1) * stirling_classical("first", n + m * k, m * k), comb(n + m * k, n)
            )
    return (-1) ** n * total


def poly_cauchy(n: int, k: int) -> Fraction:
    """sum_m [[n m]] (-1)^(n-m) / (m+1)^k."""
    if n < 0:
        raise ValueError(f"Poly-Cauchy numbers need n >= 0, got {n}")
    if k < 1:
        raise ValueError(f"Poly-Cauchy index k must be >= 1, got {k}")
    return sum(
        (Fraction((-1) ** (n - m) * stirling_classical("first", n, m), (m + 1) ** k) for m in range(n + 1)),
        Fraction(0),
    )


def stirling_sum_identity_check(n: int, k: int) -> bool:
    """sum_{i_1+...+i_k = n, i_j >= 0} 1/((i_1+1)...(i_k+1)) == k!/(n+k)! [[n+k, k]]."""
    if n < 0 or k < 1:
        raise ValueError(f"Identity needs n >= 0 and k >= 1, got ({n}, {k})")
    left = Fraction(0)
    for multiset in iter_multisets(k, n, range(0, n + 1)):
        denominator = 1
        for part, mult in multiset:
            denominator *= (part + 1) ** mult
        left += Fraction(multinomial(multiplicities(multiset)), denominator)
    right = Fraction(factorial(k) * stirling_classical("first", n + k, k), factorial(n + k))
    return left == right


def bernoulli_classical(n: int, method: str = "stirling") -> Fraction:
    """B_n for z/(e^z - 1) (B_1 = -1/2), from second-kind Stirling numbers or from the series."""
    if method not in BERNOULLI_METHODS:
        raise ValueError(f"Method must be one of {BERNOULLI_METHODS}, got '{method}'")
    if n < 0:
        raise ValueError(f"B_n needs n >= 0, got {n}")
    if method == "series":
        return series_reciprocal(expm1_over_z(n + 1))[n] * factorial(n)
    return sum(
        (Fraction((-1) ** m * factorial(m) * stirling_classical("second", n, m), m + 1) for m in range(n + 1)),
        Fraction(0),
    )


Index = Union[int, Tuple[int, int]]


@dataclass
class ClassicalTable:
    """Exact classical values keyed by n, or by (n, k) for the Stirling kinds."""
    kind: str
    order: int = 1
    values: Dict[Index, Fraction] = field(default_factory=dict)

    def rows(self) -> Iterator[Tuple[int, int, Fraction]]:
        for index in sorted(self.values, key=lambda x: x if isinstance(x, tuple) else (x, 0)):
            if isinstance(index, tuple):
                yield index[0], index[1], self.values[index]
            else:
                yield index, 0, self.values[index]

    def check_boundaries(self):
        if self.kind not in ("stirling1", "stirling2"):
            return []
        problems = []
        for (n, k), value in self.values.items():
            if n == k and value != 1:
                problems.append(f"diagonal ({n}, {k}) is {value}, expected 1")
            elif (k == 0 < n or n < k) and value:
                problems.append(f"entry ({n}, {k}) is {value}, expected 0")
        return problems


@performance_monitor
def classical_table(kind: str, max_n: int, order: int = 1) -> ClassicalTable:
    """Values for n = 0..max_n; ``order`` is m for cauchy_m and k for poly_cauchy."""
    if kind not in CLASSICAL_TABLE_KINDS:
        raise ValueError(f"Unknown classical kind '{kind}', expected one of {CLASSICAL_TABLE_KINDS}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    table = ClassicalTable(kind=kind, order=order if kind in ("cauchy_m", "poly_cauchy") else 1)
    if kind == "cauchy":
        inverse = series_reciprocal(log1p_over_z(max_n + 1))
        table.values = {n: inverse[n] * factorial(n) for n in range(max_n + 1)}
    elif kind == "cauchy_m":
        power = series_pow(series_reciprocal(log1p_over_z(max_n + 1)), order)
        table.values = {n: power[n] * factorial(n) for n in range(max_n + 1)}
    elif kind == "poly_cauchy":
        table.values = {n: poly_cauchy(n, order) for n in range(max_n + 1)}
    else:
        stirling_kind = "first" if kind == "stirling1" else "second"
        table.values = {
            (n, k): Fraction(stirling_classical(stirling_kind, n, k)) for n in range(max_n + 1) for k in range(n + 1)
        }
    return table
