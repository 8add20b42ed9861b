"""F_r-linear series f(z) = sum_i f_i z^(r^i) over F_r(T)."""

from dataclasses import dataclass
from typing import Tuple

from ..arith.ratfunc import RatFunc
from ..utils.logging_config import get_logger
from .domains import FunctionFieldDomain
from .power_series import Series, series_reciprocal

logger = get_logger(__name__)


@dataclass(frozen=True)
class LinearSeries:
    """Coefficients f_0, f_1, ... of z, z^r, z^(r^2), ..."""
    domain: FunctionFieldDomain
    coeffs: Tuple[RatFunc, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def r(self) -> int:
        return self.domain.field.r

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, i: int) -> RatFunc:
        return self.coeffs[i] if i < len(self.coeffs) else self.domain.zero

    def exponent(self, i: int) -> int:
        return self.r ** i

    def to_series(self, prec: int) -> Series:
        """Dense truncation of f(z); terms with r^i >= prec are dropped."""
        terms = {self.r ** i: c for i, c in enumerate(self.coeffs) if c and self.r ** i < prec}
        return Series.from_terms(self.domain, terms, prec)

    def over_z(self, prec: int) -> Series:
        """f(z)/z, whose coefficient of z^(r^i - 1) is f_i."""
        terms = {self.r ** i - 1: c for i, c in enumerate(self.coeffs) if c and self.r ** i - 1 < prec}
        return Series.from_terms(self.domain, terms, prec)


def levels_for(r: int, prec: int) -> int:
    """Number of indices i with r^i <= prec."""
    count, power = 0, 1
    while power <= prec:
        count += 1
        power *= r
    return count


def linear_series_inverse(f: LinearSeries, order: int) -> LinearSeries:
    """Compositional inverse g with f(g(z)) = z through ``order`` terms.

    g_0 = 1/f_0 and f_0 g_i = -sum_{j=1..i} f_j g_{i-j}^(r^j); the r^j-th
    power of a coefficient is a Frobenius twist.
    """
    if order < 1:
        raise ValueError(f"Inverse order must be >= 1, got {order}")
    f0 = f.coefficient(0)
    if not f0:
        raise ValueError("Linear series with f_0 = 0 has no compositional inverse")
    inv_f0 = f0.inverse()
    g = [inv_f0]
    for i in range(1, order):
        acc = f.domain.zero
        for j in range(1, i + 1):
            fj = f.coefficient(j)
            if fj and g[i - j]:
                acc = acc + fj * g[i - j].frobenius(j)
        g.append(-(acc * inv_f0))
    return LinearSeries(f.domain, tuple(g))


def h_coefficients(f: LinearSeries, prec: int) -> Series:
    """h(z) = z f'(z)/f(z) = f_0 z/f(z), since d/dz z^(r^i) = 0 for i >= 1."""
    f0 = f.coefficient(0)
    if not f0:
        raise ValueError("h(z) needs f_0 != 0")
    return series_reciprocal(f.over_z(prec)) * f0
