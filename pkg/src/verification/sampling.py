"""Seeded random polynomials, series and linear series for property checks."""

from fractions import Fraction
from typing import Optional

import numpy as np

from ..arith.finite_field import FieldParams
from ..arith.polynomial import Poly
from ..arith.ratfunc import RatFunc
from ..series.domains import QQ, CoefficientDomain, FunctionFieldDomain
from ..series.linear import LinearSeries
from ..series.power_series import Series


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_poly(field: FieldParams, rng: np.random.Generator, max_degree: int = 2) -> Poly:
    degree = int(rng.integers(0, max_degree + 1))
    return Poly(field, [int(c) for c in rng.integers(0, field.r, size=degree + 1)])


def random_ratfunc(field: FieldParams, rng: np.random.Generator, max_degree: int = 2, nonzero: bool = False) -> RatFunc:
    """num/den with a random monic denominator of degree <= max_degree."""
    num = random_poly(field, rng, max_degree)
    while nonzero and not num:
        num = random_poly(field, rng, max_degree)
    den_degree = int(rng.integers(0, max_degree + 1))
    den_codes = [int(c) for c in rng.integers(0, field.r, size=den_degree)] + [1]
    return RatFunc(num, Poly(field, den_codes))


def random_coefficient(domain: CoefficientDomain, rng: np.random.Generator, nonzero: bool = False):
    """Small random element: a polynomial of degree <= 1 over F_r, or a rational with |num|, den <= 5."""
    if isinstance(domain, FunctionFieldDomain):
        value = RatFunc.from_poly(random_poly(domain.field, rng, max_degree=1))
        while nonzero and not value:
            value = RatFunc.from_poly(random_poly(domain.field, rng, max_degree=1))
        return value
    value = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 6)))
    while nonzero and not value:
        value = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 6)))
    return value


def random_unit_series(domain: CoefficientDomain, rng: np.random.Generator, prec: int) -> Series:
    """Random series whose constant term is a nonzero constant, so its reciprocal is cheap."""
    if isinstance(domain, FunctionFieldDomain):
        head = RatFunc.constant(domain.field, int(rng.integers(1, domain.field.p)))
    else:
        head = random_coefficient(QQ, rng, nonzero=True)
    tail = [random_coefficient(domain, rng) for _ in range(prec - 1)]
    return Series(domain, [head] + tail, prec)


def random_linear_series(field: FieldParams, rng: np.random.Generator, order: int) -> LinearSeries:
    """F_r-linear series with random rational-function coefficients and f_0 != 0."""
    coeffs = [random_ratfunc(field, rng, nonzero=True)]
    coeffs += [random_ratfunc(field, rng) for _ in range(order - 1)]
    return LinearSeries(FunctionFieldDomain(field), tuple(coeffs))
