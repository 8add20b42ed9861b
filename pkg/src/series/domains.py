"""Coefficient domains for truncated power series.

A series is instantiated over exact rationals (the classical side) or over
F_r(T) (the Carlitz side). The domain supplies zero, one and the image of
integers, which is where characteristic p enters. Binomial and multinomial
weights come back as plain ints already reduced for the domain, since both
Fraction and RatFunc multiply by ints directly.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from ..arith.finite_field import FieldParams
from ..arith.lucas import binomial_mod_p, multinomial, multinomial_mod_p
from ..arith.ratfunc import RatFunc


class CoefficientDomain(ABC):
    """Exact field of series coefficients."""

    @property
    @abstractmethod
    def zero(self):
        ...

    @property
    @abstractmethod
    def one(self):
        ...

    @property
    @abstractmethod
    def characteristic(self) -> int:
        ...

    @abstractmethod
    def from_int(self, n: int):
        ...

    @abstractmethod
    def binomial(self, m: int, n: int) -> int:
        """C(m, n) as an int scalar for this domain."""

    @abstractmethod
    def multinomial(self, counts: Sequence[int]) -> int:
        """Number of orderings of a multiset, as an int scalar for this domain."""

    @abstractmethod
    def contains(self, value) -> bool:
        ...


@dataclass(frozen=True)
class RationalDomain(CoefficientDomain):
    """Q, with Fraction coefficients."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def binomial(self, m: int, n: int) -> int:
        return comb(m, n)

    def multinomial(self, counts: Sequence[int]) -> int:
        return multinomial(counts)

    def contains(self, value) -> bool:
        return isinstance(value, (Fraction, int))

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class FunctionFieldDomain(CoefficientDomain):
    """F_r(T), with RatFunc coefficients."""
    field: FieldParams

    @property
    def zero(self) -> RatFunc:
        return RatFunc.zero(self.field)

    @property
    def one(self) -> RatFunc:
        return RatFunc.one(self.field)

    @property
    def characteristic(self) -> int:
        return self.field.p

    @property
    def r(self) -> int:
        return self.field.r

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.constant(self.field, n)

    def binomial(self, m: int, n: int) -> int:
        return binomial_mod_p(m, n, self.field.p)

    def multinomial(self, counts: Sequence[int]) -> int:
        return multinomial_mod_p(counts, self.field.p)

    def contains(self, value) -> bool:
        return isinstance(value, RatFunc) and value.field == self.field

    def __str__(self) -> str:
        return f"F_{self.field.r}(T)"


QQ = RationalDomain()
