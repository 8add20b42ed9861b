"""Truncated formal power series with Hasse-Teichmueller derivatives.

A ``Series`` stores the coefficients of z^0 .. z^(prec-1); everything at or
above ``prec`` is unknown. Results of binary operations carry the minimum
precision of their operands.
"""

from itertools import product as cartesian
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..arith.compositions import iter_multisets, multiplicities
from ..arith.finite_field import FieldMismatchError
from ..utils.logging_config import get_logger
from .domains import CoefficientDomain

logger = get_logger(__name__)

QUOTIENT_RULES = ("rule1", "rule2")


class Series:
    """Immutable truncated power series over a coefficient domain."""

    __slots__ = ("domain", "coeffs", "prec")

    def __init__(self, domain: CoefficientDomain, coeffs: Iterable, prec: Optional[int] = None):
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs)
        if prec < 0:
            raise ValueError(f"Series precision must be >= 0, got {prec}")
        if len(coeffs) > prec:
            coeffs = coeffs[:prec]
        else:
            coeffs.extend([domain.zero] * (prec - len(coeffs)))
        self.domain = domain
        self.coeffs: Tuple = tuple(coeffs)
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain: CoefficientDomain, prec: int) -> "Series":
        return cls(domain, (), prec)

    @classmethod
    def one(cls, domain: CoefficientDomain, prec: int) -> "Series":
        return cls(domain, [domain.one], prec)

    @classmethod
    def z(cls, domain: CoefficientDomain, prec: int) -> "Series":
        return cls(domain, [domain.zero, domain.one], prec)

    @classmethod
    def from_terms(cls, domain: CoefficientDomain, terms: Mapping[int, object], prec: int) -> "Series":
        """Series with the given {exponent: coefficient} entries; exponents >= prec are dropped."""
        coeffs = [domain.zero] * prec
        for exponent, value in terms.items():
            if exponent < 0:
                raise ValueError(f"Negative exponent {exponent} is not supported")
            if exponent < prec:
                coeffs[exponent] = value
        return cls(domain, coeffs, prec)

    # -- access ------------------------------------------------------------

    def __getitem__(self, n: int):
        if not 0 <= n < self.prec:
            raise IndexError(f"Coefficient z^{n} is outside precision {self.prec}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.prec

    def terms(self) -> Iterator[Tuple[int, object]]:
        """Nonzero (exponent, coefficient) pairs in ascending order."""
        return ((n, c) for n, c in enumerate(self.coeffs) if c)

    def valuation(self) -> Optional[int]:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, prec: int) -> "Series":
        if prec >= self.prec:
            return self
        return Series(self.domain, self.coeffs[:prec], prec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.domain == other.domain and self.prec == other.prec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.domain, self.prec, self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*z^{n}" for n, c in self.terms()) or "0"
        return f"Series({body} + O(z^{self.prec}))"

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Series") -> None:
        if self.domain != other.domain:
            raise FieldMismatchError(f"Cannot combine series over {self.domain} and {other.domain}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return series_arith(self, other, "add")

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return series_arith(self, other, "sub")

    def __neg__(self) -> "Series":
        return Series(self.domain, [-c if c else c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_arith(self, other, "mul")
        # scalar: a domain element or an int
        return Series(self.domain, [c * other if c else c for c in self.coeffs], self.prec)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int) -> "Series":
        return series_pow(self, k)

    def scale(self, c) -> "Series":
        """a(c*z): the coefficient of z^n is multiplied by c^n."""
        coeffs = []
        power = self.domain.one
        for n, a in enumerate(self.coeffs):
            coeffs.append(a * power if a else a)
            if n + 1 < self.prec:
                power = power * c
        return Series(self.domain, coeffs, self.prec)

    def substitute_power(self, k: int, prec: Optional[int] = None) -> "Series":
        """a(z^k). Known terms reach z^(k*prec - 1); ``prec`` caps the result."""
        if k < 1:
            raise ValueError(f"substitute_power needs k >= 1, got {k}")
        new_prec = k * self.prec if prec is None else min(prec, k * self.prec)
        terms = {n * k: c for n, c in self.terms()}
        return Series.from_terms(self.domain, terms, new_prec)


def _nonzero(coeffs: Sequence) -> List[Tuple[int, object]]:
    return [(n, c) for n, c in enumerate(coeffs) if c]


def _mul_truncated(domain: CoefficientDomain, a: Sequence, b: Sequence, prec: int) -> List:
    buckets: Dict[int, List] = {}
    right = _nonzero(b[:prec])
    for i, x in _nonzero(a[:prec]):
        for j, y in right:
            if i + j >= prec:
                break
            buckets.setdefault(i + j, []).append(x * y)
    out = [domain.zero] * prec
    for n, products in buckets.items():
        total = products[0]
        for value in products[1:]:
            total = total + value
        out[n] = total
    return out


def series_arith(a: Series, b: Series, kind: str) -> Series:
    """add, sub or mul at the smaller of the two precisions."""
    a._check(b)
    prec = min(a.prec, b.prec)
    if kind == "add":
        return Series(a.domain, [x + y for x, y in zip(a.coeffs[:prec], b.coeffs[:prec])], prec)
    if kind == "sub":
        return Series(a.domain, [x - y for x, y in zip(a.coeffs[:prec], b.coeffs[:prec])], prec)
    if kind == "mul":
        return Series(a.domain, _mul_truncated(a.domain, a.coeffs, b.coeffs, prec), prec)
    raise ValueError(f"Unknown series operation '{kind}'")


def series_reciprocal(a: Series) -> Series:
    """b with a*b = 1 + O(z^prec), by the triangular coefficient recurrence."""
    if a.prec == 0:
        return a
    a0 = a.coeffs[0]
    if not a0:
        raise ValueError("Series with zero constant term has no reciprocal")
    inv0 = a.domain.one / a0
    tail = [(i, c) for i, c in _nonzero(a.coeffs) if i > 0]
    b = [inv0]
    for n in range(1, a.prec):
        acc = None
        for i, c in tail:
            if i > n:
                break
            prev = b[n - i]
            if prev:
                term = c * prev
                acc = term if acc is None else acc + term
        b.append(-(acc * inv0) if acc is not None else a.domain.zero)
    return Series(a.domain, b, a.prec)


def series_pow(a: Series, k: int) -> Series:
    """a^k by binary exponentiation, truncated after every multiplication."""
    if k < 0:
        raise ValueError(f"series_pow needs k >= 0, got {k}")
    if k == 0:
        return Series.one(a.domain, a.prec)
    v = a.valuation()
    if v is None or v * k >= a.prec:
        return Series.zero(a.domain, a.prec)
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(z)) for inner with zero constant term.

    Dense outer series use Horner's scheme; sparse ones (such as the
    F_r-linear Carlitz series) sum c_i * inner^i over the nonzero c_i only.
    """
    outer._check(inner)
    prec = min(outer.prec, inner.prec)
    if prec and inner.coeffs[0]:
        raise ValueError("Inner series of a composition must have zero constant term")
    if prec == 0:
        return Series.zero(outer.domain, 0)
    inner = inner.truncate(prec)
    support = _nonzero(outer.coeffs[:prec])
    if not support:
        return Series.zero(outer.domain, prec)
    if 2 * len(support) > prec:
        result = Series(outer.domain, [outer.coeffs[prec - 1]], prec)
        for i in range(prec - 2, -1, -1):
            result = result * inner + Series(outer.domain, [outer.coeffs[i]], prec)
        return result
    total = Series.zero(outer.domain, prec)
    last_index, power = 0, Series.one(outer.domain, prec)
    for i, c in support:
        power = power * series_pow(inner, i - last_index)
        last_index = i
        total = total + power * c
    return total


def ht_derivative(a: Series, n: int) -> Series:
    """H^(n): z^m -> C(m, n) z^(m-n); the result has precision prec - n."""
    if n < 0:
        raise ValueError(f"Hasse-Teichmueller order must be >= 0, got {n}")
    if n >= a.prec:
        raise ValueError(f"Hasse-Teichmueller order {n} needs precision > {n}, have {a.prec}")
    if n == 0:
        return a
    domain = a.domain
    coeffs = []
    for m in range(n, a.prec):
        c = a.coeffs[m]
        weight = domain.binomial(m, n) if c else 0
        coeffs.append(c * weight if weight else domain.zero)
    return Series(domain, coeffs, a.prec - n)


def ht_value_at_zero(a: Series, n: int):
    """H^(n)(a) evaluated at z = 0, i.e. the coefficient of z^n."""
    return ht_derivative(a, n).coeffs[0]


def ht_product_rule(factors: Sequence[Series], n: int) -> Series:
    """Right-hand side of the product rule: sum over i_1+...+i_k = n of prod H^(i_j)(f_j)."""
    if not factors:
        raise ValueError("ht_product_rule needs at least one factor")
    domain = factors[0].domain
    prec = min(f.prec for f in factors) - n
    if prec <= 0:
        raise ValueError(f"Order {n} leaves no precision for the product")
    derivs = [[ht_derivative(f, i).truncate(prec) for i in range(n + 1)] for f in factors]
    total = Series.zero(domain, prec)
    for split in cartesian(range(n + 1), repeat=len(factors) - 1):
        last = n - sum(split)
        if last < 0:
            continue
        term = Series.one(domain, prec)
        for f_index, order in enumerate(split + (last,)):
            term = term * derivs[f_index][order]
        total = total + term
    return total


def ht_quotient_check(f: Series, n: int, variant: str = "rule1") -> Series:
    """Evaluate a quotient-rule expansion of H^(n)(1/f) as a series of precision prec - n.

    ``rule1`` sums over compositions of n into k parts >= 1; ``rule2`` sums
    over parts >= 0 with the weight C(n+1, k+1). Each unordered solution is
    visited once and weighted by its number of orderings.
    """
    if variant not in QUOTIENT_RULES:
        raise ValueError(f"Unknown quotient rule '{variant}', expected one of {QUOTIENT_RULES}")
    if n < 1 or n >= f.prec:
        raise ValueError(f"Quotient rule order must satisfy 1 <= n < {f.prec}, got {n}")
    if not f.coeffs[0]:
        raise ValueError("Quotient rule needs a nonzero constant term")
    domain = f.domain
    prec = f.prec - n
    lowest = 1 if variant == "rule1" else 0
    derivs = {i: ht_derivative(f, i).truncate(prec) for i in range(lowest, n + 1)}
    inv_f = series_reciprocal(f.truncate(prec))
    inv_power = inv_f * inv_f
    total = Series.zero(domain, prec)
    for k in range(1, n + 1):
        inner = Series.zero(domain, prec)
        for multiset in iter_multisets(k, n, range(lowest, n + 1)):
            count = domain.multinomial(multiplicities(multiset))
            if not count:
                continue
            term = Series.one(domain, prec)
            for part, mult in multiset:
                term = term * series_pow(derivs[part], mult)
            inner = inner + term * count
        weight = -1 if k % 2 else 1
        if variant == "rule2":
            weight *= domain.binomial(n + 1, k + 1)
        if weight:
            total = total + inner * inv_power * weight
        inv_power = inv_power * inv_f
    logger.debug(f"Quotient rule {variant} of order {n} evaluated over {domain}")
    return total
