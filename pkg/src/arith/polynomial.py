"""Polynomials in T over a finite field F_r."""

import re
from functools import total_ordering
from typing import List, Sequence, Tuple, Union

from .finite_field import FFElement, FieldMismatchError, FieldParams
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial: below every integer, no arithmetic."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


ZERO_DEGREE = _MinusInfinity()

Scalar = Union[int, FFElement]


def _trim(codes: List[int]) -> Tuple[int, ...]:
    end = len(codes)
    while end and codes[end - 1] == 0:
        end -= 1
    return tuple(codes[:end])


class Poly:
    """Immutable polynomial; ``codes[i]`` is the field code of the T^i coefficient."""

    __slots__ = ("field", "codes", "_hash")

    def __init__(self, field: FieldParams, codes: Sequence[int] = ()):
        self.field = field
        self.codes = _trim(list(codes))
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldParams) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldParams) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def constant(cls, field: FieldParams, value: Scalar) -> "Poly":
        return cls(field, (_scalar_code(field, value),))

    @classmethod
    def monomial(cls, field: FieldParams, degree: int, value: Scalar = 1) -> "Poly":
        if degree < 0:
            raise ValueError(f"Monomial degree must be >= 0, got {degree}")
        codes = [0] * degree + [_scalar_code(field, value)]
        return cls(field, codes)

    @classmethod
    def t(cls, field: FieldParams) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def parse(cls, field: FieldParams, text: str) -> "Poly":
        return parse_poly(field, text)

    # -- basic properties ------------------------------------------------

    @property
    def coeffs(self) -> Tuple[FFElement, ...]:
        return tuple(FFElement(self.field, c) for c in self.codes)

    @property
    def degree(self):
        return len(self.codes) - 1 if self.codes else ZERO_DEGREE

    @property
    def leading(self) -> int:
        if not self.codes:
            raise ValueError("The zero polynomial has no leading coefficient")
        return self.codes[-1]

    def is_zero(self) -> bool:
        return not self.codes

    def is_one(self) -> bool:
        return self.codes == (1,)

    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.codes == other.codes
        if isinstance(other, int):
            return self.codes == _trim([self.field.from_int(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.codes))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_latex(self) -> str:
        return format_poly(self, latex=True)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(f"Cannot combine polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, FFElement)):
            return Poly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.field, _add_codes(self.field, self.codes, other.codes))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.codes])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FFElement)):
            return self.scale(_scalar_code(self.field, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.field, _mul_codes(self.field, self.codes, other.codes))

    __rmul__ = __mul__

    def scale(self, code: int) -> "Poly":
        """Multiply by the field element with the given code."""
        if code == 0:
            return Poly.zero(self.field)
        if code == 1:
            return self
        mul = self.field.mul
        return Poly(self.field, [mul(c, code) for c in self.codes])

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q, rem = _divmod_codes(self.field, self.codes, other.codes)
        return Poly(self.field, q), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("Negative powers of a polynomial are not polynomials")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Poly":
        if not self.codes:
            return self
        return self.scale(self.field.inv(self.codes[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (gcd(0, 0) = 0)."""
        other = self._coerce(other)
        a, b = self.codes, other.codes
        while b:
            _, rem = _divmod_codes(self.field, a, b)
            a, b = b, _trim(rem)
        return Poly(self.field, a).monic()

    def xgcd(self, other: "Poly") -> Tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        other = self._coerce(other)
        field = self.field
        r0, r1 = self, other
        s0, s1 = Poly.one(field), Poly.zero(field)
        t0, t1 = Poly.zero(field), Poly.one(field)
        while r1:
            q, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        lead_inv = field.inv(r0.leading)
        return r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)

    def frobenius(self, j: int = 1) -> "Poly":
        """P(T)^(r^j) = P(T^(r^j)), since every coefficient satisfies c^r = c."""
        if j < 0:
            raise ValueError("Frobenius exponent must be >= 0")
        if j == 0 or not self.codes:
            return self
        step = self.field.r ** j
        codes = [0] * ((len(self.codes) - 1) * step + 1)
        for i, c in enumerate(self.codes):
            codes[i * step] = c
        return Poly(self.field, codes)


def _scalar_code(field: FieldParams, value: Scalar) -> int:
    if isinstance(value, FFElement):
        if value.field != field:
            raise FieldMismatchError("Scalar belongs to a different field")
        return value.code
    return field.from_int(value)


def _add_codes(field: FieldParams, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if field.is_prime:
        p = field.p
        for i, y in enumerate(b):
            if y:
                out[i] = (out[i] + y) % p
    else:
        add = field.add
        for i, y in enumerate(b):
            if y:
                out[i] = add(out[i], y)
    return out


def _mul_codes(field: FieldParams, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    nonzero_b = [(j, y) for j, y in enumerate(b) if y]
    out = [0] * (len(a) + len(b) - 1)
    if field.is_prime:
        p = field.p
        for i, x in enumerate(a):
            if x:
                for j, y in nonzero_b:
                    out[i + j] += x * y
        return [c % p for c in out]
    add, mul = field.add, field.mul
    for i, x in enumerate(a):
        if x:
            for j, y in nonzero_b:
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def _divmod_codes(field: FieldParams, a: Sequence[int], b: Sequence[int]):
    if not b:
        raise ZeroDivisionError("Polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    lead_inv = field.inv(b[-1])
    lower_b = [(j, y) for j, y in enumerate(b[:-1]) if y]
    rem = list(a)
    quotient = [0] * (len(a) - db)
    if field.is_prime:
        p = field.p
        for i in range(len(a) - 1, db - 1, -1):
            c = rem[i] % p
            if c:
                factor = c * lead_inv % p
                quotient[i - db] = factor
                base = i - db
                for j, y in lower_b:
                    rem[base + j] -= factor * y
        return quotient, [c % p for c in rem[:db]]
    add, mul, neg = field.add, field.mul, field.neg
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            factor = mul(c, lead_inv)
            quotient[i - db] = factor
            minus = neg(factor)
            base = i - db
            for j, y in lower_b:
                rem[base + j] = add(rem[base + j], mul(minus, y))
    return quotient, rem[:db]


# ---------------------------------------------------------------------------
# Canonical text syntax: terms in descending degree, e.g. ``T^9 + 2*T``


def format_poly(poly: Poly, latex: bool = False) -> str:
    if not poly.codes:
        return "0"
    field = poly.field
    terms = []
    for degree in range(len(poly.codes) - 1, -1, -1):
        c = poly.codes[degree]
        if c == 0:
            continue
        coef = field.format_code(c)
        if degree == 0:
            terms.append(coef)
            continue
        if latex:
            power = "T" if degree == 1 else f"T^{{{degree}}}"
            terms.append(power if c == 1 else f"{coef} {power}")
        else:
            power = "T" if degree == 1 else f"T^{degree}"
            terms.append(power if c == 1 else f"{coef}*{power}")
    return " + ".join(terms)


_POLY_TERM_RE = re.compile(
    r"^(?P<coef>\d+|\[[^\]]*\])?\s*\*?\s*(?P<var>T)?(?:\^(?P<exp>\d+))?$"
)


def _split_terms(text: str) -> List[Tuple[str, str]]:
    """Split on top-level + and - (outside brackets)."""
    terms = []
    depth = 0
    sign = "+"
    current = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif depth == 0 and ch in "+-":
            body = "".join(current).strip()
            if body:
                terms.append((sign, body))
            elif terms:
                raise ValueError(f"Dangling operator in '{text}'")
            sign = ch
            current = []
            continue
        current.append(ch)
    body = "".join(current).strip()
    if not body:
        raise ValueError(f"Cannot parse polynomial '{text}'")
    terms.append((sign, body))
    return terms


def parse_poly(field: FieldParams, text: str) -> Poly:
    """Parse the canonical syntax back into a polynomial (``*`` optional)."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    result = Poly.zero(field)
    for sign, body in _split_terms(stripped):
        match = _POLY_TERM_RE.match(body.strip())
        if not match or (match.group("coef") is None and match.group("var") is None):
            raise ValueError(f"Cannot parse term '{body}' in '{text}'")
        coef_text = match.group("coef")
        code = field.parse_code(coef_text) if coef_text is not None else 1
        if match.group("var") is None:
            degree = 0
        else:
            degree = int(match.group("exp")) if match.group("exp") is not None else 1
        term = Poly.monomial(field, degree, FFElement(field, code))
        result = result - term if sign == "-" else result + term
    return result


def poly_arith(a: Poly, b: Poly, kind: str):
    """Polynomial arithmetic by name: add, sub, mul, divmod, gcd."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    if kind == "gcd":
        return a.gcd(b)
    raise ValueError(f"Unknown polynomial operation '{kind}'")
