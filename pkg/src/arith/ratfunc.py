"""Reduced rational functions in F_r(T)."""

from typing import Union

from .finite_field import FFElement, FieldMismatchError, FieldParams
from .polynomial import Poly, parse_poly

Operand = Union["RatFunc", Poly, int, FFElement]


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1; zero is 0/1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly = None, _reduced: bool = False):
        field = num.field
        if den is None:
            den = Poly.one(field)
        elif den.field != field:
            raise FieldMismatchError("Numerator and denominator live over different fields")
        if not den:
            raise ZeroDivisionError("Rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Poly.one(field)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                if den.leading != 1:
                    lead_inv = field.inv(den.leading)
                    num, den = num.scale(lead_inv), den.scale(lead_inv)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldParams) -> "RatFunc":
        return cls(Poly.zero(field), Poly.one(field), _reduced=True)

    @classmethod
    def one(cls, field: FieldParams) -> "RatFunc":
        return cls(Poly.one(field), Poly.one(field), _reduced=True)

    @classmethod
    def constant(cls, field: FieldParams, value) -> "RatFunc":
        return cls(Poly.constant(field, value), Poly.one(field), _reduced=True)

    @classmethod
    def from_poly(cls, poly: Poly) -> "RatFunc":
        return cls(poly, Poly.one(poly.field), _reduced=True)

    @classmethod
    def parse(cls, field: FieldParams, text: str) -> "RatFunc":
        return parse_ratfunc(field, text)

    @property
    def field(self) -> FieldParams:
        return self.num.field

    def normalized(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, FFElement)):
            return self.den.is_one() and self.num == self._coerce(other).num
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatchError(f"Cannot combine values over {self.field} and {other.field}")
            return other
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(f"Cannot combine values over {self.field} and {other.field}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, FFElement)):
            return RatFunc.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_one():
            # (a*d + c)/d is already reduced when c/d is
            return RatFunc(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den.is_one():
            return RatFunc(other.num * self.den + self.num, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            return RatFunc(num, self.den * other.den, _reduced=True)
        left, right = other.den // g, self.den // g
        num = self.num * left + other.num * right
        return RatFunc(num, self.den * left)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            code = self.field.from_int(other)
            if code == 0:
                return RatFunc.zero(self.field)
            return RatFunc(self.num.scale(code), self.den, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc.zero(self.field)
        # cross-cancel before multiplying; both denominators stay monic
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        a, d = (self.num, other.den) if g1.is_one() else (self.num // g1, other.den // g1)
        c, b = (other.num, self.den) if g2.is_one() else (other.num // g2, self.den // g2)
        return RatFunc(a * c, b * d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("Zero has no inverse in F_r(T)")
        lead_inv = self.field.inv(self.num.leading)
        return RatFunc(self.den.scale(lead_inv), self.num.scale(lead_inv), _reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        # gcd(num^k, den^k) = 1, so powers stay reduced
        return RatFunc(self.num ** k, self.den ** k, _reduced=True)

    def frobenius(self, j: int = 1) -> "RatFunc":
        """self^(r^j), computed coefficient-free as num(T^(r^j)) / den(T^(r^j))."""
        return RatFunc(self.num.frobenius(j), self.den.frobenius(j), _reduced=True)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        num = str(self.num)
        if self.den.is_one():
            return num
        if sum(1 for c in self.num.codes if c) > 1:
            num = f"({num})"
        return f"{num} / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def to_latex(self) -> str:
        if self.den.is_one():
            return self.num.to_latex()
        return f"\\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}"


def _split_fraction(text: str):
    depth = 0
    for index, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:index], text[index + 1:]
    return text, None


def parse_ratfunc(field: FieldParams, text: str) -> RatFunc:
    """Parse ``num / (den)`` (den optional) into canonical form."""
    num_text, den_text = _split_fraction(text.strip())
    num = parse_poly(field, num_text)
    if den_text is None:
        return RatFunc.from_poly(num)
    return RatFunc(num, parse_poly(field, den_text))


def ratfunc_arith(a: RatFunc, b: Operand, kind: str) -> RatFunc:
    """Rational-function arithmetic by name: add, sub, mul, div, neg, inv."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "neg":
        return -a
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"Unknown rational function operation '{kind}'")
