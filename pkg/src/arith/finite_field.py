"""Finite fields F_r, r = p^e, in a polynomial basis over F_p.

Elements are encoded as integer codes: the coefficient vector
(c_0, ..., c_{e-1}) of an element (little-endian in the generator ``a``)
maps to the code c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Prime-subfield
elements therefore have code equal to their residue mod p.
"""

import itertools
import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

import sympy

from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# Full add/mul tables are built up to this order; larger extensions compute on the fly.
TABLE_ORDER_LIMIT = 256


class FieldMismatchError(ValueError):
    """Raised when operands come from different fields or coefficient domains."""


# ---------------------------------------------------------------------------
# Dense polynomials over F_p as little-endian int lists (moduli, generator math)


def _fp_trim(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo b over F_p (b nonzero)."""
    rem = [c % p for c in a]
    _fp_trim(rem)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(rem) - 1 >= db and rem:
        factor = rem[-1] * lead_inv % p
        shift = len(rem) - 1 - db
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        _fp_trim(rem)
    return rem


def is_irreducible_over_fp(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2 over F_p."""
    degree = len(modulus) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _fp_mod(modulus, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Candidates are ordered by their coefficient vector (c_0, ..., c_{e-1}),
    low degree first.
    """
    for low in itertools.product(range(p), repeat=e):
        candidate = tuple(low) + (1,)
        if is_irreducible_over_fp(candidate, p):
            return candidate
    raise ValueError(f"No irreducible polynomial of degree {e} over F_{p}")  # unreachable for prime p


# ---------------------------------------------------------------------------
# Text syntax for polynomials over F_p in a single generator

_TERM_RE = re.compile(r"^(?P<coef>\d+)?\*?(?P<var>[a-zA-Z])?(?:\^(?P<exp>\d+))?$")


def parse_fp_poly(text: str, p: int) -> List[int]:
    """Parse ``x^2+x+1`` / ``2a+1`` style text into a little-endian F_p list."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("Empty polynomial text")
    coeffs: List[int] = []
    for sign, body in re.findall(r"([+-]?)([^+-]+)", compact):
        match = _TERM_RE.match(body)
        if not match or (match.group("coef") is None and match.group("var") is None):
            raise ValueError(f"Cannot parse term '{body}' in '{text}'")
        coef = int(match.group("coef")) if match.group("coef") is not None else 1
        if match.group("var") is None:
            exp = 0
        else:
            exp = int(match.group("exp")) if match.group("exp") is not None else 1
        if sign == "-":
            coef = -coef
        if len(coeffs) <= exp:
            coeffs.extend([0] * (exp + 1 - len(coeffs)))
        coeffs[exp] = (coeffs[exp] + coef) % p
    return _fp_trim(coeffs)


def format_fp_poly(coeffs: Sequence[int], var: str = "a") -> str:
    """Render a little-endian F_p list as e.g. ``2a^2+a+1``."""
    terms = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if c == 0:
            continue
        if exp == 0:
            terms.append(str(c))
            continue
        prefix = "" if c == 1 else str(c)
        power = var if exp == 1 else f"{var}^{exp}"
        terms.append(prefix + power)
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldParams:
    """The coefficient field F_r with r = p^e."""
    p: int
    e: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not sympy.isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError(f"Extension degree must be >= 1, got {self.e}")
        if self.e == 1:
            if self.modulus is not None and len(self.modulus) - 1 != 1:
                raise ValueError("A prime field takes no modulus of degree other than 1")
            object.__setattr__(self, "modulus", None)
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", smallest_irreducible(self.p, self.e))
            logger.debug(f"Selected modulus {format_fp_poly(self.modulus, 'x')} for F_{self.r}")
            return
        modulus = tuple(c % self.p for c in self.modulus)
        while modulus and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != self.e:
            raise ValueError(f"Modulus must have degree {self.e}, got {len(modulus) - 1}")
        if modulus[-1] != 1:
            raise ValueError("Modulus must be monic")
        if not is_irreducible_over_fp(modulus, self.p):
            raise ValueError(f"Modulus {format_fp_poly(modulus, 'x')} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @property
    def r(self) -> int:
        return self.p ** self.e

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    def __str__(self) -> str:
        if self.is_prime:
            return f"F_{self.p}"
        return f"F_{self.r} = F_{self.p}[a]/({format_fp_poly(self.modulus)})"

    # -- code <-> vector -------------------------------------------------

    def digits(self, code: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.e):
            code, d = divmod(code, self.p)
            out.append(d)
        return tuple(out)

    def code_of(self, vector: Sequence[int]) -> int:
        vector = list(vector)
        if len(vector) > self.e:
            if self.is_prime:
                raise ValueError(f"Vector {vector} is too long for F_{self.p}")
            vector = _fp_mod(vector, self.modulus, self.p)
        code = 0
        for d in reversed(list(vector)):
            code = code * self.p + (d % self.p)
        return code

    def from_int(self, n: int) -> int:
        """Image of the integer n in F_r (a prime-subfield code)."""
        return n % self.p

    # -- tables ----------------------------------------------------------

    def _vector_mul(self, a: int, b: int) -> int:
        product = _fp_mul(self.digits(a), self.digits(b), self.p)
        return self.code_of(_fp_mod(product, self.modulus, self.p))

    def _vector_add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.code_of([(x + y) % self.p for x, y in zip(da, db)])

    @cached_property
    def _tables(self) -> Optional[dict]:
        r = self.r
        if self.is_prime or r > TABLE_ORDER_LIMIT:
            return None
        add = [self._vector_add(a, b) for a in range(r) for b in range(r)]
        mul = [self._vector_mul(a, b) for a in range(r) for b in range(r)]
        neg = [self.code_of([(-d) % self.p for d in self.digits(a)]) for a in range(r)]
        inv = [0] * r
        for a in range(1, r):
            for b in range(1, r):
                if mul[a * r + b] == 1:
                    inv[a] = b
                    break
        logger.debug(f"Built arithmetic tables for F_{r}")
        return {"add": add, "mul": mul, "neg": neg, "inv": inv}

    # -- arithmetic on codes ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.is_prime:
            return (a + b) % self.p
        tables = self._tables
        if tables is not None:
            return tables["add"][a * self.r + b]
        return self._vector_add(a, b)

    def neg(self, a: int) -> int:
        if self.is_prime:
            return (-a) % self.p
        tables = self._tables
        if tables is not None:
            return tables["neg"][a]
        return self.code_of([(-d) % self.p for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_prime:
            return a * b % self.p
        tables = self._tables
        if tables is not None:
            return tables["mul"][a * self.r + b]
        return self._vector_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"Zero has no inverse in F_{self.r}")
        if self.is_prime:
            return pow(a, self.p - 2, self.p)
        tables = self._tables
        if tables is not None:
            return tables["inv"][a]
        return self.pow(a, self.r - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.is_prime:
            return pow(a, k, self.p)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # -- elements --------------------------------------------------------

    def element(self, value) -> "FFElement":
        """Build an element from an int (prime subfield) or a coefficient vector."""
        if isinstance(value, FFElement):
            if value.field != self:
                raise FieldMismatchError("Element belongs to a different field")
            return value
        if isinstance(value, int):
            return FFElement(self, self.from_int(value))
        return FFElement(self, self.code_of(value))

    def elements(self) -> Iterator["FFElement"]:
        for code in range(self.r):
            yield FFElement(self, code)

    def format_code(self, code: int) -> str:
        if self.is_prime:
            return str(code)
        return f"[{format_fp_poly(self.digits(code))}]"

    def parse_code(self, text: str) -> int:
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            if self.is_prime:
                return self.from_int(int(text[1:-1]))
            return self.code_of(parse_fp_poly(text[1:-1], self.p))
        return self.from_int(int(text))


@dataclass(frozen=True)
class FFElement:
    """An element of F_r."""
    field: FieldParams = dc_field(repr=False)
    code: int = 0

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Residues mod p, little-endian in the generator."""
        return self.field.digits(self.code)

    def _check(self, other) -> "FFElement":
        if isinstance(other, int):
            return FFElement(self.field, self.field.from_int(other))
        if not isinstance(other, FFElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"Cannot combine elements of {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FFElement(self.field, self.field.add(self.code, other.code))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FFElement(self.field, self.field.sub(self.code, other.code))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FFElement(self.field, self.field.mul(self.code, other.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FFElement(self.field, self.field.div(self.code, other.code))

    def __neg__(self):
        return FFElement(self.field, self.field.neg(self.code))

    def __pow__(self, k: int):
        return FFElement(self.field, self.field.pow(self.code, k))

    def inverse(self) -> "FFElement":
        return FFElement(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        return self.field.format_code(self.code)


def make_field(p: int, e: int = 1, modulus=None) -> FieldParams:
    """Validated field F_{p^e}; ``modulus`` may be a coefficient list or text like ``x^2+x+1``."""
    if e < 1:
        raise ValueError(f"Extension degree must be >= 1, got {e}")
    if isinstance(modulus, str):
        if p < 2 or not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        modulus = parse_fp_poly(modulus, p)
    if modulus is not None:
        modulus = tuple(modulus)
    return FieldParams(p, e, modulus)


def ff_arith(a: FFElement, b, kind: str) -> FFElement:
    """Field arithmetic by name: add, sub, mul, div, pow, inv, neg."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "pow":
        return a ** b
    if kind == "inv":
        return a.inverse()
    if kind == "neg":
        return -a
    raise ValueError(f"Unknown field operation '{kind}'")
