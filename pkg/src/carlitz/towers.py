"""The Carlitz towers [i], D_i, L_i and the Carlitz factorial."""

import threading
from typing import Dict, List, Optional

from ..arith.finite_field import FieldParams
from ..arith.polynomial import Poly
from ..utils.constants import DEFAULT_TOWER_CAP
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


class TowerCapExceeded(ValueError):
    """Raised when a tower index above the configured guard cap is requested."""


class CarlitzCache:
    """Memoized towers for one field F_r.

    ``brackets[i] = T^(r^i) - T`` (index 0 unused), ``d_tower[i] = D_i`` and
    ``l_tower[i] = L_i``. Lists only grow; entries are immutable polynomials.
    ``memo`` holds per-field series rows for the number tables.
    """

    def __init__(self, field: FieldParams, cap: Optional[int] = None):
        self.field = field
        self.cap = DEFAULT_TOWER_CAP if cap is None else cap
        if self.cap < 1:
            raise ValueError(f"Tower cap must be >= 1, got {self.cap}")
        self.brackets: List[Optional[Poly]] = [None]
        self.d_tower: List[Poly] = [Poly.one(field)]
        self.l_tower: List[Poly] = [Poly.one(field)]
        self.memo: Dict = {}
        self._factorials: Dict[int, Poly] = {0: Poly.one(field)}
        self._lock = threading.RLock()

    @property
    def r(self) -> int:
        return self.field.r

    @property
    def p(self) -> int:
        return self.field.p

    def __repr__(self) -> str:
        return f"CarlitzCache(r={self.r}, levels={len(self.d_tower) - 1}, cap={self.cap})"

    def check_index(self, i: int) -> None:
        if i > self.cap:
            raise TowerCapExceeded(
                f"Tower index {i} exceeds the guard cap {self.cap} (deg D_{i} = {i}*{self.r}^{i})"
            )

    def _extend(self, i: int) -> None:
        self.check_index(i)
        with self._lock:
            while len(self.d_tower) <= i:
                level = len(self.d_tower)
                br = _make_bracket(self.field, level)
                self.brackets.append(br)
                self.d_tower.append(br * self.d_tower[level - 1].frobenius(1))
                self.l_tower.append(br * self.l_tower[level - 1])
                logger.debug(f"Extended Carlitz towers over F_{self.r} to level {level}")


def _make_bracket(field: FieldParams, i: int) -> Poly:
    codes = [0] * (field.r ** i + 1)
    codes[-1] = 1
    codes[1] = field.neg(1)
    return Poly(field, codes)


def bracket(cache: CarlitzCache, i: int) -> Poly:
    """[i] = T^(r^i) - T for i >= 1."""
    if i < 1:
        raise ValueError(f"[i] is defined for i >= 1, got {i}")
    cache._extend(i)
    return cache.brackets[i]


def d_of(cache: CarlitzCache, i: int) -> Poly:
    """D_i = [i] [i-1]^r ... [1]^(r^(i-1)), D_0 = 1."""
    if i < 0:
        raise ValueError(f"D_i needs i >= 0, got {i}")
    cache._extend(i)
    return cache.d_tower[i]


def l_of(cache: CarlitzCache, i: int) -> Poly:
    """L_i = [i] [i-1] ... [1], L_0 = 1."""
    if i < 0:
        raise ValueError(f"L_i needs i >= 0, got {i}")
    cache._extend(i)
    return cache.l_tower[i]


def r_digits(n: int, r: int) -> List[int]:
    """Little-endian base-r digits of n, no trailing zeros ([] for n = 0)."""
    if n < 0:
        raise ValueError(f"r_digits needs n >= 0, got {n}")
    if r < 2:
        raise ValueError(f"Base must be >= 2, got {r}")
    digits = []
    while n:
        n, d = divmod(n, r)
        digits.append(d)
    return digits


def digit_sum(n: int, r: int) -> int:
    """lambda(n): the sum of the base-r digits of n, as an integer."""
    return sum(r_digits(n, r))


def tower_depth(n: int, r: int) -> int:
    """Largest j with r^j <= n (0 for n < r)."""
    return max(len(r_digits(n, r)) - 1, 0)


def carlitz_factorial(cache: CarlitzCache, n: int) -> Poly:
    """Pi(n) = prod_j D_j^(c_j) over the base-r digits c_j of n."""
    if n < 0:
        raise ValueError(f"Carlitz factorial needs n >= 0, got {n}")
    cached = cache._factorials.get(n)
    if cached is not None:
        return cached
    result = Poly.one(cache.field)
    for j, c in enumerate(r_digits(n, cache.r)):
        if c:
            result = result * d_of(cache, j) ** c
    with cache._lock:
        cache._factorials[n] = result
    return result


def carlitz_factorial_alt(cache: CarlitzCache, n: int) -> Poly:
    """Pi(n) = prod_{k >= 1} (T^(r^k) - T)^floor(n / r^k), an independent formula."""
    if n < 0:
        raise ValueError(f"Carlitz factorial needs n >= 0, got {n}")
    result = Poly.one(cache.field)
    k = 1
    while cache.r ** k <= n:
        result = result * bracket(cache, k) ** (n // cache.r ** k)
        k += 1
    return result
