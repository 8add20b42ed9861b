"""Binomial and multinomial coefficients reduced modulo a prime."""

from functools import lru_cache
from math import comb
from typing import Sequence


@lru_cache(maxsize=None)
def _small_binomials(p: int) -> tuple:
    """Pascal triangle mod p for 0 <= n <= m < p."""
    rows = []
    for m in range(p):
        rows.append(tuple(comb(m, n) % p for n in range(m + 1)))
    return tuple(rows)


def binomial_mod_p(m: int, n: int, p: int) -> int:
    """C(m, n) mod p by Lucas' theorem: product of digit-wise binomials in base p."""
    if m < 0 or n < 0:
        raise ValueError(f"binomial_mod_p needs nonnegative arguments, got ({m}, {n})")
    if n > m:
        return 0
    table = _small_binomials(p)
    result = 1
    while n:
        m, m_digit = divmod(m, p)
        n, n_digit = divmod(n, p)
        if n_digit > m_digit:
            return 0
        result = result * table[m_digit][n_digit] % p
    return result


def multinomial_mod_p(multiplicities: Sequence[int], p: int) -> int:
    """(m_1 + ... + m_s)! / (m_1! ... m_s!) mod p, as a product of binomials."""
    result = 1
    total = 0
    for m in multiplicities:
        total += m
        result = result * binomial_mod_p(total, m, p) % p
        if result == 0:
            break
    return result


def multinomial(multiplicities: Sequence[int]) -> int:
    """Exact multinomial coefficient."""
    result = 1
    total = 0
    for m in multiplicities:
        total += m
        result *= comb(total, m)
    return result
