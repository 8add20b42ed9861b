"""Classical Stirling numbers (unsigned first kind, second kind)."""

import threading
from typing import Dict, List

from ..utils.logging_config import get_logger

logger = get_logger(__name__)

CLASSICAL_STIRLING_KINDS = ("first", "second")

_rows: Dict[str, List[List[int]]] = {"first": [[1]], "second": [[1]]}
_lock = threading.Lock()


def _extend(kind: str, n: int) -> None:
    rows = _rows[kind]
    with _lock:
        while len(rows) <= n:
            m = len(rows) - 1
            prev = rows[m]
            row = [0] * (m + 2)
            for k in range(1, m + 2):
                left = prev[k - 1]
                stay = prev[k] if k <= m else 0
                # first: s(m+1, k) = s(m, k-1) + m s(m, k); second: S(m+1, k) = S(m, k-1) + k S(m, k)
                row[k] = left + (m if kind == "first" else k) * stay
            rows.append(row)


def stirling_classical(kind: str, n: int, k: int) -> int:
    """Unsigned [[n k]] (``first``) or {n k} (``second``)."""
    if kind not in CLASSICAL_STIRLING_KINDS:
        raise ValueError(f"Stirling kind must be one of {CLASSICAL_STIRLING_KINDS}, got '{kind}'")
    if n < 0 or k < 0:
        raise ValueError(f"Stirling indices must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    _extend(kind, n)
    return _rows[kind][n][k]


def stirling_inversion_sum(n: int, k: int, first_outer: bool = True) -> int:
    """sum_m (-1)^(n-m) [[n m]] {m k} (or the mirrored sum with (-1)^(m-k)); equals delta_{n,k}."""
    total = 0
    for m in range(k, n + 1):
        if first_outer:
            total += (-1) ** (n - m) * stirling_classical("first", n, m) * stirling_classical("second", m, k)
        else:
            total += (-1) ** (m - k) * stirling_classical("second", n, m) * stirling_classical("first", m, k)
    return total
