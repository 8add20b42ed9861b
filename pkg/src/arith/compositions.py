"""Multiset enumeration for sums over compositions.

Several closed formulas sum a symmetric product over all ordered tuples
(i_1, ..., i_k) with a prescribed weighted sum. The enumerator walks the
unordered solutions once; callers multiply each by its number of orderings.
"""

from typing import Callable, Dict, Iterator, List, Sequence, Tuple

Multiset = Tuple[Tuple[int, int], ...]  # ((part, multiplicity), ...)


def iter_multisets(
    size: int,
    total: int,
    parts: Sequence[int],
    value: Callable[[int], int] = lambda part: part,
) -> Iterator[Multiset]:
    """Yield every multiset of ``size`` entries of ``parts`` whose values add to ``total``.

    ``value`` maps a part to its nonnegative contribution to the sum (identity
    by default, ``r ** i`` for exponent parts). Each multiset is reported as
    ``((part, multiplicity), ...)`` in the order of ``parts`` sorted by
    decreasing value.
    """
    if size < 0 or total < 0:
        return
    ordered = sorted(set(parts), key=value, reverse=True)
    values = [value(part) for part in ordered]
    if any(v < 0 for v in values):
        raise ValueError("Part values must be nonnegative")
    chosen: List[Tuple[int, int]] = []

    def walk(index: int, remaining_size: int, remaining_total: int) -> Iterator[Multiset]:
        if remaining_size == 0:
            if remaining_total == 0:
                yield tuple(chosen)
            return
        if index == len(ordered):
            return
        # values are non-increasing from here on
        if values[index] * remaining_size < remaining_total:
            return
        if values[-1] * remaining_size > remaining_total:
            return
        v = values[index]
        most = remaining_size if v == 0 else min(remaining_size, remaining_total // v)
        for count in range(most, -1, -1):
            if count:
                chosen.append((ordered[index], count))
            yield from walk(index + 1, remaining_size - count, remaining_total - count * v)
            if count:
                chosen.pop()

    yield from walk(0, size, total)


def multiset_parts(multiset: Multiset) -> List[int]:
    """Expand ``((part, multiplicity), ...)`` into a flat list of parts."""
    out: List[int] = []
    for part, count in multiset:
        out.extend([part] * count)
    return out


def multiplicities(multiset: Multiset) -> List[int]:
    return [count for _, count in multiset]


def group_by_size(
    sizes: Sequence[int],
    total_of: Callable[[int], int],
    parts: Sequence[int],
    value: Callable[[int], int] = lambda part: part,
) -> Dict[int, List[Multiset]]:
    """Multisets for each size k with target ``total_of(k)``; empty sizes are omitted."""
    found: Dict[int, List[Multiset]] = {}
    for k in sizes:
        solutions = list(iter_multisets(k, total_of(k), parts, value))
        if solutions:
            found[k] = solutions
    return found
