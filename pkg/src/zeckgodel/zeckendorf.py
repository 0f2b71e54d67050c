"""Zeckendorf encode/decode between naturals and non-consecutive index sets.

A support is a strictly decreasing tuple of Fibonacci indices with pairwise
gap >= 2; the empty tuple stands for 0.  Every natural has exactly one such
support, and the greedy algorithm finds it.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterable, Sequence

from . import numeric
from .errors import InvalidSupportError
from .numeric import fib, max_fib_index_le


def is_valid_support(indices: Sequence[int]) -> bool:
    """True iff strictly decreasing, all >= 1, and no two indices adjacent."""
    prev = None
    for e in indices:
        if e < 1:
            return False
        if prev is not None and prev - e < 2:
            return False
        prev = e
    return True


def z_encode(support: Iterable[int]) -> int:
    """Sum of F_e over the support; inverse of z_decode."""
    indices = tuple(support)
    if not is_valid_support(indices):
        raise InvalidSupportError(f"malformed Zeckendorf support {list(indices)}")
    return sum(fib(e) for e in indices)


def z_decode(n: int) -> tuple[int, ...]:
    """Greedy decomposition of n, indices emitted in decreasing order.

    After each greedy pick F_e the remainder is < F_{e-1}, so no two chosen
    indices can be consecutive.
    """
    if n < 0:
        raise InvalidSupportError("cannot decode a negative number")
    if n == 0:
        return ()
    out = []
    rem = n
    e = max_fib_index_le(n)  # also grows the memo table when it applies
    if e <= numeric.FIB_TABLE_CAP:
        # binary search the memo table for each greedy index
        table = numeric._fib_table
        while rem > 0:
            e = bisect_right(table, rem)
            out.append(e)
            rem -= table[e - 1]
        return tuple(out)
    # large values: slide a (F_e, F_{e+1}) window down from the top index
    a, b = numeric.fib_pair_at(e)
    while rem > 0:
        if a <= rem:
            out.append(e)
            rem -= a
        a, b = b - a, a
        e -= 1
    return tuple(out)
