"""Fibonacci verification oracle: the identity F_n + 2*F_m = F_k.

A decidable arithmetic identity read as a witness for an inference step;
kept standalone, deliberately not wired into the proof checker.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ZeckGodelError
from .numeric import fib, max_fib_index_le


class OracleTriple(NamedTuple):
    n: int
    m: int
    k: int


def oracle_check(n: int, m: int, k: int) -> bool:
    """Exact test of F_n + 2*F_m == F_k."""
    return fib(n) + 2 * fib(m) == fib(k)


def oracle_solve(n: int, m: int) -> int | None:
    """The unique k with F_n + 2*F_m = F_k, if any.

    Fibonacci values are strictly increasing here (F_1 = 1, F_2 = 2), so at
    most the top index below the sum can match.
    """
    s = fib(n) + 2 * fib(m)
    k = max_fib_index_le(s)
    return k if fib(k) == s else None


def mp_witness(premise_index: int) -> OracleTriple:
    """Canonical modus-ponens-shaped instance (n-1, n, n+2); needs n >= 2."""
    if premise_index < 2:
        raise ZeckGodelError(f"premise index must be >= 2, got {premise_index}")
    return OracleTriple(premise_index - 1, premise_index, premise_index + 2)
