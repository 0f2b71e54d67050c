"""Sequence coding over Zeckendorf supports.

A sequence [a_1, ..., a_m] is coded by the support {2*pair(a_i, i) + 1}:
every index is odd (distinct odd numbers are automatically >= 2 apart) and
carries its position, so decoding is unambiguous regardless of ordering.

Codes are kept in support form (a tuple of indices, which may themselves be
bignums for nested codes) and materialized to an exact integer only on
demand and only below a configurable size threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Sequence

from .errors import CodeTooLargeError, InvalidSupportError, NotSequenceCodeError
from .numeric import cantor_pair, cantor_unpair, fib
from .zeckendorf import is_valid_support, z_decode

# Largest support index for which to_number will build the exact integer.
# F_e has ~0.694*e bits, so this cap corresponds to ~23-Mbit numbers.
DEFAULT_MATERIALIZE_MAX_INDEX = 1 << 25


@dataclass(frozen=True)
class SeqCode:
    """A sequence code: canonical support plus an optional cached integer."""

    support: tuple[int, ...]
    number: int | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not is_valid_support(self.support):
            raise InvalidSupportError(
                f"not a Zeckendorf support: {list(self.support)[:8]}..."
                if len(self.support) > 8
                else f"not a Zeckendorf support: {list(self.support)}"
            )

    @property
    def max_index(self) -> int:
        return self.support[0] if self.support else 0

    def __repr__(self) -> str:
        if len(self.support) <= 8:
            return f"SeqCode(support={list(self.support)})"
        head = ", ".join(map(str, self.support[:4]))
        return f"SeqCode(support=[{head}, ...], len={len(self.support)})"


def as_code(value: "SeqCode | int") -> SeqCode:
    """Coerce an exact natural to a SeqCode; SeqCodes pass through."""
    if isinstance(value, SeqCode):
        return value
    return from_number(value)


def from_number(n: int) -> SeqCode:
    return SeqCode(z_decode(n), n)


def bits_estimate(c: "SeqCode | int") -> int:
    """Upper bound on the bit size of the materialized code."""
    c = c if isinstance(c, SeqCode) else as_code(c)
    if c.number is not None:
        return c.number.bit_length()
    if not c.support:
        return 0
    return (6943 * c.max_index + 9999) // 10000 + 1


def to_number(c: "SeqCode | int", max_index: int | None = None) -> int:
    """Exact integer value of the code; refuses above the index threshold."""
    if isinstance(c, int):
        return c
    if c.number is not None:
        return c.number
    cap = DEFAULT_MATERIALIZE_MAX_INDEX if max_index is None else max_index
    if c.max_index > cap:
        est = bits_estimate(c)
        raise CodeTooLargeError(
            f"code too large to materialize: max support index {c.max_index} "
            f"exceeds threshold {cap} (~{est} bits)",
            bits_estimate=est,
        )
    value = sum(fib(e) for e in c.support)
    object.__setattr__(c, "number", value)  # idempotent cache fill
    return value


def seq_encode(items: Sequence[int]) -> SeqCode:
    """Code of [a_1, ..., a_m]; the empty sequence codes to 0."""
    indices = sorted(
        (2 * cantor_pair(a, i) + 1 for i, a in enumerate(items, start=1)),
        reverse=True,
    )
    return SeqCode(tuple(indices), 0 if not indices else None)


def _positions(c: SeqCode) -> list[tuple[int, int]] | None:
    """Recovered (position, value) pairs, or None if not a sequence code."""
    m = len(c.support)
    seen = []
    for e in c.support:
        if e % 2 == 0:
            return None
        a, i = cantor_unpair((e - 1) // 2)
        if not 1 <= i <= m:
            return None
        seen.append((i, a))
    seen.sort()
    if [i for i, _ in seen] != list(range(1, m + 1)):
        return None
    return seen


def is_code(c: "SeqCode | int") -> bool:
    return _positions(as_code(c)) is not None


def seq_decode(c: "SeqCode | int") -> list[int]:
    pairs = _positions(as_code(c))
    if pairs is None:
        raise NotSequenceCodeError("not a sequence code")
    return [a for _, a in pairs]


def seq_len(c: "SeqCode | int") -> int:
    """Number of coded elements; 0 for anything that is not a code."""
    c = as_code(c)
    return len(c.support) if is_code(c) else 0


def symbol_at(c: "SeqCode | int", i: int) -> int:
    """The i-th element (1-based, by recovered position); 0 when undefined."""
    pairs = _positions(as_code(c))
    if pairs is None or not 1 <= i <= len(pairs):
        return 0
    return pairs[i - 1][1]


def concat(left: "SeqCode | int", right: "SeqCode | int") -> SeqCode:
    return seq_encode(seq_decode(left) + seq_decode(right))
