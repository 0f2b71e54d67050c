"""Concrete first-order arithmetic syntax and its sequence codes.

Strings are Polish (prefix) notation over a finite alphabet, so
well-formedness is one bounded left-to-right pass and there are no
parentheses in the coded alphabet.  Symbol numbers below the offset are base
symbols; v_i gets code i + offset.

The parser and flattener are iterative: numerals for multi-thousand-bit
values nest far deeper than any recursion limit.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

from .errors import (
    AlphabetError,
    InvalidSymbolError,
    NotProofCodeError,
    ParseError,
)
from .seqcode import SeqCode, as_code, seq_decode, seq_encode, to_number


# --- ASTs ---------------------------------------------------------------

class Term:
    __slots__ = ()


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class Succ(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Plus(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Times(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class DiagFn(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Var(Term):
    index: int


@dataclass(frozen=True, slots=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class ProvP(Formula):
    arg: Term


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    arg: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Forall(Formula):
    var: int
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    var: int
    body: Formula


# --- Alphabet -----------------------------------------------------------

_BASE_GLYPHS = ("¬", "→", "∧", "∨", "∀", "∃", "=", "0", "S", "+", "·", "diagfn", "Prov")
_VAR_RE = re.compile(r"^v(\d+)$")


@dataclass(frozen=True)
class Alphabet:
    """Bijection between symbols and positive codes, with variable offset."""

    base: Mapping[str, int]
    offset: int

    def __post_init__(self):
        if set(self.base) != set(_BASE_GLYPHS):
            raise AlphabetError(
                f"alphabet must assign exactly the symbols {sorted(_BASE_GLYPHS)}"
            )
        codes = list(self.base.values())
        if len(set(codes)) != len(codes):
            raise AlphabetError("base symbol codes must be distinct")
        if min(codes) < 1 or max(codes) >= self.offset:
            raise AlphabetError("base codes must satisfy 1 <= code < offset")
        if self.offset <= len(self.base):
            raise AlphabetError("offset must exceed the number of base symbols")
        object.__setattr__(self, "_by_code", {c: s for s, c in self.base.items()})

    def code_of(self, symbol: str) -> int:
        m = _VAR_RE.match(symbol)
        if m:
            return int(m.group(1)) + self.offset
        try:
            return self.base[symbol]
        except KeyError:
            raise AlphabetError(f"unknown symbol {symbol!r}") from None

    def symbol_of(self, code: int) -> str:
        if code >= self.offset:
            return f"v{code - self.offset}"
        sym = self._by_code.get(code)
        if sym is None:
            raise InvalidSymbolError(code)
        return sym

    def var_code(self, index: int) -> int:
        return index + self.offset


def default_alphabet() -> Alphabet:
    return DEFAULT_ALPHABET


DEFAULT_ALPHABET = Alphabet(
    base={
        "¬": 1,
        "→": 2,
        "∧": 3,
        "∨": 4,
        "∀": 5,
        "∃": 6,
        "=": 7,
        "0": 8,
        "S": 9,
        "+": 10,
        "·": 11,
        "diagfn": 12,
        "Prov": 13,
    },
    offset=16,
)


def load_alphabet(source) -> Alphabet:
    """Read an alphabet from a JSON file path or an already-parsed mapping."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            source = json.load(fh)
    try:
        return Alphabet(base=dict(source["symbols"]), offset=int(source["offset"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise AlphabetError(f"malformed alphabet config: {exc}") from exc


# --- flatten / parse ----------------------------------------------------

# operand slots per head symbol: t = term, f = formula, v = bound variable
_TERM_SLOTS: dict[str, tuple[str, ...]] = {"S": ("t",), "+": ("t", "t"), "·": ("t", "t"), "diagfn": ("t",)}
_FORM_SLOTS: dict[str, tuple[str, ...]] = {
    "=": ("t", "t"),
    "Prov": ("t",),
    "¬": ("f",),
    "→": ("f", "f"),
    "∧": ("f", "f"),
    "∨": ("f", "f"),
    "∀": ("v", "f"),
    "∃": ("v", "f"),
}

_FORM_BUILD = {
    "=": Eq,
    "Prov": ProvP,
    "¬": Neg,
    "→": Imp,
    "∧": And,
    "∨": Or,
    "∀": Forall,
    "∃": Exists,
}
_TERM_BUILD = {"S": Succ, "+": Plus, "·": Times, "diagfn": DiagFn}


def flatten(node: "Term | Formula") -> list[str]:
    """Prefix-order symbol string of an AST (operator before operands)."""
    out: list[str] = []
    stack: list[object] = [node]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            out.append(x)
            continue
        sym, parts = _node_parts(x)
        out.append(sym)
        stack.extend(reversed(parts))
    return out


def _node_parts(x) -> tuple[str, tuple]:
    match x:
        case Zero():
            return "0", ()
        case Var(i):
            return f"v{i}", ()
        case Succ(a):
            return "S", (a,)
        case Plus(a, b):
            return "+", (a, b)
        case Times(a, b):
            return "·", (a, b)
        case DiagFn(a):
            return "diagfn", (a,)
        case Eq(a, b):
            return "=", (a, b)
        case ProvP(a):
            return "Prov", (a,)
        case Neg(a):
            return "¬", (a,)
        case Imp(a, b):
            return "→", (a, b)
        case And(a, b):
            return "∧", (a, b)
        case Or(a, b):
            return "∨", (a, b)
        case Forall(v, b):
            return "∀", (f"v{v}", b)
        case Exists(v, b):
            return "∃", (f"v{v}", b)
    raise TypeError(f"not an AST node: {x!r}")


def parse(symbols: Sequence[str], expect: str | None = None) -> "Term | Formula":
    """Inverse of flatten.  ``expect`` may pin the category to formula/term."""
    frames: list[list] = []  # [head, slots, children]
    root = None
    i, n = 0, len(symbols)

    def build(head: str, children: list):
        ctor = _FORM_BUILD.get(head) or _TERM_BUILD[head]
        return ctor(*children)

    while root is None:
        if frames:
            f = frames[-1]
            want = f[1][len(f[2])]
        else:
            want = {"formula": "f", "term": "t"}.get(expect, "a")
        if i >= n:
            raise ParseError("truncated input", position=i)
        tok = symbols[i]
        m = _VAR_RE.match(tok)
        if want == "v":
            if m is None:
                raise ParseError(f"unexpected symbol {tok!r}, expected a variable", position=i)
            frames[-1][2].append(int(m.group(1)))
            i += 1
            continue
        if m is not None or tok == "0":
            if want == "f":
                raise ParseError(f"unexpected symbol {tok!r}, expected a formula", position=i)
            node: object = Zero() if m is None else Var(int(m.group(1)))
            i += 1
        elif tok in _TERM_SLOTS:
            if want == "f":
                raise ParseError(f"unexpected symbol {tok!r}, expected a formula", position=i)
            frames.append([tok, _TERM_SLOTS[tok], []])
            i += 1
            continue
        elif tok in _FORM_SLOTS:
            if want == "t":
                raise ParseError(f"unexpected symbol {tok!r}, expected a term", position=i)
            frames.append([tok, _FORM_SLOTS[tok], []])
            i += 1
            continue
        else:
            raise ParseError(f"unexpected symbol {tok!r}", position=i)
        # deliver the completed node upward, folding filled frames
        while True:
            if not frames:
                root = node
                break
            f = frames[-1]
            f[2].append(node)
            if len(f[2]) < len(f[1]):
                break
            frames.pop()
            node = build(f[0], f[2])

    if i < n:
        raise ParseError("trailing symbols", position=i)
    return root


# --- syntax codes -------------------------------------------------------

def encode_syntax(x: "Term | Formula", alphabet: Alphabet | None = None) -> SeqCode:
    alphabet = alphabet or DEFAULT_ALPHABET
    return seq_encode([alphabet.code_of(s) for s in flatten(x)])


def decode_syntax(c: "SeqCode | int", alphabet: Alphabet | None = None) -> "Term | Formula":
    alphabet = alphabet or DEFAULT_ALPHABET
    symbols = [alphabet.symbol_of(a) for a in seq_decode(c)]
    return parse(symbols)


def is_wff_code(c: "SeqCode | int", alphabet: Alphabet | None = None) -> bool:
    try:
        return isinstance(decode_syntax(c, alphabet), Formula)
    except Exception:
        return False


def is_term_code(c: "SeqCode | int", alphabet: Alphabet | None = None) -> bool:
    try:
        return isinstance(decode_syntax(c, alphabet), Term)
    except Exception:
        return False


def numeral(n: int) -> Term:
    """Closed term of value n with O(bit-length) symbols.

    Doubling form: numeral(2j) = SS0 * numeral(j), numeral(2j+1) adds one S.
    Built iteratively over the bits so huge values do not hit the recursion
    limit.
    """
    if n < 0:
        raise ValueError("numerals denote naturals")
    if n == 0:
        return Zero()
    two = Succ(Succ(Zero()))
    node: Term = Succ(Zero())
    for bit in bin(n)[3:]:
        node = Times(two, node)
        if bit == "1":
            node = Succ(node)
    return node


# --- proof-list codes ---------------------------------------------------

def encode_proof(formulas: Sequence[Formula], alphabet: Alphabet | None = None) -> SeqCode:
    """Nested code: the sequence of the formulas' own code values."""
    return seq_encode([to_number(encode_syntax(f, alphabet)) for f in formulas])


def decode_proof(c: "SeqCode | int", alphabet: Alphabet | None = None) -> list[Formula]:
    values = seq_decode(c)
    out = []
    for pos, value in enumerate(values, start=1):
        try:
            node = decode_syntax(as_code(value), alphabet)
        except Exception as exc:
            raise NotProofCodeError(f"element {pos} is not a wff code: {exc}") from exc
        if not isinstance(node, Formula):
            raise NotProofCodeError(f"element {pos} is not a wff code")
        out.append(node)
    return out


# --- human-readable prefix text form ------------------------------------

_TEXT_OF_GLYPH = {
    "¬": "not",
    "→": "imp",
    "∧": "and",
    "∨": "or",
    "∀": "forall",
    "∃": "exists",
    "=": "=",
    "0": "0",
    "S": "S",
    "+": "+",
    "·": "*",
    "diagfn": "diagfn",
    "Prov": "Prov",
}
_GLYPH_OF_TEXT = {t: g for g, t in _TEXT_OF_GLYPH.items()}


def format_text(node: "Term | Formula") -> str:
    """Render as parenthesized prefix text, e.g. ``(forall v0 (= v0 v0))``."""
    tokens: list[str] = []
    stack: list[object] = [node]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            tokens.append(x)
            continue
        sym, parts = _node_parts(x)
        name = _TEXT_OF_GLYPH.get(sym, sym)
        if parts:
            tokens.append("(")
            tokens.append(name)
            stack.append(")")
            stack.extend(reversed(parts))
        else:
            tokens.append(name)
    buf: list[str] = []
    for t in tokens:
        if buf and t != ")" and buf[-1] != "(":
            buf.append(" ")
        buf.append(t)
    return "".join(buf)


def parse_text(text: str, expect: str | None = None) -> "Term | Formula":
    """Read the parenthesized prefix form back into an AST."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    frames: list[list] = []  # [head glyph, slots, children]
    root = None
    i, n = 0, len(tokens)

    def build(head: str, children: list):
        ctor = _FORM_BUILD.get(head) or _TERM_BUILD[head]
        return ctor(*children)

    def deliver(node):
        nonlocal root
        if frames:
            frames[-1][2].append(node)
        else:
            root = node

    while i < n:
        if root is not None:
            raise ParseError("trailing symbols", position=i)
        tok = tokens[i]
        if frames:
            f = frames[-1]
            want = f[1][len(f[2])] if len(f[2]) < len(f[1]) else ")"
        else:
            want = {"formula": "f", "term": "t"}.get(expect, "a")
        if tok == ")":
            if not frames:
                raise ParseError("unexpected ')'", position=i)
            if want != ")":
                raise ParseError("missing operand before ')'", position=i)
            f = frames.pop()
            deliver(build(f[0], f[2]))
            i += 1
            continue
        if want == ")":
            raise ParseError(f"unexpected {tok!r}, expected ')'", position=i)
        if want == "v":
            m = _VAR_RE.match(tok)
            if m is None:
                raise ParseError(f"unexpected symbol {tok!r}, expected a variable", position=i)
            frames[-1][2].append(int(m.group(1)))
            i += 1
            continue
        if tok == "(":
            if i + 1 >= n:
                raise ParseError("truncated input", position=i + 1)
            head = _GLYPH_OF_TEXT.get(tokens[i + 1])
            if head is None or (head not in _TERM_SLOTS and head not in _FORM_SLOTS):
                raise ParseError(f"unexpected symbol {tokens[i + 1]!r}", position=i + 1)
            if head in _TERM_SLOTS and want == "f":
                raise ParseError(f"unexpected symbol {tokens[i + 1]!r}, expected a formula", position=i + 1)
            if head in _FORM_SLOTS and want == "t":
                raise ParseError(f"unexpected symbol {tokens[i + 1]!r}, expected a term", position=i + 1)
            frames.append([head, _TERM_SLOTS.get(head) or _FORM_SLOTS[head], []])
            i += 2
            continue
        m = _VAR_RE.match(tok)
        if m is not None:
            if want == "f":
                raise ParseError(f"unexpected symbol {tok!r}, expected a formula", position=i)
            deliver(Var(int(m.group(1))))
            i += 1
            continue
        if tok == "0":
            if want == "f":
                raise ParseError(f"unexpected symbol {tok!r}, expected a formula", position=i)
            deliver(Zero())
            i += 1
            continue
        raise ParseError(f"unexpected symbol {tok!r}", position=i)

    if frames or root is None:
        raise ParseError("truncated input", position=n)
    return root
