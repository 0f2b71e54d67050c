"""Code-level substitution, diagonalization, and the fixed-point construction.

``sub_z`` is the raw symbol-level splice: every occurrence of the target
variable's code is replaced, bound ones included.  ``sub_free`` respects
binders.  Both work on symbol-code lists and re-encode with renumbered
positions, so outputs are always valid sequence codes and no step recurses
over the (possibly enormous) term structure.
"""

from __future__ import annotations

from .errors import NotTermCodeError, NotWffCodeError, NumeralTooLargeError
from .seqcode import SeqCode, as_code, bits_estimate, seq_decode, seq_encode, to_number
from .syntax import (
    _FORM_SLOTS,
    _TERM_SLOTS,
    Alphabet,
    DEFAULT_ALPHABET,
    DiagFn,
    Var,
    encode_syntax,
    is_term_code,
    is_wff_code,
    numeral,
)

# Diagonalization refuses to build numerals beyond this many bits.
DEFAULT_NUMERAL_BIT_LIMIT = 1 << 21


def _checked(formula_code, term_code, alphabet):
    fc = as_code(formula_code)
    tc = as_code(term_code)
    if not is_wff_code(fc, alphabet):
        raise NotWffCodeError("not a wff code")
    if not is_term_code(tc, alphabet):
        raise NotTermCodeError("not a term code")
    return fc, tc


def sub_z(
    formula_code: "SeqCode | int",
    term_code: "SeqCode | int",
    var: int = 0,
    alphabet: Alphabet | None = None,
) -> SeqCode:
    """Replace every occurrence of v_var (bound ones too) and re-encode."""
    alphabet = alphabet or DEFAULT_ALPHABET
    fc, tc = _checked(formula_code, term_code, alphabet)
    target = alphabet.var_code(var)
    replacement = seq_decode(tc)
    out: list[int] = []
    for a in seq_decode(fc):
        if a == target:
            out.extend(replacement)
        else:
            out.append(a)
    return seq_encode(out)


def sub_free(
    formula_code: "SeqCode | int",
    term_code: "SeqCode | int",
    var: int = 0,
    alphabet: Alphabet | None = None,
) -> SeqCode:
    """Replace only free occurrences of v_var; agrees with sub_z off binders."""
    alphabet = alphabet or DEFAULT_ALPHABET
    fc, tc = _checked(formula_code, term_code, alphabet)
    target = alphabet.var_code(var)
    replacement = seq_decode(tc)
    values = seq_decode(fc)

    out: list[int] = []
    # frames: [pending subtree operands, whether this frame shadows the target]
    frames: list[list] = []
    shadow = 0
    i, n = 0, len(values)
    while i < n:
        a = values[i]
        sym = alphabet.symbol_of(a)
        slots = _FORM_SLOTS.get(sym) or _TERM_SLOTS.get(sym)
        if slots and slots[0] == "v":  # binder: variable token is consumed inline
            bound = values[i + 1]
            out.append(a)
            out.append(bound)
            shadows = bound == target
            shadow += shadows
            frames.append([1, shadows])
            i += 2
            continue
        if slots:
            out.append(a)
            frames.append([len(slots), False])
            i += 1
            continue
        # leaf: Zero or a variable
        if a == target and shadow == 0:
            out.extend(replacement)
        else:
            out.append(a)
        i += 1
        if frames:
            frames[-1][0] -= 1
        while frames and frames[-1][0] == 0:
            shadow -= frames[-1][1]
            frames.pop()
            if frames:
                frames[-1][0] -= 1
    return seq_encode(out)


def diag(
    code: "SeqCode | int",
    var: int = 0,
    alphabet: Alphabet | None = None,
    max_bits: int = DEFAULT_NUMERAL_BIT_LIMIT,
) -> SeqCode:
    """Substitute the formula's own value, as a numeral, for its free variable."""
    alphabet = alphabet or DEFAULT_ALPHABET
    c = as_code(code)
    if not is_wff_code(c, alphabet):
        raise NotWffCodeError("not a wff code")
    if bits_estimate(c) > max_bits:
        raise NumeralTooLargeError(
            f"numeral too large: code is ~{bits_estimate(c)} bits, limit {max_bits}"
        )
    value = to_number(c, max_index=c.max_index)
    return sub_z(c, encode_syntax(numeral(value), alphabet), var, alphabet)


def fixed_point(
    phi_code: "SeqCode | int",
    var: int = 0,
    alphabet: Alphabet | None = None,
    max_bits: int = DEFAULT_NUMERAL_BIT_LIMIT,
) -> tuple[SeqCode, SeqCode]:
    """Sentence psi with code(psi) == diag(m), m the code of phi(diagfn(x)).

    Returns (psi_code, m).  The defining identity is checkable exactly on
    support form; psi itself is never materialized as an integer.
    """
    alphabet = alphabet or DEFAULT_ALPHABET
    pc = as_code(phi_code)
    inner = encode_syntax(DiagFn(Var(var)), alphabet)
    m = sub_free(pc, inner, var, alphabet)
    if bits_estimate(m) > max_bits:
        raise NumeralTooLargeError(
            f"numeral too large: code is ~{bits_estimate(m)} bits, limit {max_bits}"
        )
    value = to_number(m, max_index=m.max_index)
    psi = sub_z(m, encode_syntax(numeral(value), alphabet), var, alphabet)
    return psi, m
