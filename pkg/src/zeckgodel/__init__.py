"""Godel numbering of sequences, formulas and proofs via Zeckendorf supports.

The coding stack, bottom to top: exact Fibonacci arithmetic and Cantor
pairing (`numeric`), Zeckendorf encode/decode (`zeckendorf`), sequence codes
with a dual bignum/support representation (`seqcode`), a concrete
first-order syntax and its codes (`syntax`), code-level substitution and the
fixed-point construction (`substitution`), a Hilbert-style proof checker
with bounded search (`logic`), the Fibonacci verification oracle (`oracle`),
and a prime-exponent baseline for size comparisons (`primecode`).
"""

from .errors import (
    AlphabetError,
    CodeTooLargeError,
    InvalidSupportError,
    InvalidSymbolError,
    NotProofCodeError,
    NotSequenceCodeError,
    NotTermCodeError,
    NotWffCodeError,
    NumeralTooLargeError,
    ParseError,
    PrimeCodingError,
    TheoryConfigError,
    ZeckGodelError,
)
from .numeric import cantor_pair, cantor_unpair, fib, max_fib_index_le, zeck_length_bound
from .zeckendorf import is_valid_support, z_decode, z_encode
from .seqcode import (
    DEFAULT_MATERIALIZE_MAX_INDEX,
    SeqCode,
    as_code,
    bits_estimate,
    concat,
    from_number,
    is_code,
    seq_decode,
    seq_encode,
    seq_len,
    symbol_at,
    to_number,
)
from .syntax import (
    Alphabet,
    And,
    DiagFn,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Neg,
    Or,
    Plus,
    ProvP,
    Succ,
    Term,
    Times,
    Var,
    Zero,
    decode_proof,
    decode_syntax,
    default_alphabet,
    encode_proof,
    encode_syntax,
    flatten,
    format_text,
    is_term_code,
    is_wff_code,
    load_alphabet,
    numeral,
    parse,
    parse_text,
)
from .substitution import diag, fixed_point, sub_free, sub_z
from .logic import (
    Proof,
    ProofStep,
    TheoryConfig,
    check_mp,
    check_mp_codes,
    check_proof,
    check_structured_proof,
    default_theory,
    godel_sentence,
    is_axiom,
    load_theory,
    prov_bounded,
)
from .oracle import OracleTriple, mp_witness, oracle_check, oracle_solve
from .primecode import SizeReport, code_p, compare_sizes, decode_p, prime_table, sub_prime

__version__ = "0.1.0"
