"""Exception hierarchy shared across the package.

Every domain error carries a stable ``code`` string so the CLI can emit
structured JSON errors without string-matching messages.
"""


class ZeckGodelError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidSupportError(ZeckGodelError):
    """A Fibonacci index list violates the non-consecutive support rules."""

    code = "invalid_support"


class NotSequenceCodeError(ZeckGodelError):
    """A natural number / support is not in the image of the sequence coder."""

    code = "not_a_sequence_code"


class CodeTooLargeError(ZeckGodelError):
    """Materializing a code as an exact integer would exceed the size cap."""

    code = "code_too_large"

    def __init__(self, message: str, bits_estimate: int):
        super().__init__(message)
        self.bits_estimate = bits_estimate


class AlphabetError(ZeckGodelError):
    code = "invalid_alphabet"


class InvalidSymbolError(ZeckGodelError):
    """A symbol number is neither a base code nor a variable code."""

    code = "invalid_symbol_number"

    def __init__(self, symbol_number: int):
        super().__init__(f"invalid symbol number {symbol_number}")
        self.symbol_number = symbol_number


class ParseError(ZeckGodelError):
    """Symbol string is not derivable from the prefix grammar."""

    code = "parse_error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotWffCodeError(ZeckGodelError):
    code = "not_a_wff_code"


class NotTermCodeError(ZeckGodelError):
    code = "not_a_term_code"


class NotProofCodeError(ZeckGodelError):
    code = "not_a_proof_code"


class NumeralTooLargeError(ZeckGodelError):
    """Diagonalization would need a numeral beyond the configured bit limit."""

    code = "numeral_too_large"


class PrimeCodingError(ZeckGodelError):
    code = "prime_coding_error"


class TheoryConfigError(ZeckGodelError):
    code = "invalid_theory_config"
