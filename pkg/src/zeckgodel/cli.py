"""Command-line front end.

Code literals are decimal, hex (0x...), or support form Z[e1,e2,...] with
decreasing indices.  Formula arguments accept either a code literal or the
prefix text form, e.g. ``(forall v0 (= v0 v0))``.

Exit codes: 0 success, 1 domain error (structured JSON object on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .errors import ZeckGodelError
from .numeric import cantor_pair, cantor_unpair, fib
from .zeckendorf import is_valid_support, z_decode
from .seqcode import (
    SeqCode,
    as_code,
    bits_estimate,
    concat,
    from_number,
    is_code,
    seq_decode,
    seq_encode,
    symbol_at,
    to_number,
)

from .syntax import (
    Alphabet,
    Formula,
    decode_syntax,
    default_alphabet,
    encode_syntax,
    flatten,
    format_text,
    is_term_code,
    is_wff_code,
    load_alphabet,
    parse_text,
)
from .substitution import diag, fixed_point, sub_free, sub_z
from .logic import (
    TheoryConfig,
    check_proof,
    default_theory,
    godel_sentence,
    load_theory,
    prov_bounded,
)
from .oracle import mp_witness, oracle_check, oracle_solve
from .primecode import compare_sizes

# Print threshold: codes with a larger max support index are shown in support
# form only.  Deliberately far below the library's to_number cap; printing a
# megabit Gödel-sentence value in decimal helps nobody.
DEFAULT_PRINT_THRESHOLD = 1 << 16


# --- literals -------------------------------------------------------------

def parse_nat(text: str) -> int:
    t = text.strip()
    try:
        n = int(t, 16) if t.lower().startswith("0x") else int(t, 10)
    except ValueError:
        raise ZeckGodelError(f"not a natural number literal: {text!r}") from None
    if n < 0:
        raise ZeckGodelError(f"negative value not allowed: {text!r}")
    return n


def parse_support_literal(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("Z[") and t.endswith("]"):
        t = t[1:]
    if t.startswith("[") and t.endswith("]"):
        t = t[1:-1]
    body = t.strip()
    indices = tuple(parse_nat(tok) for tok in body.split(",")) if body else ()
    if not is_valid_support(indices):
        raise ZeckGodelError(f"not a valid Zeckendorf support: {text!r}")
    return indices


def parse_code_literal(text: str) -> SeqCode:
    t = text.strip()
    if t.startswith("Z[") or t.startswith("["):
        return SeqCode(parse_support_literal(t))
    return from_number(parse_nat(t))


def parse_formula_arg(text: str, alphabet: Alphabet) -> SeqCode:
    """A formula given either as prefix text or as a code literal."""
    t = text.strip()
    if t.startswith("(") or t in ("0",) or t.startswith("v"):
        return encode_syntax(parse_text(t), alphabet)
    return parse_code_literal(t)


def parse_var(text: str) -> int:
    t = text.strip()
    if t.startswith("v"):
        t = t[1:]
    try:
        index = int(t)
    except ValueError:
        raise ZeckGodelError(f"not a variable: {text!r}") from None
    if index < 0:
        raise ZeckGodelError(f"not a variable: {text!r}")
    return index


# --- output ----------------------------------------------------------------

def code_json(c: SeqCode, threshold: int) -> dict:
    out: dict = {"support": list(c.support), "bits_estimate": bits_estimate(c)}
    if c.max_index <= threshold:
        out["number"] = str(to_number(c, max_index=threshold))
    return out


class _Io:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, payload: dict, text: str | None = None) -> None:
        if self.fmt == "json" or text is None:
            print(json.dumps(payload))
        else:
            print(text)


# --- command handlers --------------------------------------------------------

def _cmd_fib(args, io, ctx):
    value = fib(parse_nat(args.index))
    io.emit({"value": str(value)}, str(value))


def _cmd_pair(args, io, ctx):
    value = cantor_pair(parse_nat(args.x), parse_nat(args.y))
    io.emit({"value": str(value)}, str(value))


def _cmd_unpair(args, io, ctx):
    x, y = cantor_unpair(parse_nat(args.p))
    io.emit({"x": str(x), "y": str(y)}, f"{x} {y}")


def _cmd_zeck_encode(args, io, ctx):
    support = parse_support_literal(args.indices)
    value = to_number(SeqCode(support), max_index=ctx["threshold"])
    io.emit({"value": str(value)}, str(value))


def _cmd_zeck_decode(args, io, ctx):
    support = z_decode(parse_nat(args.n))
    io.emit({"support": list(support)}, "Z[" + ",".join(map(str, support)) + "]")


def _cmd_seq_encode(args, io, ctx):
    try:
        items = json.loads(args.items)
    except json.JSONDecodeError as exc:
        raise ZeckGodelError(f"not a JSON list: {args.items!r}") from exc
    if not isinstance(items, list) or not all(
        isinstance(a, int) and not isinstance(a, bool) and a >= 0 for a in items
    ):
        raise ZeckGodelError("sequence must be a JSON list of naturals")
    io.emit(code_json(seq_encode(items), ctx["threshold"]))


def _cmd_seq_decode(args, io, ctx):
    io.emit({"sequence": seq_decode(parse_code_literal(args.code))})


def _cmd_seq_at(args, io, ctx):
    value = symbol_at(parse_code_literal(args.code), parse_nat(args.i))
    io.emit({"value": str(value)}, str(value))


def _cmd_seq_concat(args, io, ctx):
    result = concat(parse_code_literal(args.a), parse_code_literal(args.b))
    io.emit(code_json(result, ctx["threshold"]))


def _cmd_syntax_parse(args, io, ctx):
    node = parse_text(args.text)
    io.emit({"text": format_text(node), "kind": "formula" if isinstance(node, Formula) else "term"},
            format_text(node))


def _cmd_syntax_encode(args, io, ctx):
    node = parse_text(args.text)
    io.emit(code_json(encode_syntax(node, ctx["alphabet"]), ctx["threshold"]))


def _cmd_syntax_decode(args, io, ctx):
    node = decode_syntax(parse_code_literal(args.code), ctx["alphabet"])
    io.emit({"text": format_text(node)}, format_text(node))


def _cmd_syntax_check(args, io, ctx):
    c = parse_code_literal(args.code)
    payload = {
        "is_code": is_code(c),
        "is_wff": is_wff_code(c, ctx["alphabet"]),
        "is_term": is_term_code(c, ctx["alphabet"]),
    }
    io.emit(payload)


def _cmd_sub(args, io, ctx):
    alphabet = ctx["alphabet"]
    fc = parse_formula_arg(args.formula, alphabet)
    tc = parse_formula_arg(args.term, alphabet)
    var = parse_var(args.var)
    op = sub_free if args.free else sub_z
    io.emit(code_json(op(fc, tc, var, alphabet), ctx["threshold"]))


def _cmd_diag(args, io, ctx):
    c = parse_formula_arg(args.code, ctx["alphabet"])
    io.emit(code_json(diag(c, alphabet=ctx["alphabet"]), ctx["threshold"]))


def _cmd_fixpoint(args, io, ctx):
    psi, m = fixed_point(parse_formula_arg(args.formula, ctx["alphabet"]), alphabet=ctx["alphabet"])
    io.emit({"psi": code_json(psi, ctx["threshold"]), "m": code_json(m, ctx["threshold"])})


def _cmd_proof_check(args, io, ctx):
    text = args.code
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    ok = check_proof(parse_code_literal(text), ctx["theory"], ctx["alphabet"])
    io.emit({"ok": ok}, "true" if ok else "false")


def _cmd_prov(args, io, ctx):
    target = parse_formula_arg(args.formula, ctx["alphabet"])
    bound = args.bound_local if args.bound_local is not None else ctx["bound"]
    found = prov_bounded(target, bound, ctx["theory"], ctx["alphabet"])
    if found is None:
        io.emit({"proof": None}, "none")
    else:
        io.emit({"proof": code_json(found, ctx["threshold"])})


def _cmd_godel(args, io, ctx):
    g, m = godel_sentence(ctx["theory"], ctx["alphabet"])
    io.emit({"g": code_json(g, ctx["threshold"]), "m": code_json(m, ctx["threshold"])})


def _cmd_oracle_check(args, io, ctx):
    ok = oracle_check(parse_nat(args.n), parse_nat(args.m), parse_nat(args.k))
    io.emit({"ok": ok}, "true" if ok else "false")


def _cmd_oracle_solve(args, io, ctx):
    k = oracle_solve(parse_nat(args.n), parse_nat(args.m))
    io.emit({"k": k}, "none" if k is None else str(k))


def _cmd_oracle_mp(args, io, ctx):
    t = mp_witness(parse_nat(args.n))
    io.emit({"n": t.n, "m": t.m, "k": t.k}, f"{t.n} {t.m} {t.k}")


def _cmd_compare(args, io, ctx):
    if args.formula is not None:
        alphabet = ctx["alphabet"]
        node = parse_text(args.formula)
        seq = [alphabet.code_of(s) for s in flatten(node)]
    else:
        rng = random.Random(args.seed)
        seq = [rng.randint(1, 20) for _ in range(args.symbols)]
    report = compare_sizes(seq).to_dict()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    io.emit(report)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zeckgodel",
        description="Godel numbering via Zeckendorf representations",
    )
    p.add_argument("--alphabet", metavar="PATH", help="alphabet config JSON")
    p.add_argument("--theory", metavar="PATH", help="theory config JSON")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threshold", type=int, default=DEFAULT_PRINT_THRESHOLD,
                   metavar="MAX_INDEX", help="materialization threshold (max support index)")
    p.add_argument("--bound", type=int, default=8, metavar="N", help="proof search step budget")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fib", help="Fibonacci number F_e")
    sp.add_argument("index")
    sp.set_defaults(handler=_cmd_fib)

    sp = sub.add_parser("pair", help="Cantor pairing")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.set_defaults(handler=_cmd_pair)

    sp = sub.add_parser("unpair", help="inverse Cantor pairing")
    sp.add_argument("p")
    sp.set_defaults(handler=_cmd_unpair)

    sp = sub.add_parser("zeck", help="Zeckendorf encode/decode")
    zsub = sp.add_subparsers(dest="zeck_command", required=True)
    q = zsub.add_parser("encode")
    q.add_argument("indices", help="support, e.g. Z[7,5,3] or [7,5,3] ")
    q.set_defaults(handler=_cmd_zeck_encode)
    q = zsub.add_parser("decode")
    q.add_argument("n")
    q.set_defaults(handler=_cmd_zeck_decode)

    sp = sub.add_parser("seq", help="sequence codes")
    qsub = sp.add_subparsers(dest="seq_command", required=True)
    q = qsub.add_parser("encode")
    q.add_argument("items", help="JSON list, e.g. [0,0]")
    q.set_defaults(handler=_cmd_seq_encode)
    q = qsub.add_parser("decode")
    q.add_argument("code")
    q.set_defaults(handler=_cmd_seq_decode)
    q = qsub.add_parser("at")
    q.add_argument("code")
    q.add_argument("i")
    q.set_defaults(handler=_cmd_seq_at)
    q = qsub.add_parser("concat")
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(handler=_cmd_seq_concat)

    sp = sub.add_parser("syntax", help="formula/term codes")
    ssub = sp.add_subparsers(dest="syntax_command", required=True)
    q = ssub.add_parser("parse")
    q.add_argument("text")
    q.set_defaults(handler=_cmd_syntax_parse)
    q = ssub.add_parser("encode")
    q.add_argument("text")
    q.set_defaults(handler=_cmd_syntax_encode)
    q = ssub.add_parser("decode")
    q.add_argument("code")
    q.set_defaults(handler=_cmd_syntax_decode)
    q = ssub.add_parser("check")
    q.add_argument("code")
    q.set_defaults(handler=_cmd_syntax_check)

    sp = sub.add_parser("sub", help="substitute a term for a variable")
    sp.add_argument("formula")
    sp.add_argument("term")
    sp.add_argument("--var", default="v0")
    sp.add_argument("--free", action="store_true", help="replace free occurrences only")
    sp.set_defaults(handler=_cmd_sub)

    sp = sub.add_parser("diag", help="diagonalize a formula code")
    sp.add_argument("code")
    sp.set_defaults(handler=_cmd_diag)

    sp = sub.add_parser("fixpoint", help="diagonal-lemma fixed point")
    sp.add_argument("formula")
    sp.set_defaults(handler=_cmd_fixpoint)

    sp = sub.add_parser("proof", help="proof codes")
    psub = sp.add_subparsers(dest="proof_command", required=True)
    q = psub.add_parser("check")
    q.add_argument("code", help="code literal or path to a file containing one")
    q.set_defaults(handler=_cmd_proof_check)

    sp = sub.add_parser("prov", help="bounded provability search")
    sp.add_argument("formula")
    sp.add_argument("--bound", dest="bound_local", type=int, default=None,
                    metavar="N", help="step budget (overrides the global flag)")
    sp.set_defaults(handler=_cmd_prov)

    sp = sub.add_parser("godel", help="construct the Godel sentence")
    sp.set_defaults(handler=_cmd_godel)

    sp = sub.add_parser("oracle", help="Fibonacci verification oracle")
    osub = sp.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("check")
    q.add_argument("n")
    q.add_argument("m")
    q.add_argument("k")
    q.set_defaults(handler=_cmd_oracle_check)
    q = osub.add_parser("solve")
    q.add_argument("n")
    q.add_argument("m")
    q.set_defaults(handler=_cmd_oracle_solve)
    q = osub.add_parser("mp")
    q.add_argument("n")
    q.set_defaults(handler=_cmd_oracle_mp)

    sp = sub.add_parser("compare", help="Zeckendorf vs prime-exponent size report")
    sp.add_argument("--symbols", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--formula", help="benchmark this prefix-text sentence instead")
    sp.add_argument("--json", metavar="PATH", help="also write the report to a file")
    sp.set_defaults(handler=_cmd_compare)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # the threshold already bounds print sizes
    try:
        ctx = {
            "alphabet": load_alphabet(args.alphabet) if args.alphabet else default_alphabet(),
            "theory": load_theory(args.theory) if args.theory else default_theory(),
            "threshold": args.threshold,
            "bound": args.bound,
        }
        args.handler(args, _Io(args.format), ctx)
    except ZeckGodelError as exc:
        err = {"code": exc.code, "message": str(exc)}
        position = getattr(exc, "position", None)
        if position is not None:
            err["position"] = position
        print(json.dumps(err), file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
