import json

import pytest

from zeckgodel.cli import main
from zeckgodel.syntax import DEFAULT_ALPHABET


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zeck_decode_example(capsys):
    code, out, err = run_cli(capsys, "zeck", "decode", "32")
    assert code == 0
    assert out == "Z[7,5,3]\n"
    assert err == ""


def test_zeck_encode(capsys):
    for literal in ("Z[7,5,3]", "[7,5,3]", "7,5,3"):
        code, out, _ = run_cli(capsys, "zeck", "encode", literal)
        assert code == 0
        assert out.strip() == "32"


def test_seq_encode_example(capsys):
    code, out, _ = run_cli(capsys, "seq", "encode", "[0,0]")
    assert code == 0
    payload = json.loads(out)
    assert payload["support"] == [7, 3]
    assert payload["number"] == "24"


def test_seq_roundtrip_through_emitted_literal(capsys):
    _, out, _ = run_cli(capsys, "seq", "encode", "[4,1,4]")
    support = json.loads(out)["support"]
    literal = "Z[" + ",".join(map(str, support)) + "]"
    code, out, _ = run_cli(capsys, "seq", "decode", literal)
    assert code == 0
    assert json.loads(out) == {"sequence": [4, 1, 4]}
    # and the number form decodes identically
    number = json.loads(run_cli(capsys, "seq", "encode", "[4,1,4]")[1])["number"]
    _, out, _ = run_cli(capsys, "seq", "decode", number)
    assert json.loads(out) == {"sequence": [4, 1, 4]}


def test_seq_at_and_concat(capsys):
    _, out, _ = run_cli(capsys, "seq", "at", "24", "2")
    assert out.strip() == "0"
    _, a, _ = run_cli(capsys, "seq", "encode", "[1]")
    _, b, _ = run_cli(capsys, "seq", "encode", "[2]")
    _, ab, _ = run_cli(capsys, "seq", "encode", "[1,2]")
    _, joined, _ = run_cli(
        capsys, "seq", "concat", json.loads(a)["number"], json.loads(b)["number"]
    )
    assert json.loads(joined)["support"] == json.loads(ab)["support"]


def test_fib_and_pair(capsys):
    assert run_cli(capsys, "fib", "7")[1].strip() == "21"
    assert run_cli(capsys, "fib", "0x7")[1].strip() == "21"
    assert run_cli(capsys, "pair", "0", "2")[1].strip() == "3"
    assert run_cli(capsys, "unpair", "3")[1].strip() == "0 2"


def test_oracle_commands(capsys):
    assert run_cli(capsys, "oracle", "check", "1", "2", "4")[1].strip() == "true"
    assert run_cli(capsys, "oracle", "check", "1", "1", "2")[1].strip() == "false"
    assert run_cli(capsys, "oracle", "solve", "5", "5")[1].strip() == "none"
    assert run_cli(capsys, "oracle", "solve", "1", "1")[1].strip() == "3"
    assert run_cli(capsys, "oracle", "mp", "10")[1].strip() == "9 10 12"


def test_syntax_commands(capsys):
    code, out, _ = run_cli(capsys, "syntax", "parse", "(forall v0 (= v0 v0))")
    assert code == 0
    assert out.strip() == "(forall v0 (= v0 v0))"
    _, out, _ = run_cli(capsys, "syntax", "encode", "(= 0 0)")
    payload = json.loads(out)
    assert payload["support"]
    _, out, _ = run_cli(capsys, "syntax", "decode", payload["number"])
    assert out.strip() == "(= 0 0)"
    _, out, _ = run_cli(capsys, "--format", "json", "syntax", "check", payload["number"])
    assert json.loads(out) == {"is_code": True, "is_wff": True, "is_term": False}


def test_sub_command(capsys):
    _, expected, _ = run_cli(capsys, "syntax", "encode", "(= 0 0)")
    _, out, _ = run_cli(capsys, "sub", "(= v0 v0)", "0")
    assert json.loads(out)["support"] == json.loads(expected)["support"]
    # bound occurrence left alone under --free
    _, fc, _ = run_cli(capsys, "syntax", "encode", "(forall v0 (= v0 v0))")
    _, out, _ = run_cli(capsys, "sub", "--free", "(forall v0 (= v0 v0))", "0")
    assert json.loads(out)["support"] == json.loads(fc)["support"]


def test_diag_and_fixpoint(capsys):
    _, fp_out, _ = run_cli(capsys, "fixpoint", "(= v0 v0)")
    fp = json.loads(fp_out)
    m_literal = "Z[" + ",".join(map(str, fp["m"]["support"])) + "]"
    _, diag_out, _ = run_cli(capsys, "diag", m_literal)
    assert json.loads(diag_out)["support"] == fp["psi"]["support"]
    assert fp["psi"]["bits_estimate"] > 0


def test_godel_command(capsys):
    code, out, _ = run_cli(capsys, "godel")
    assert code == 0
    payload = json.loads(out)
    assert payload["g"]["support"]
    assert payload["m"]["support"]
    assert "number" not in payload["g"]  # megabit code stays in support form
    assert payload["g"]["bits_estimate"] > 1_000_000


def test_prov_and_proof_check(capsys, tmp_path):
    theory = {
        "extra_axioms": ["(= 0 0)", "(imp (= 0 0) (forall v0 (= v0 v0)))"],
    }
    tpath = tmp_path / "theory.json"
    tpath.write_text(json.dumps(theory))
    code, out, _ = run_cli(
        capsys, "--theory", str(tpath), "--bound", "3", "prov", "(forall v0 (= v0 v0))"
    )
    assert code == 0
    witness = json.loads(out)["proof"]
    assert witness is not None
    literal = "Z[" + ",".join(map(str, witness["support"])) + "]"
    code, out, _ = run_cli(capsys, "--theory", str(tpath), "proof", "check", literal)
    assert code == 0
    assert out.strip() == "true"
    # and from a file
    ppath = tmp_path / "proof.txt"
    ppath.write_text(literal)
    assert run_cli(capsys, "--theory", str(tpath), "proof", "check", str(ppath))[1].strip() == "true"
    # unprovable at a tiny bound
    code, out, _ = run_cli(
        capsys, "--theory", str(tpath), "--bound", "1", "prov", "(forall v0 (= v0 v0))"
    )
    assert out.strip() == "none"
    # trailing per-command form overrides the global flag
    code, out, _ = run_cli(
        capsys, "--theory", str(tpath), "prov", "(forall v0 (= v0 v0))", "--bound", "2"
    )
    assert out.strip() == "none"


def test_alphabet_flag(capsys, tmp_path):
    table = dict(DEFAULT_ALPHABET.base)
    apath = tmp_path / "alpha.json"
    apath.write_text(json.dumps({"symbols": table, "offset": 32}))
    _, default_out, _ = run_cli(capsys, "syntax", "encode", "(= v0 v0)")
    _, shifted_out, _ = run_cli(capsys, "--alphabet", str(apath), "syntax", "encode", "(= v0 v0)")
    assert json.loads(default_out)["support"] != json.loads(shifted_out)["support"]


def test_compare_command(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "compare", "--symbols", "12", "--seed", "3", "--json", str(out_path)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["sequence_length"] == 12
    assert json.loads(out_path.read_text())["sequence_length"] == 12
    code, out, _ = run_cli(capsys, "compare", "--formula", "(= (S 0) (S 0))")
    assert json.loads(out)["sequence_length"] == 5


def test_domain_error_contract(capsys):
    code, out, err = run_cli(capsys, "syntax", "decode", "1")
    assert code == 1
    assert out == ""
    payload = json.loads(err)
    assert payload["code"] == "not_a_sequence_code"
    code, _, err = run_cli(capsys, "syntax", "parse", "(= 0")
    assert code == 1
    payload = json.loads(err)
    assert payload["code"] == "parse_error"
    assert "position" in payload


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_json_mode_single_document(capsys):
    _, out, err = run_cli(capsys, "--format", "json", "zeck", "decode", "32")
    assert json.loads(out) == {"support": [7, 5, 3]}
    assert err == ""


def test_deterministic_output(capsys):
    first = run_cli(capsys, "--format", "json", "seq", "encode", "[3,1,4,1,5]")
    second = run_cli(capsys, "--format", "json", "seq", "encode", "[3,1,4,1,5]")
    assert first == second


def test_json_mode_every_subcommand_emits_one_document(capsys):
    commands = [
        ["fib", "7"],
        ["pair", "0", "2"],
        ["unpair", "3"],
        ["zeck", "encode", "Z[7,5,3]"],
        ["zeck", "decode", "32"],
        ["seq", "encode", "[0,0]"],
        ["seq", "decode", "24"],
        ["seq", "at", "24", "1"],
        ["seq", "concat", "24", "0"],
        ["syntax", "parse", "(= 0 0)"],
        ["syntax", "encode", "(= 0 0)"],
        ["syntax", "check", "24"],
        ["sub", "(= v0 v0)", "0"],
        ["diag", "(= v0 v0)"],
        ["fixpoint", "(= v0 v0)"],
        ["prov", "(= 0 0)", "--bound", "1"],
        ["godel"],
        ["oracle", "check", "1", "2", "4"],
        ["oracle", "solve", "1", "1"],
        ["oracle", "mp", "2"],
        ["compare", "--symbols", "5", "--seed", "1"],
    ]
    for argv in commands:
        code, out, err = run_cli(capsys, "--format", "json", *argv)
        assert code == 0, argv
        json.loads(out)  # exactly one valid document
        assert err == "", argv
