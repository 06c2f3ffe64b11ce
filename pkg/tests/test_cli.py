import io
import json

from profint.cli import main


def run_cli(argv, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_decide_equal(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["decide", "--pi", "3^1,5^inf;default=0", "9*[3^(w-1)]", "3"],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "equal"


def test_decide_not_equal(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["decide", "--pi", "3^inf;default=0", "1", "2"], capsys=capsys
    )
    assert code == 1 and "modulus 3" in out


def test_decide_signature_error(capsys, monkeypatch):
    code, _, err = run_cli(
        ["decide", "--pi", "3^inf;default=0", "[3^(w-1)]", "0"], capsys=capsys
    )
    assert code == 2 and "error" in err


def test_decide_json(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["decide", "--pi", "3^inf;default=0", "--format", "json", "1", "2"],
        capsys=capsys,
    )
    assert code == 1
    payload = json.loads(out)
    assert payload == {
        "equal": False,
        "witness_modulus": 3,
        "residue_lhs": 1,
        "residue_rhs": 2,
    }


def test_solve_solvable(capsys, monkeypatch):
    doc = {"pi": "3^1,5^inf;default=0", "matrix": [["2"]], "rhs": ["[3^(w-1)]"]}
    code, out, _ = run_cli(
        ["solve", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["solvable"] and payload["verified"]
    # the witness round-trips through decide against the known solution
    code, out, _ = run_cli(
        [
            "decide",
            "--pi",
            "3^1,5^inf;default=0",
            payload["witness"][0],
            "[6^(w-1)]",
        ],
        capsys=capsys,
    )
    assert code == 0


def test_solve_unsolvable(capsys, monkeypatch):
    doc = {"pi": "3^inf;default=0", "matrix": [["3"]], "rhs": ["1"]}
    code, out, _ = run_cli(
        ["solve", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1 and json.loads(out)["refuting_modulus"] == 3


def test_solve_malformed(capsys, monkeypatch):
    code, _, err = run_cli(
        ["solve"],
        stdin_text='{"pi": "3^inf;default=0", "matrix": [["3"], ["1", "2"]], "rhs": ["1"]}',
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 2 and "error" in err
    code, _, err = run_cli(
        ["solve"], stdin_text="not json", monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 2


def test_closure(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["closure", "--pi", "2^inf;default=0", "--constraint", "(1,0)+(2,1)N"],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "(1,0)+(2,1)Z"


def test_member(capsys, monkeypatch):
    doc = {
        "pi": "3^1,5^inf;default=0",
        "constraint": "(1,0)+(2,1)N",
        "vector": ["1", "0"],
    }
    code, out, _ = run_cli(
        ["member", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0 and json.loads(out)["member"] is True
    doc["vector"] = ["0", "0"]
    code, out, _ = run_cli(
        ["member"], stdin_text=json.dumps(doc), monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 1


REDUCE_DOC = {
    "alphabet": ["a"],
    "variables": ["x", "y"],
    "equations": ["x = y*y"],
    "constraints": {"x": "(1)+(2)N", "y": "(1)+(1)N"},
}


def test_reduce_solvable(capsys, monkeypatch):
    doc = dict(REDUCE_DOC, pi="3^inf;default=0")
    code, out, _ = run_cli(
        ["reduce", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["solvable"]
    # x must be 2 in every admissible quotient
    code, _, _ = run_cli(
        ["decide", "--pi", "3^inf;default=0", payload["witness"]["x"][0], "2"],
        capsys=capsys,
    )
    assert code == 0


def test_reduce_refuted(capsys, monkeypatch):
    doc = dict(REDUCE_DOC, pi="2^inf;default=0")
    code, out, _ = run_cli(
        ["reduce", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["combined_modulus"] == 2


def test_reduce_unconstrained_variable(capsys, monkeypatch):
    doc = dict(REDUCE_DOC, pi="2^inf;default=0")
    doc["constraints"] = {"x": "(1)+(2)N"}
    code, _, err = run_cli(
        ["reduce"], stdin_text=json.dumps(doc), monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 2 and "error" in err


def test_oracle_eval_and_term(capsys, monkeypatch):
    code, out, _ = run_cli(
        [
            "oracle",
            "eval",
            "--pi",
            "3^1,5^inf;default=0",
            "--modulus",
            "15",
            "--expr",
            "[3^(w-1)]",
        ],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "12"
    code, out, _ = run_cli(
        [
            "oracle",
            "term",
            "--pi",
            "3^1,5^inf;default=0",
            "--modulus",
            "5",
            "--variables",
            "x",
            "--assign",
            "x=1",
            "--expr",
            "(x)^(3^(w-1))",
        ],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "2"


def test_oracle_divisors_deterministic(capsys, monkeypatch):
    argv = [
        "oracle",
        "divisors",
        "--pi",
        "2^inf;default=0",
        "--bound",
        "10",
        "--count",
        "8",
        "--seed",
        "3",
    ]
    code, out1, _ = run_cli(argv, capsys=capsys)
    assert code == 0
    _, out2, _ = run_cli(argv, capsys=capsys)
    assert out1 == out2 == "1 2 4 8\n"


def test_oracle_search(capsys, monkeypatch):
    doc = dict(REDUCE_DOC, pi="2^inf;default=0")
    code, out, _ = run_cli(
        ["oracle", "search", "--pi", "2^inf;default=0", "--modulus", "2"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1
    code, out, _ = run_cli(
        ["oracle", "search", "--pi", "2^inf;default=0", "--modulus", "4"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1  # still refuted: the failure is already at the 2-part


def test_witness_reverifies_through_oracle(capsys, monkeypatch):
    # print a solver witness, then confirm it with oracle eval on both sides
    doc = {"pi": "3^1,5^inf;default=0", "matrix": [["2"]], "rhs": ["[3^(w-1)]"]}
    code, out, _ = run_cli(
        ["solve", "--format", "json"],
        stdin_text=json.dumps(doc),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    witness = json.loads(out)["witness"][0]
    for modulus in ("3", "15", "75"):
        code, lhs_out, _ = run_cli(
            ["oracle", "eval", "--pi", "3^1,5^inf;default=0", "--modulus", modulus,
             "--expr", f"2*({witness})" if "(" not in witness else "2*" + witness],
            capsys=capsys,
        )
        assert code == 0
        code, rhs_out, _ = run_cli(
            ["oracle", "eval", "--pi", "3^1,5^inf;default=0", "--modulus", modulus,
             "--expr", "[3^(w-1)]"],
            capsys=capsys,
        )
        assert lhs_out == rhs_out
