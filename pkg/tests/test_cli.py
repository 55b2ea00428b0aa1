"""Command-line contract: documents, subcommands, exit codes, determinism."""

import json
from fractions import Fraction

import pytest

from rimealg.cli import MatrixDocument, _n_cap, format_report, main
from rimealg.core import permutation
from rimealg.families import FamilySpec, build
from rimealg.verify import VerificationReport

RIME_ENTRIES = [
    ["1", "0", "0", "0"],
    ["-6", "6", "4", "-3"],
    ["6", "-5", "-3", "3"],
    ["0", "0", "0", "1"],
]


# -- dimension cap -------------------------------------------------------------


def test_n_cap_default_and_override(monkeypatch):
    monkeypatch.delenv("RIME_MAX_N", raising=False)
    assert _n_cap() == 6
    monkeypatch.setenv("RIME_MAX_N", "8")
    assert _n_cap() == 8
    monkeypatch.setenv("RIME_MAX_N", "3")
    assert _n_cap() == 3


def test_n_cap_rejects_bad_values(monkeypatch):
    monkeypatch.setenv("RIME_MAX_N", "abc")
    with pytest.raises(ValueError):
        _n_cap()
    monkeypatch.setenv("RIME_MAX_N", "9")
    with pytest.raises(ValueError):
        _n_cap()
    monkeypatch.setenv("RIME_MAX_N", "0")
    with pytest.raises(ValueError):
        _n_cap()


# -- document format -------------------------------------------------------------


def test_document_round_trip_over_families():
    specs = [
        FamilySpec("rime-quantum", 3, beta="1/2", phi=(3, 2, 1)),
        FamilySpec("rime-unitary", 2, mu=(0, 1)),
        FamilySpec("cg", 3, q2inv="-1/2", p=2),
        FamilySpec("classical-rime", 2, phi=(2, 1)),
        FamilySpec("boundary", 3),
    ]
    for spec in specs:
        op = build(spec)
        doc = MatrixDocument.from_operator(op)
        again = MatrixDocument.from_json(doc.to_json())
        assert again == doc
        assert again.to_operator() == op


def test_document_of_untagged_operator():
    doc = MatrixDocument.from_operator(permutation(2))
    assert doc.family is None
    assert doc.params == {}
    assert MatrixDocument.from_json(doc.to_json()) == doc


def test_document_json_field_layout():
    doc = MatrixDocument.from_operator(build(FamilySpec("rime-quantum", 2, beta=3, phi=(2, 1))))
    payload = json.loads(doc.to_json())
    assert list(payload) == ["n", "arity", "order", "family", "params", "entries"]
    assert payload["order"] == "lexicographic (i,j) rows/cols"
    assert payload["params"] == {"beta": "3", "phi": "2,1"}
    assert payload["entries"] == RIME_ENTRIES


def test_document_parse_rejections():
    with pytest.raises(ValueError):
        MatrixDocument.from_json("[1, 2]")
    with pytest.raises(ValueError):
        MatrixDocument.from_json('{"n": 2, "arity": 2}')
    with pytest.raises(ValueError):
        MatrixDocument.from_json(
            '{"n": 1, "arity": 1, "order": "column-major", "entries": [["1"]]}'
        )


def test_document_tsv():
    doc = MatrixDocument.from_operator(permutation(2))
    assert doc.to_tsv() == "1\t0\t0\t0\n0\t0\t1\t0\n0\t1\t0\t0\n0\t0\t0\t1\n"


def test_format_report_failure_line():
    rep = VerificationReport(
        "ybe",
        False,
        Fraction(5),
        ((1, 1, 2), (1, 1, 1), Fraction(-36)),
        {"failed_part": "ybe", "observed": "rime", "expected": "ice"},
    )
    line = format_report(rep)
    assert line.startswith("ybe FAIL witness=(1,1,2)(1,1,1) value=-36")
    assert "observed=rime" in line and "expected=ice" in line


# -- generate ------------------------------------------------------------------------


def test_generate_rime_document(capsys):
    assert main(["generate", "rime", "--n", "2", "--beta", "3", "--phi", "2,1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["family"] == "rime-quantum"
    assert payload["entries"] == RIME_ENTRIES


def test_generate_degenerate_cg_is_permutation(capsys):
    assert main(["generate", "cg", "--n", "2", "--q2inv", "1", "--p", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["entries"] == [
        ["1", "0", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "0", "1"],
    ]


def test_generate_boundary_document(capsys):
    assert main(["generate", "boundary", "--n", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["entries"] == [
        ["0", "0", "0", "0"],
        ["0", "0", "0", "1"],
        ["0", "0", "0", "-1"],
        ["0", "0", "0", "0"],
    ]


def test_generate_tsv_format(capsys):
    assert main(["generate", "unitary", "--n", "2", "--mu", "0,1", "--format", "tsv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "1\t0\t0\t0"


def test_generate_invalid_parameters_exit_2(capsys):
    assert main(["generate", "rime", "--n", "2", "--beta", "3", "--phi", "1,1"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "distinct" in err


def test_generate_above_cap_exit_2(capsys):
    assert main(["generate", "boundary", "--n", "7"]) == 2
    assert "n above supported cap" in capsys.readouterr().err


def test_generate_respects_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("RIME_MAX_N", "3")
    assert main(["generate", "boundary", "--n", "3"]) == 0
    capsys.readouterr()
    assert main(["generate", "boundary", "--n", "4"]) == 2


# -- verify ---------------------------------------------------------------------------


def test_verify_family_selected_checks(capsys):
    code = main(
        ["verify", "--family", "rime", "--n", "3", "--beta", "1/2",
         "--phi", "3,2,1", "--checks", "ybe,hecke,multiplicities"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["ybe PASS", "hecke PASS", "multiplicities PASS"]


def test_verify_boundary_full_names(capsys):
    assert main(["verify", "--family", "boundary", "--n", "3",
                 "--checks", "acybe,nilpotent,cybe"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["acybe PASS", "nilpotent PASS", "cybe PASS"]


def test_verify_unknown_check_exit_2(capsys):
    assert main(["verify", "--family", "boundary", "--n", "3", "--checks", "ybe"]) == 2
    assert "not applicable" in capsys.readouterr().err


def test_verify_without_inputs_exit_2(capsys):
    assert main(["verify"]) == 2
    assert "needs either" in capsys.readouterr().err


def test_verify_document_default_checks(tmp_path, capsys):
    main(["generate", "rime", "--n", "2", "--beta", "3", "--phi", "2,1"])
    doc_text = capsys.readouterr().out
    path = tmp_path / "rime.json"
    path.write_text(doc_text, encoding="utf-8")
    assert main(["verify", "--input", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "ybe PASS"

    main(["generate", "classical-cg", "--n", "3"])
    cpath = tmp_path / "ccg.json"
    cpath.write_text(capsys.readouterr().out, encoding="utf-8")
    assert main(["verify", "--input", str(cpath)]) == 0
    assert capsys.readouterr().out.strip() == "cybe PASS"


def test_verify_tampered_document_exit_1(tmp_path, capsys):
    main(["generate", "rime", "--n", "2", "--beta", "3", "--phi", "2,1"])
    payload = json.loads(capsys.readouterr().out)
    payload["entries"][1][2] = "5"  # row (1,2), column (2,1): 4 -> 5
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["verify", "--input", str(path), "--checks", "ybe"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("ybe FAIL witness=(")


def test_verify_untagged_document_needs_checks(tmp_path, capsys):
    doc = MatrixDocument.from_operator(permutation(2))
    path = tmp_path / "p.json"
    path.write_text(doc.to_json(), encoding="utf-8")
    assert main(["verify", "--input", str(path)]) == 2
    assert "untagged" in capsys.readouterr().err
    assert main(["verify", "--input", str(path), "--checks", "ybe,braid"]) == 0
    capsys.readouterr()


def test_verify_document_beta_override(tmp_path, capsys):
    doc = MatrixDocument.from_operator(permutation(2))
    path = tmp_path / "p.json"
    path.write_text(doc.to_json(), encoding="utf-8")
    assert main(["verify", "--input", str(path), "--checks", "hecke", "--beta", "0"]) == 0
    capsys.readouterr()
    # no recorded parameters and no flag: beta cannot be inferred
    assert main(["verify", "--input", str(path), "--checks", "hecke"]) == 2
    assert "needs beta" in capsys.readouterr().err


def test_verify_skew_document_routes_to_homogeneous_variant(tmp_path, capsys):
    main(["generate", "unitary", "--n", "2", "--mu", "0,1"])
    capsys.readouterr()
    main(["generate", "classical-unitary", "--n", "2", "--mu", "0,1"])
    path = tmp_path / "r0.json"
    path.write_text(capsys.readouterr().out, encoding="utf-8")
    assert main(["verify", "--input", str(path), "--checks", "acybe,nilpotent"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["acybe PASS", "nilpotent PASS"]


def test_verify_missing_file_exit_2(capsys):
    assert main(["verify", "--input", "/nonexistent/doc.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_malformed_json_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["verify", "--input", str(path), "--checks", "ybe"]) == 2
    capsys.readouterr()


# -- report ------------------------------------------------------------------------------


def test_report_small_sweep_passes(capsys):
    assert main(["report", "--n-max", "2", "--seeds", "1", "--seed-value", "42"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("n=2 seed=0 rime-quantum")
    assert any(line.startswith("limit mu=0,1 ") for line in lines)
    assert lines[-1].startswith("total ")
    assert "FAIL" not in out


def test_report_is_deterministic(capsys):
    main(["report", "--n-max", "2", "--seeds", "2", "--seed-value", "7"])
    first = capsys.readouterr().out
    main(["report", "--n-max", "2", "--seeds", "2", "--seed-value", "7"])
    second = capsys.readouterr().out
    assert first == second
    main(["report", "--n-max", "2", "--seeds", "2", "--seed-value", "8"])
    assert capsys.readouterr().out != first  # the seed actually matters


def test_report_above_cap_exit_2(capsys):
    assert main(["report", "--n-max", "9"]) == 2
    assert "n above supported cap" in capsys.readouterr().err


def test_report_argument_validation(capsys):
    assert main(["report", "--n-max", "1"]) == 2
    capsys.readouterr()
    assert main(["report", "--n-max", "2", "--seeds", "0"]) == 2
    capsys.readouterr()


def test_entrypoint_exits_with_main_code(monkeypatch, capsys):
    import rimealg.cli as cli

    monkeypatch.setattr("sys.argv", ["rimealg", "generate", "boundary", "--n", "2"])
    with pytest.raises(SystemExit) as info:
        cli.entrypoint()
    assert info.value.code == 0
    capsys.readouterr()
