"""End-to-end tests for the command-line interface (run in-process)."""

import json

import pytest

from qcproduct import (
    OneLevelCode,
    Poly,
    basis_to_doc,
    canonical_json,
    cyclic_code_new,
    cyclic_to_doc,
    field_new,
    generating_matrix_to_doc,
    minimal_polynomial,
    poly_from_text,
    rgb_pot_reduce,
)
from qcproduct.cli import main
from qcproduct.qcmodule import GeneratingMatrix

F2 = field_new(2)


def write_json(path, doc):
    path.write_text(canonical_json(doc), encoding="utf-8")
    return str(path)


def row_code_doc():
    m0 = minimal_polynomial(2, 17, 0)
    m1 = minimal_polynomial(2, 17, 1)
    f1 = m0 ** 3 * Poly(F2, (1, 0, 1, 1))
    return basis_to_doc(OneLevelCode(m1, [f1], 2, 17).basis())


def column_code_doc():
    return cyclic_to_doc(cyclic_code_new(3, poly_from_text(F2, "X+1")))


def small_matrix_doc():
    gen = GeneratingMatrix(F2, 2, 3, [[Poly(F2, (1, 0, 1)), Poly(F2, (1, 1))]])
    return generating_matrix_to_doc(gen)


# ---------------------------------------------------------------------------
# table commands
# ---------------------------------------------------------------------------

def test_cosets_pretty(capsys):
    assert main(["cosets", "2", "7"]) == 0
    out = capsys.readouterr().out
    assert "C_0 = {0}" in out
    assert "C_1 = {1, 2, 4}" in out
    assert "C_3 = {3, 5, 6}" in out


def test_cosets_json(capsys):
    assert main(["--format", "json", "cosets", "2", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["cosets"] == [[0], [1, 2, 4], [3, 5, 6]]


def test_factor_json(capsys):
    assert main(["--format", "json", "factor", "2", "17"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [f["rep"] for f in doc["factors"]] == [0, 1, 3]
    assert doc["factors"][0]["poly"] == "X+1"
    assert doc["factors"][1]["poly"] == "X^8+X^7+X^6+X^4+X^2+X+1"


def test_minpoly_pretty(capsys):
    assert main(["minpoly", "2", "17", "3"]) == 0
    out = capsys.readouterr().out
    assert "m_3 = X^8+X^5+X^4+X^3+1" in out


def test_maps_csv_golden(capsys):
    assert main(["--format", "csv", "maps", "2", "17", "3"]) == 0
    rows = capsys.readouterr().out.strip().split("\n")
    assert len(rows) == 3
    assert all(len(r.split(",")) == 34 for r in rows)
    assert rows[0].startswith("0,69,36,3,72,39")
    assert rows[1].split(",")[0] == "68"
    # all 102 serialized positions appear exactly once
    seen = {int(v) for r in rows for v in r.split(",")}
    assert seen == set(range(102))


def test_maps_json_includes_both_tables(capsys):
    assert main(["--format", "json", "maps", "2", "3", "5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"]["a"] == 1 and doc["params"]["b"] == -1
    assert len(doc["f"]) == 5 and len(doc["f"][0]) == 6
    assert len(doc["g"]) == 5 and len(doc["g"][0]) == 3


# ---------------------------------------------------------------------------
# file-driven commands
# ---------------------------------------------------------------------------

def test_reduce_roundtrip(tmp_path, capsys):
    path = write_json(tmp_path / "gen.json", small_matrix_doc())
    assert main(["--format", "json", "reduce", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["canonical"] is True
    assert doc["dimension"] == 2
    assert doc["level"] == 1
    assert doc["basis"]["rows"] == [["X+1", "X^2+X"], ["0", "X^3+1"]]


def test_reduce_pretty_lists_rows(tmp_path, capsys):
    path = write_json(tmp_path / "gen.json", small_matrix_doc())
    assert main(["reduce", path]) == 0
    out = capsys.readouterr().out
    assert "k=2" in out and "[X+1 | X^2+X]" in out


def test_product_command(tmp_path, capsys):
    a = write_json(tmp_path / "A.json", row_code_doc())
    b = write_json(tmp_path / "B.json", column_code_doc())
    assert main(["--format", "json", "product", a, b]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"] == {"ell_a": 2, "m_a": 17, "m_b": 3, "a": 1, "b": -11}
    assert doc["one_level_row"] is not None
    g00 = poly_from_text(F2, doc["one_level_row"][0])
    assert tuple(k for k, c in enumerate(g00.coeffs) if c) == (
        0, 1, 3, 6, 8, 10, 13, 15, 16, 17, 18, 20, 23, 25, 27, 30, 32, 33)
    # the reduced basis agrees with the closed-form row
    assert doc["reduced"]["rows"][0] == doc["one_level_row"]


def test_mindist_command(tmp_path, capsys):
    path = write_json(tmp_path / "A.json", row_code_doc())
    assert main(["--format", "json", "mindist", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["n"], doc["k"], doc["d"]) == (34, 9, 11)
    assert doc["enumerated"] == 511
    assert doc["elapsed_ms"] is None      # timing is scrubbed from json output


def test_mindist_pretty_has_timing(tmp_path, capsys):
    path = write_json(tmp_path / "A.json", row_code_doc())
    assert main(["mindist", path]) == 0
    out = capsys.readouterr().out
    assert "d=11" in out and " ms" in out


def test_verify_command(tmp_path, capsys):
    path = write_json(tmp_path / "A.json", row_code_doc())
    assert main(["--format", "json", "verify", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["canonical"] is True
    assert doc["quasi_cyclic"] is True
    assert doc["violations"] == []
    assert (doc["n"], doc["k"], doc["level"]) == (34, 9, 1)


def test_verify_reports_violations_without_failing(tmp_path, capsys):
    # a non-canonical but parseable basis: entry above the diagonal too big
    doc = {
        "ell": 2, "m": 3,
        "field": {"p": 2, "m": 1, "modulus": "X"},
        "rows": [["X+1", "X^2+X+1"], ["0", "X^2+X+1"]],
    }
    path = write_json(tmp_path / "bad.json", doc)
    assert main(["--format", "json", "verify", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["canonical"] is False
    assert any("condition 2" in v for v in out["violations"])


def test_output_file_option(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["--format", "json", "-o", str(target),
                 "cosets", "2", "7"]) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["m"] == 7


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------

def test_json_output_is_byte_identical_across_runs(tmp_path, capsys):
    path = write_json(tmp_path / "A.json", row_code_doc())
    for argv in (
        ["--format", "json", "factor", "2", "51"],
        ["--format", "json", "mindist", path],
        ["--format", "json", "example-sec4"],
    ):
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second


# ---------------------------------------------------------------------------
# the built-in worked example
# ---------------------------------------------------------------------------

def test_example_passes_all_golden_checks(capsys):
    assert main(["--format", "json", "example-sec4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["match"] is True
    assert all(doc["checks"].values())
    assert (doc["a"], doc["b"]) == (1, -11)
    assert (doc["dimension"], doc["d_a"], doc["d_b"]) == (18, 11, 2)
    assert doc["g00"].startswith("X^33+X^32+X^30+")


def test_example_pretty_prints_pass_lines(capsys):
    assert main(["example-sec4"]) == 0
    out = capsys.readouterr().out
    assert "check g00: pass" in out
    assert "check paths_agree: pass" in out
    assert "FAIL" not in out


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------

def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["maps", "two", "17", "3"])
    assert exc.value.code == 1


def test_csv_unsupported_for_other_commands_exits_1(capsys):
    assert main(["--format", "csv", "cosets", "2", "7"]) == 1
    err = capsys.readouterr().err
    assert "no CSV representation" in err


def test_missing_file_exits_2(tmp_path, capsys):
    assert main(["reduce", str(tmp_path / "absent.json")]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "FileNotFoundError"


def test_invalid_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["reduce", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "JSONDecodeError"


def test_unparsable_polynomial_exits_2(tmp_path, capsys):
    doc = small_matrix_doc()
    doc["rows"][0][0] = "Y+1"
    path = write_json(tmp_path / "bad.json", doc)
    assert main(["reduce", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "PolyParseError"


def test_precondition_violation_exits_3(capsys):
    assert main(["cosets", "2", "4"]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "NotCoprime"


def test_mindist_limit_exits_3(tmp_path, capsys):
    path = write_json(tmp_path / "A.json", row_code_doc())
    assert main(["mindist", path, "--limit", "8"]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "TooLarge"
