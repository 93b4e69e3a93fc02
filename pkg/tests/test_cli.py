import json

import pytest

from idemring.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_idempotents_105(capsys):
    rc, out, err = run(capsys, "idempotents", "105")
    assert rc == 0 and err == ""
    assert out.startswith("n = 105 = 3 * 5 * 7\n")
    assert "idempotents (8): 0 1 15 21 36 70 85 91" in out
    assert "closed-form cross-check:" in out


def test_idempotents_prime(capsys):
    rc, out, _ = run(capsys, "idempotents", "7")
    assert rc == 0
    assert "idempotents (2): 0 1" in out
    assert "cross-check" not in out


def test_idempotents_json(capsys):
    rc, out, _ = run(capsys, "idempotents", "105", "--json")
    doc = json.loads(out)
    assert doc["idempotents"] == [0, 1, 15, 21, 36, 70, 85, 91]
    assert all(row["match"] for row in doc["cross_check"])


def test_domain_error_exit_code(capsys):
    rc, out, err = run(capsys, "idempotents", "4")
    assert rc == 1
    assert err.startswith("error: NotSquarefree:")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-verb"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_solve_trace(capsys):
    rc, out, _ = run(capsys, "solve-trace", "105", "36")
    assert rc == 0
    assert "solutions (8): 9 27 34 37 69 72 79 97" in out
    assert "discrepancies: 0" in out


def test_solve_trace_trivial_det(capsys):
    rc, out, _ = run(capsys, "solve-trace", "105", "0")
    assert rc == 0
    assert "0 1 15 21 36 70 85 91" in out
    assert "catalogue applies only" in out


def test_solve_trace_rejects_non_idempotent(capsys):
    rc, _, err = run(capsys, "solve-trace", "105", "37")
    assert rc == 1
    assert err.startswith("error: NotIdempotentDet:")


def test_oracle_counts(capsys):
    rc, out, _ = run(capsys, "oracle", "5")
    assert rc == 0
    assert "constant idempotent matrices: 32" in out
    rc, out, _ = run(capsys, "oracle", "2")
    assert "constant idempotent matrices: 8" in out


def test_oracle_budget(capsys):
    rc, _, err = run(capsys, "oracle", "1001", "--budget", "1000")
    assert rc == 1
    assert err.startswith("error: BudgetExceeded:")


def test_generate_writes_document(capsys, tmp_path):
    out_path = tmp_path / "mat.json"
    rc, out, _ = run(
        capsys, "generate", "det0-general", "--n", "385", "--e", "x", "--out", str(out_path)
    )
    assert rc == 0
    assert f"wrote {out_path}" in out
    doc = json.loads(out_path.read_text())
    assert doc == {"n": 385, "entries": [[[0, 1], [0, 1, 384]], [[1], [1, 384]]]}


def test_generate_stdout_and_classify_round_trip(capsys, tmp_path):
    rc, out, _ = run(capsys, "generate", "detpair-mixed", "--n", "385", "--seed", "5")
    assert rc == 0
    doc = json.loads(out)
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, "classify", str(path))
    assert rc == 0
    assert "idempotent: yes" in out
    assert "detpair-mixed" in out


def test_generate_deterministic_for_seed(capsys):
    rc1, out1, _ = run(capsys, "generate", "detpair-shift", "--n", "455", "--seed", "9")
    rc2, out2, _ = run(capsys, "generate", "detpair-shift", "--n", "455", "--seed", "9")
    assert rc1 == rc2 == 0
    assert out1 == out2
    rc3, out3, _ = run(capsys, "generate", "detpair-shift", "--n", "455", "--seed", "10")
    assert out3 != out1


def test_generate_bad_poly_is_usage_error(capsys):
    rc, _, err = run(capsys, "generate", "det0-general", "--n", "385", "--e", "x^")
    assert rc == 2
    assert err.startswith("error: PolyParseError:")


def test_classify_out_of_scope(capsys, tmp_path):
    path = tmp_path / "m105.json"
    path.write_text(json.dumps({"n": 105, "entries": [[[1], []], [[], [1]]]}))
    rc, _, err = run(capsys, "classify", str(path))
    assert rc == 1
    assert err.startswith("error: PrimesOutOfScope:")


def test_classify_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    rc, _, err = run(capsys, "classify", str(path))
    assert rc == 1
    assert err.startswith("error: MatrixFormatError:")
    rc, _, err = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert rc == 1
    assert err.startswith("error: MatrixFormatError:")


def test_classify_json_output(capsys, tmp_path):
    path = tmp_path / "scalar.json"
    path.write_text(json.dumps({"n": 385, "entries": [[[155], []], [[], [155]]]}))
    rc, out, _ = run(capsys, "classify", str(path), "--json")
    doc = json.loads(out)
    assert doc["det"] == 155
    assert doc["matches"][0]["family"] == "detsingle-scalar"


def test_verify_small_budget(capsys):
    # a small budget skips the heavy matrix scan but all light checks pass
    rc, out, _ = run(capsys, "verify", "385", "--budget", "200000")
    assert rc == 0
    assert "verify:" in out
    assert "FAIL" not in out
    assert "skipped" in out


def test_verify_non_matrix_modulus(capsys):
    rc, out, _ = run(capsys, "verify", "15")
    assert rc == 0
    assert "FAIL" not in out


def test_verify_json(capsys):
    rc, out, _ = run(capsys, "verify", "105", "--budget", "2000000")
    assert rc == 0
    rc, out, _ = run(capsys, "verify", "105", "--budget", "2000000", "--json")
    doc = json.loads(out)
    assert doc["passed"] == doc["total"]
