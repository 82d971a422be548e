import json

from nkoszul.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eq1_holds(capsys):
    code, out, _ = run(capsys, "eq1", "--n", "5", "--max-degree", "10")
    assert code == 0
    assert "all zero" in out


def test_dvp_antisym(capsys):
    code, out, _ = run(
        capsys, "dvp-check", "--algebra", "antisym", "--n", "4", "--N", "3",
        "--max-degree", "8",
    )
    assert code == 0
    assert "holds" in out


def test_koszul_check_wording(capsys):
    code, out, _ = run(
        capsys, "koszul-check", "--algebra", "poly", "--n", "2", "--max-degree", "4"
    )
    assert code == 0
    assert "up to degree 4" in out


def test_negative_verdict_exit_code(capsys, tmp_path):
    # the empirically non-Koszul cubic monomial algebra: exit code 1, not 2
    obj = {
        "label": "mono_xyx",
        "n": 2,
        "N": 3,
        "relations": [{"grade": 3, "terms": [{"coeff": "1", "word": [0, 1, 0]}]}],
    }
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(
        capsys, "koszul-check", "--algebra", f"file:{path}", "--max-degree", "6"
    )
    assert code == 1
    assert "FAILS" in out and "5" in out


def test_mmt_seeded(capsys):
    code, out, _ = run(
        capsys, "mmt", "--n", "3", "--random-seed", "7", "--max-degree", "4"
    )
    assert code == 0


def test_json_reports_byte_identical(capsys):
    args = (
        "nmt", "--n", "3", "--N", "3", "--random-seed", "5",
        "--max-degree", "4", "--format", "json",
    )
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["verdict"] == "holds"
    assert doc["config"]["random-seed"] == 5
    assert doc["version"]
    assert doc["max_degree"] == 4


def test_kmt_json_records_convention(capsys):
    code, out, _ = run(
        capsys, "kmt-check", "--algebra", "poly", "--n", "2", "--max-degree", "3",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["determinant_convention"] == "row-permuted"


def test_version_flag(capsys):
    assert main(["--version"]) == 0


def test_kmt_guardrail(capsys):
    code, _, err = run(
        capsys, "kmt-check", "--algebra", "poly", "--n", "9", "--max-degree", "8"
    )
    assert code == 2
    assert "guardrail" in err


def test_kmt_guardrail_override(capsys, monkeypatch):
    # raising the bound through the environment lets the check proceed
    monkeypatch.setenv("KOSZUL_MAX_AMBIENT", "100000000000000000")
    code, out, _ = run(
        capsys, "kmt-check", "--algebra", "poly", "--n", "2", "--max-degree", "2"
    )
    assert code == 0


def test_unknown_algebra_exit_2(capsys):
    code, _, err = run(capsys, "info", "--algebra", "nonesuch", "--n", "2")
    assert code == 2
    assert "unknown algebra" in err


def test_malformed_matrix_json(capsys):
    code, _, err = run(
        capsys, "mmt", "--n", "2", "--matrix", "{not json", "--max-degree", "2"
    )
    assert code == 2
    assert "malformed" in err


def test_usage_error_from_argparse(capsys):
    assert main(["no-such-command"]) == 2


def test_admissible_command(capsys):
    code, out, _ = run(
        capsys, "admissible", "--n", "3", "--N", "3", "--max-degree", "6"
    )
    assert code == 0
    assert "identity holds" in out


def test_dual_dims_closed_form_comparison(capsys):
    code, out, _ = run(
        capsys, "dual-dims", "--algebra", "antisym", "--n", "4", "--N", "3",
        "--max-degree", "6", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["dual_dims"] == [1, 4, 16, 4, 1, 0, 0]
    assert doc["report"]["matches_closed_form"] is True


def test_info_and_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "qspace", "--n", "2",
                       "--max-degree", "5")
    assert code == 0
    assert "[1, 2, 3, 4, 5, 6]" in out
    code, out, _ = run(capsys, "info", "--algebra", "free", "--n", "2",
                       "--max-degree", "3")
    assert code == 0
    assert "free(2)" in out


def test_qspace_numeric_parameter(capsys):
    code, _, _ = run(
        capsys, "hilbert", "--algebra", "qspace", "--n", "2", "--q", "2",
        "--max-degree", "4",
    )
    assert code == 0
    code, _, err = run(
        capsys, "hilbert", "--algebra", "qspace", "--n", "2", "--q", "0",
        "--max-degree", "4",
    )
    assert code == 2
