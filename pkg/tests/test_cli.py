import json

import pytest

from zdgspec.cli import main

EXPECTED_15 = (
    '{"n":15,"vertex_count":6,'
    '"spectrum":[{"value":0,"multiplicity":1,"exact":true},'
    '{"value":2,"multiplicity":3,"exact":true},'
    '{"value":4,"multiplicity":1,"exact":true},'
    '{"value":6,"multiplicity":1,"exact":true}],'
    '"mu":2,"lambda":6,"kappa":2,"delta":2,"Delta":4,'
    '"laplacian_integral":true,"complement_disconnected":true,'
    '"lambda_equals_order":true,"mu_equals_kappa":true,"method":"reduced"}'
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def reemit(obj) -> str:
    """Canonical serialization rules as documented: fixed order (as parsed),
    12 significant digits, integral values without a decimal point."""
    if isinstance(obj, dict):
        return "{" + ",".join(f'"{k}":{reemit(v)}' for k, v in obj.items()) + "}"
    if isinstance(obj, list):
        return "[" + ",".join(reemit(v) for v in obj) + "]"
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return str(int(obj)) if obj == int(obj) else format(obj, ".12g")
    return '"' + obj + '"'


# ---------------------------------------------------------------------------
# spectrum


def test_spectrum_15_json(capsys):
    code, out, _ = run(capsys, "spectrum", "15", "--format", "json", "--method", "reduced")
    assert code == 0
    assert out.strip() == EXPECTED_15


def test_spectrum_9_auto_uses_closed_form(capsys):
    code, out, _ = run(capsys, "spectrum", "9")
    assert code == 0
    record = json.loads(out)
    assert record["method"] == "closed_form"
    assert record["spectrum"] == [
        {"value": 0, "multiplicity": 1, "exact": True},
        {"value": 2, "multiplicity": 1, "exact": True},
    ]


def test_spectrum_prime_rejected(capsys):
    code, out, err = run(capsys, "spectrum", "7")
    assert code == 2
    assert out == ""
    assert "Z_7 has no zero divisors" in err


def test_spectrum_closed_form_requires_prime_power(capsys):
    code, _, err = run(capsys, "spectrum", "12", "--method", "closed-form")
    assert code == 2
    assert "prime power" in err


def test_spectrum_brute_method_and_cap(capsys):
    code, out, _ = run(capsys, "spectrum", "12", "--method", "brute")
    assert code == 0
    assert json.loads(out)["method"] == "brute"

    code, _, err = run(capsys, "spectrum", "12", "--method", "brute", "--cap", "3")
    assert code == 3
    assert "cap" in err


def test_json_round_trip_byte_identical(capsys):
    for n in ("12", "15", "16", "360"):
        _, out, _ = run(capsys, "spectrum", n, "--format", "json", "--method", "reduced")
        line = out.strip()
        assert reemit(json.loads(line)) == line


def test_spectrum_csv_and_text(capsys):
    code, out, _ = run(capsys, "spectrum", "15", "--format", "csv")
    header, row = out.strip().split("\n")
    assert header.startswith("n,vertex_count,mu,lambda,kappa,delta,Delta,")
    assert row.startswith("15,6,2,6,2,2,4,true,true,true,true,")
    assert row.endswith("0:1;2:3;4:1;6:1")

    code, out, _ = run(capsys, "spectrum", "15", "--format", "text")
    assert "spectrum = 0:1 2:3 4:1 6:1" in out
    assert "mu = 2" in out


def test_analyze_text_undefined_mu(capsys):
    code, out, _ = run(capsys, "analyze", "4")
    assert code == 0
    assert "mu = undefined" in out
    assert "vertex_count = 1" in out


# ---------------------------------------------------------------------------
# graph dumps


def test_divisor_graph_18(capsys):
    code, out, _ = run(capsys, "divisor-graph", "18")
    assert code == 0
    assert out == (
        "n = 18\n"
        "vertices = 2 3 6 9\n"
        "weights = 6 2 2 1\n"
        "edges:\n"
        "2 9\n"
        "3 6\n"
        "6 9\n"
        "L:\n"
        "1 0 0 -1\n"
        "0 2 -2 0\n"
        "0 -2 3 -1\n"
        "-6 0 -2 8\n"
    )


def test_graph_edges_and_summary(capsys):
    code, out, _ = run(capsys, "graph", "8", "--edges")
    assert code == 0
    assert out == "2 4\n4 6\n"

    code, out, _ = run(capsys, "graph", "9")
    assert "vertices = 2" in out
    assert "edges = 1" in out


def test_graph_respects_cap(capsys, monkeypatch):
    monkeypatch.setenv("ZDG_ORACLE_CAP", "10")
    code, _, err = run(capsys, "graph", "100", "--edges")
    assert code == 3
    assert "cap" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_small_range(capsys):
    code, out, _ = run(capsys, "verify", "4", "30")
    assert code == 0
    assert out.strip().endswith("checked 19, passed 19, failed 0")
    assert out.count("PASS") == 19


def test_verify_empty_range(capsys):
    code, out, _ = run(capsys, "verify", "5", "5")
    assert code == 0
    assert "checked 0, passed 0, failed 0" in out


def test_verify_invalid_range(capsys):
    code, _, err = run(capsys, "verify", "10", "4")
    assert code == 2
    assert "invalid range" in err


def test_verify_cap_skips(capsys):
    code, out, _ = run(capsys, "verify", "4", "40", "--cap", "10")
    assert code == 0
    assert "SKIP" in out
    assert "skipped" in out


def test_verify_jobs_deterministic(capsys):
    _, seq, _ = run(capsys, "verify", "4", "60")
    _, par, _ = run(capsys, "verify", "4", "60", "--jobs", "3")
    assert seq == par


# ---------------------------------------------------------------------------
# survey


def test_survey_csv_rows(capsys):
    code, out, _ = run(capsys, "survey", "4", "30")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 20  # header + 19 composites
    by_n = {row.split(",")[0]: row for row in lines[1:]}
    cells16 = by_n["16"].split(",")
    assert cells16[3] == "7"  # lambda
    assert cells16[7] == "true"  # integral
    cells12 = by_n["12"].split(",")
    assert cells12[10] == "false"  # mu_eq_kappa
    cells4 = by_n["4"].split(",")
    assert cells4[2] == ""  # undefined mu stays empty


def test_survey_json_rows_carry_quotient_flags(capsys):
    code, out, _ = run(capsys, "survey", "4", "20", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().split("\n")]
    assert [r["n"] for r in rows] == [4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20]
    assert all("mu_from_quotient" in r and "lambda_from_quotient" in r for r in rows)
    for line in out.strip().split("\n"):
        assert reemit(json.loads(line)) == line


def test_survey_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "survey", "4", "12", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().count("\n") == 7  # header + 6 composites


def test_survey_unwritable_path(capsys):
    code, _, err = run(capsys, "survey", "4", "12", "--out", "/no-such-dir/rows.csv")
    assert code == 4
    assert err


def test_survey_jobs_deterministic(capsys):
    _, seq, _ = run(capsys, "survey", "4", "80")
    _, par, _ = run(capsys, "survey", "4", "80", "--jobs", "4")
    assert seq == par
