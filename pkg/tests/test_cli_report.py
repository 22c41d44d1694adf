from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from gaussmaps import cli, gaussian, quadrics
from gaussmaps.cli import CurveSpec, main, run_analyze
from gaussmaps.report import RankReport, dumps, load_schema

SAMPLES = Path(__file__).resolve().parents[1] / "samples"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def no_floats(v):
    if isinstance(v, float):
        return False
    if isinstance(v, dict):
        return all(no_floats(x) for x in v.values())
    if isinstance(v, list):
        return all(no_floats(x) for x in v)
    return True


@pytest.mark.parametrize("n,f,genus,dim,rank2,free", [
    (2, "x^8-1", 3, 1, 1, False),
    (3, "x^9-1", 7, 10, 9, False),
    (5, "-x^5-1", 6, 6, 6, True),
])
def test_run_analyze_examples(n, f, genus, dim, rank2, free):
    r = run_analyze(CurveSpec(n, f))
    assert (r.genus, r.dim_i2, r.rank_mu2) == (genus, dim, rank2)
    assert r.base_locus["is_free"] is free
    assert r.lower_bound_g_minus_3
    assert r.factorization_checks_passed == r.factorization_checks_total


def test_report_round_trip_and_schema():
    r = run_analyze(CurveSpec(3, "x^10 - 1", "t9", ("x^5 - 1",)), modular=2)
    text = r.to_json()
    assert RankReport.from_json(text) == r
    assert RankReport.from_json(text).to_json() == text
    d = json.loads(text)
    assert list(d) == sorted(d)
    assert no_floats(d)
    jsonschema.validate(d, load_schema("report"))
    assert [p["modulus"] for p in d["base_locus"]["ram"]] == ["x^5 - 1", "x^5 + 1"]


def test_report_rejects_unknown_keys():
    d = run_analyze(CurveSpec(2, "x^8 - 1")).to_dict()
    d["extra"] = 1
    with pytest.raises(ValueError):
        RankReport.from_dict(d)


def test_timings_only_on_request(capsys):
    _, out, _ = run(capsys, "analyze", "--n", "2", "--f", "x^8-1", "--json")
    assert "timings" not in json.loads(out)
    _, out, _ = run(capsys, "analyze", "--n", "2", "--f", "x^8-1", "--json", "--timings")
    d = json.loads(out)
    assert set(d["timings"]) >= {"i2", "mu1", "mu2"}
    jsonschema.validate(d, load_schema("report"))


def test_config_output_identical_across_runs_and_threads(capsys):
    cfg = str(SAMPLES / "curves.json")
    outs = [run(capsys, "analyze", "--config", cfg, "--json", "--jobs", str(j))[1] for j in (1, 3, 1)]
    assert outs[0] == outs[1] == outs[2]
    d = json.loads(outs[0])
    jsonschema.validate(d, load_schema("report"))
    assert [r["label"] for r in d["reports"]] == ["hyperelliptic g3", "trigonal g7", "Fermat quintic", "trigonal g9"]


def test_text_table(capsys):
    code, out, _ = run(capsys, "analyze", "--n", "3", "--f", "x^9 - 1")
    assert code == 0
    assert out.splitlines()[2].split() == ["3", "x^9", "-", "1", "7", "10", "18", "9", "9", "base", "points"]


def test_shifted_model_reports_its_shift():
    r = run_analyze(CurveSpec(2, "x^7 - x"))
    assert r.unramified_shift == 2
    assert r.rank_mu1L == r.rank_mu2 == 1


@pytest.mark.parametrize("argv,kind,fragment", [
    (["analyze", "--n", "2", "--f", "x^"], "input", "offset 2"),
    (["analyze", "--n", "2", "--f", "x^2-2x+1"], "input", "not squarefree"),
    (["analyze", "--n", "4", "--f", "x^6-1"], "input", "neither 1 nor n"),
    (["analyze", "--n", "2", "--f", "x^8-1", "--ram-moduli", "x-2"], "input", "does not divide"),
    (["analyze", "--n", "2"], "input", "needs --n and --f"),
    (["baselocus", "--n", "2", "--f", "1/0x^3+1"], "input", "zero denominator"),
    (["verify-paper", "--rows", "11"], "input", "no such acceptance rows"),
])
def test_structured_errors(capsys, argv, kind, fragment):
    code, out, err = run(capsys, *argv)
    assert code == cli.EXIT_INPUT
    diag = json.loads(err)["error"]
    assert diag["kind"] == kind
    assert fragment in diag["message"]


def test_syntax_error_reports_offset(capsys):
    _, _, err = run(capsys, "analyze", "--n", "2", "--f", "x^")
    assert json.loads(err)["error"]["offset"] == 2


def test_bad_config(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text('{"curves": [{"n": 2}]}')
    code, _, err = run(capsys, "analyze", "--config", str(p))
    assert code == cli.EXIT_INPUT and "needs 'n' and 'f'" in err
    p.write_text("[")
    assert run(capsys, "analyze", "--config", str(p))[0] == cli.EXIT_INPUT


def test_sweep_csv_and_plot(tmp_path, capsys):
    csv_path, png = tmp_path / "s.csv", tmp_path / "s.png"
    code, out, _ = run(capsys, "sweep", "--g-min", "3", "--g-max", "5", "--csv", str(csv_path),
                       "--plot", str(png))
    assert code == 0
    rows = csv_path.read_text().splitlines()
    assert rows[0].startswith("label,n,f,genus")
    assert [r.split(",")[10] for r in rows[1:]] == ["1", "3", "5"]
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    first = png.read_bytes()
    run(capsys, "sweep", "--g-min", "3", "--g-max", "5", "--plot", str(png))
    assert png.read_bytes() == first


def test_cyclic_sweep_skips_unsupported_degrees(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "cyclic", "--n", "3", "--m-min", "5",
                       "--m-max", "7", "--json")
    d = json.loads(out)
    assert [r["m"] for r in d["reports"]] == [5, 6, 7]
    code, out, _ = run(capsys, "sweep", "--family", "cyclic", "--n", "4", "--m-min", "5",
                       "--m-max", "7", "--json")
    assert [r["m"] for r in json.loads(out)["reports"]] == [5, 7]


def test_numerology_command(capsys):
    code, out, _ = run(capsys, "numerology", "--genus-product", "2", "1", "9", "7", "--threshold",
                       "--surj", "17", "--wahl", "2", "1", "8", "7", "--json")
    assert json.loads(out) == {"genus_product": 71, "surjectivity_threshold": 18,
                               "surj_possible": False, "wahl_product_hypotheses": False}


def test_baselocus_command(capsys):
    code, out, _ = run(capsys, "baselocus", "--n", "5", "--f=-x^5-1", "--json")
    d = json.loads(out)
    assert code == 0 and d["base_locus"]["is_free"]
    code, out, _ = run(capsys, "baselocus", "--n", "2", "--f", "x^8-1", "--system", "canonical")
    assert "base point free" in out
    code, out, _ = run(capsys, "baselocus", "--n", "3", "--f", "x^10-1", "--json")
    bl = json.loads(out)["base_locus"]
    assert bl["infinity_base_points"] == [{"modulus": "single place", "order": 2}]


def test_general_model(capsys):
    code, out, err = run(capsys, "analyze", "--general", str(SAMPLES / "trigonal_genus5.json"), "--json")
    d = json.loads(out)
    assert code == 0
    assert (d["basis_size"], d["dim_i2"], d["rank_mu2"]) == (5, 3, 3)
    assert "NOT checked" in d["caveat"] and "NOT checked" in err


def test_general_model_matches_superelliptic_pipeline(tmp_path, capsys):
    spec = {"equation": {"lower": ["-x^9 + 1", "0", "0"]},
            "basis": [{"num": [s], "den": ["0", "0", "1"]} for s in ["1", "x", "x^2", "x^3", "x^4"]]
            + [{"num": [s], "den": ["0", "1"]} for s in ["1", "x"]]}
    p = tmp_path / "g.json"
    p.write_text(json.dumps(spec))
    _, out, _ = run(capsys, "analyze", "--general", str(p), "--json")
    d = json.loads(out)
    assert (d["dim_i2"], d["rank_mu1K"], d["rank_mu2"]) == (10, 18, 9)


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--rows", "2", "4", "--json")
    d = json.loads(out)
    assert code == 0 and d["all_passed"]
    jsonschema.validate(d, load_schema("verify"))
    assert dumps(d) == out


def test_mutation_wronskian_sign_is_caught(monkeypatch, capsys):
    real = gaussian.wronskian

    def corrupted(s0, s1):
        w = real(s0, s1)
        # g0 g1' + g1 g0' instead of the difference
        return type(w)(s0.elt * s1.elt.derivative() + s1.elt * s0.elt.derivative(), w.weight)

    monkeypatch.setattr(gaussian, "wronskian", corrupted)
    code, out, _ = run(capsys, "verify-paper", "--rows", "2")
    assert code == cli.EXIT_CHECK_FAILED
    assert "[FAIL] row  2" in out


def test_mutation_symmetric_product_is_caught(monkeypatch, capsys):
    monkeypatch.setattr(quadrics, "_sym_outer",
                        lambda v, w: [[v[i] * w[j] for j in range(len(v))] for i in range(len(v))])
    code, out, _ = run(capsys, "verify-paper", "--rows", "2", "4")
    assert code == cli.EXIT_CHECK_FAILED
