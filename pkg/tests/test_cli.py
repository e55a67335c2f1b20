import json
import os

import pytest

from ordersize.cli import main
from ordersize.core import load_hypergraph


def run(argv, capsys=None):
    code = main(argv)
    return code


def test_gr_table_and_exit_codes(capsys):
    assert run(["values", "gr-table", "--r", "3..6"]) == 0
    out = capsys.readouterr().out
    assert "g_r(12) = 64" in out


def test_gen_and_spectrum(tmp_path, capsys):
    path = str(tmp_path / "g.hg")
    assert run(["--seed", "7", "gen", "cyclic", "--n", "10", "--to", path]) == 0
    h = load_hypergraph(path)
    assert h.r == 3 and h.n == 10
    assert run(["spectrum", "--in", path, "--m", "6"]) == 0
    out = capsys.readouterr().out
    assert "s(G;6)" in out


def test_gen_json_format(tmp_path, capsys):
    path = str(tmp_path / "g.hg")
    assert run(["--seed", "1", "--format", "json", "gen", "random",
                "--n", "8", "--r", "3", "--to", path]) == 0


def test_homog_and_stepdown(tmp_path, capsys):
    path = str(tmp_path / "g.hg")
    run(["--seed", "3", "gen", "random", "--n", "8", "--r", "3", "--to", path])
    assert run(["homog", "--in", path]) == 0
    assert run(["stepdown", "--in", path, "--ell", "4"]) == 0
    out = capsys.readouterr().out
    assert "X = " in out


def test_buildh_check(capsys):
    assert run(["buildh", "--r", "4", "--m", "80", "--f", "12345", "--check"]) == 0
    assert run(["--seed", "2", "buildh", "--r", "4", "--m", "80", "--sweep", "5", "--check"]) == 0


def test_verify_suites(capsys):
    assert run(["--seed", "7", "verify", "lift", "--trials", "40"]) == 0
    assert run(["verify", "weights", "--max-r", "4", "--max-m", "8"]) == 0
    assert run(["--seed", "5", "verify", "blowup", "--trials", "10"]) == 0
    assert run(["--seed", "2", "verify", "appendix", "--r", "5", "--n", "30",
                "--samples", "500", "--seeds", "1"]) == 0


def test_verify_all_report(tmp_path, capsys):
    out = str(tmp_path / "all")
    assert run(["--seed", "3", "--out", out, "verify", "all", "--trials", "20",
                "--max-r", "4", "--max-m", "8", "--n", "25", "--samples", "200",
                "--seeds", "1"]) == 0
    report = json.load(open(os.path.join(out, "report.json")))
    assert report["ok"]
    assert set(report["suites"]) == {"lift", "weights", "blowup", "appendix"}


def test_values_identity(capsys):
    assert run(["values", "identity", "--max-m", "4"]) == 0


def test_values_cubic_csv(capsys):
    assert run(["--format", "csv", "values", "cubic", "--params", "1,0,0,0,0", "--m", "6..8"]) == 0
    out = capsys.readouterr().out
    rows = [ln for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert len(rows) == 3


def test_structure_cli(tmp_path, capsys):
    from ordersize.blowups import build_type_family
    from ordersize.core import save_hypergraph

    h, _ = build_type_family([3, 3, 3, 3], 1, 0, 1, 0)
    path = str(tmp_path / "plant.hg")
    save_hypergraph(h, path)
    assert run(["structure", "--in", path, "--m", "3"]) == 0
    out = capsys.readouterr().out
    assert "variant (a)" in out


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["values", "gr-table", "--bogus"])
    assert err.value.code == 2


def test_invalid_input_exits_2(tmp_path):
    missing = str(tmp_path / "nope.hg")
    assert run(["homog", "--in", missing]) == 2


def test_manifest_and_determinism(tmp_path, capsys):
    out1, out2 = str(tmp_path / "a"), str(tmp_path / "b")
    for out in (out1, out2):
        assert run(["--seed", "11", "--out", out, "verify", "blowup", "--trials", "5"]) == 0
    r1 = open(os.path.join(out1, "report.json")).read()
    r2 = open(os.path.join(out2, "report.json")).read()
    assert r1 == r2
    man = json.load(open(os.path.join(out1, "manifest.json")))
    assert man["seed"] == 11 and "report.json" in man["outputs"]
    man2 = json.load(open(os.path.join(out2, "manifest.json")))
    assert man["outputs"] == man2["outputs"]


def test_config_file_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 23, "format": "text"}))
    assert run(["--config", str(cfg), "values", "gr-table", "--r", "3..3"]) == 0
    out = capsys.readouterr().out
    assert "seed 23" in out
    assert run(["--config", str(cfg), "--seed", "4", "values", "gr-table", "--r", "3..3"]) == 0
    out = capsys.readouterr().out
    assert "seed 4" in out


def test_threads_match_sequential(tmp_path):
    from ordersize.constructions import cyclic_triangle_3graph
    from ordersize.core import save_hypergraph
    from ordersize.spectrum import size_spectrum

    h = cyclic_triangle_3graph(11, 4)
    seq = size_spectrum(h, 6, threads=1)
    par = size_spectrum(h, 6, threads=3)
    assert seq.achieved == par.achieved
    assert seq.witnesses == par.witnesses
