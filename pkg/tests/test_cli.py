import json
import os

from qcell.cli import main
import pytest


def run(args, tmp_path, name):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    return code, out


def test_ic_table_json_roundtrip(tmp_path):
    code, out = run(["ic-table", "--n", "2", "--beta", "4", "2",
                     "--format", "json", "--no-figure"], tmp_path, "t.json")
    assert code == 0
    data = json.loads(out.read_text())
    assert data["weight"] == [4, 2]
    assert len(data["rows"]) == 2
    assert data["version"]
    assert "braid_convention" in data
    assert all("minor_hypothesis_used" in r for r in data["rows"])


def test_ic_table_repeated_runs_byte_identical(tmp_path):
    _, o1 = run(["ic-table", "--n", "2", "--beta", "4", "2", "--no-figure"],
                tmp_path, "a.json")
    _, o2 = run(["ic-table", "--n", "2", "--beta", "4", "2", "--no-figure"],
                tmp_path, "b.json")
    assert o1.read_bytes() == o2.read_bytes()


def test_ic_table_jobs_invariant(tmp_path):
    _, o1 = run(["ic-table", "--n", "2", "--beta", "6", "4", "--jobs", "1",
                 "--no-figure"], tmp_path, "j1.json")
    _, o2 = run(["ic-table", "--n", "2", "--beta", "6", "4", "--jobs", "3",
                 "--no-figure"], tmp_path, "j3.json")
    assert o1.read_bytes() == o2.read_bytes()


def test_ic_table_writes_figure_alongside(tmp_path):
    code, out = run(["ic-table", "--n", "2", "--beta", "4", "2"],
                    tmp_path, "fig.json")
    assert code == 0
    assert (tmp_path / "fig.png").exists()


def test_no_figure_suppresses(tmp_path):
    run(["ic-table", "--n", "2", "--beta", "4", "2", "--no-figure"],
        tmp_path, "nofig.json")
    assert not (tmp_path / "nofig.png").exists()


def test_gram_csv_output(tmp_path):
    code, out = run(["gram", "--n", "2", "--beta", "4", "2",
                     "--format", "csv", "--no-figure"], tmp_path, "g.csv")
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# qcell ")
    assert "convention=" in lines[0]
    lines = lines[1:]
    assert lines[0] == "a,b,value"
    # off-diagonal entries are 0, diagonal entries are the closed forms
    rows = [line.split(",") for line in lines[1:]]
    for a, b, v in rows:
        if a != b:
            assert v == "0"
        else:
            assert v != "0"


def test_canonical_and_dual_canonical_commands(tmp_path):
    code, out = run(["canonical", "--n", "2", "--beta", "4", "2"],
                    tmp_path, "c.json")
    assert code == 0
    data = json.loads(out.read_text())
    assert data["solver_order"]
    code, out = run(["dual-canonical", "--n", "2", "--beta", "4", "2"],
                    tmp_path, "d.json")
    assert code == 0
    data = json.loads(out.read_text())
    assert len(data["basis"]) == 2


def test_seed_and_mutate_commands(tmp_path):
    code, out = run(["seed", "--n", "2"], tmp_path, "s.json")
    assert code == 0
    data = json.loads(out.read_text())
    assert data["minor_hypothesis_used"] is False
    assert len(data["cluster_variables"]) == 4
    code, out = run(["mutate", "--n", "2", "--seq", "1", "2", "1"],
                    tmp_path, "m.json")
    assert code == 0
    data = json.loads(out.read_text())
    assert data["history"] == [1, 2, 1]
    assert data["laurent_report"]["violations"] == 0


def test_invalid_input_exit_code(tmp_path):
    assert main(["ic-table", "--n", "0", "--beta", "4", "2"]) == 2
    assert main(["mutate", "--n", "2", "--seq", "9"]) == 2


def test_resource_bound_exit_code(tmp_path):
    code = main(["ic-table", "--n", "2", "--beta", "40", "20",
                 "--max-degree", "12", "--no-figure",
                 "--out", str(tmp_path / "x.json")])
    assert code == 4


def test_verify_command(tmp_path):
    code, out = run(["verify", "--n", "1", "--degree", "5",
                     "--format", "text", "--no-figure"], tmp_path, "v.txt")
    assert code == 0
    text = out.read_text()
    assert "all checks passed" in text
    assert "PASS" in text and "FAIL" not in text
