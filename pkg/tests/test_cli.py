import subprocess
import sys

import pytest

from indsat_lab.cli import main, read_object
from indsat_lab.constructions import catalogue


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exit_codes(tmp_path, capsys):
    icosa = tmp_path / "icosa_5_2.g6"
    assert run(capsys, "construct", "--name", "icosa", "--j", "5", "--k", "2", "--out", str(icosa))[0] == 0
    code, out, _ = run(capsys, "verify", "--target", "C4", "--graph", str(icosa))
    assert (code, out) == (0, "SATURATED\n")
    c4 = tmp_path / "c4.g6"
    c4.write_text("Cl\n")
    code, out, _ = run(capsys, "verify", "--target", "claw", "--graph", str(c4))
    assert code == 1 and out.startswith("FAIL missing-on-flip")


def test_verify_trigraph_and_family(tmp_path, capsys):
    tg = tmp_path / "t.tg"
    run(capsys, "construct", "--name", "table", "--target", "claw", "--n", "7", "--out", str(tg))
    assert run(capsys, "verify-trigraph", "--target", "claw", "--trigraph", str(tg))[0] == 0
    th = tmp_path / "th.g6"
    run(capsys, "construct", "--name", "threshold", "--signs=-+-+", "--out", str(th))
    code, out, _ = run(capsys, "verify", "--target", "2K2+P4+C4", "--graph", str(th))
    assert code == 1 and out.startswith("FAIL")


def test_small_graph_warning(tmp_path, capsys):
    g = tmp_path / "k2.g6"
    g.write_text("A_\n")
    code, _, err = run(capsys, "verify", "--target", "paw", "--graph", str(g))
    assert code == 1 and "warning" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["construct", "--name", "icosa"],
        ["construct", "--name", "nope"],
        ["verify", "--target", "hexagon", "--graph", "missing.g6"],
        ["tables", "paw", "--n-max", "x"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(capsys, *argv)[0] == 2


def test_malformed_file_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("C\n")
    assert run(capsys, "verify", "--target", "claw", "--graph", str(bad))[0] == 2


def test_search_report_is_reproducible(capsys):
    first = run(capsys, "search", "indsat", "--n", "5", "--target", "paw", "--max-gray", "3")
    second = run(capsys, "search", "indsat", "--n", "5", "--target", "paw", "--max-gray", "3")
    assert first[0] == 0 and first[1] == second[1]
    lines = first[1].splitlines()
    assert lines[0] == "RESULT 1" and lines[2] == "CERT trigraph" and lines[3] == "n 5"
    assert "wall time" in first[2]


def test_search_sis_report(capsys):
    code, out, _ = run(capsys, "search", "sis", "--n", "4", "--target", "paw")
    assert code == 0 and out.splitlines()[0] == "RESULT none exists"


def test_guard_and_override(capsys):
    code, _, err = run(capsys, "search", "indsat", "--n", "8", "--target", "paw", "--max-gray", "1")
    assert code == 2 and "projected state space" in err
    code, out, _ = run(capsys, "search", "indsat", "--n", "5", "--target", "paw", "--max-gray", "5", "--unsafe-override")
    assert code == 0 and out.startswith("PROJECTED ")


def test_jobs_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("INDSAT_LAB_JOBS", "2")
    code, out, _ = run(capsys, "search", "indsat", "--n", "4", "--target", "claw", "--max-gray", "3")
    assert code == 0 and out.startswith("RESULT 3")


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "paw", "--n-max", "16")
    rows = [line.split() for line in out.splitlines()[1:]]
    assert all(r[1] == r[2] and r[3] == "yes" for r in rows)
    assert rows[-1] == ["16", "34", "34", "yes"]
    code, out, _ = run(capsys, "tables", "claw", "--n-max", "20")
    assert "14 - - - -" in out and "20 40 42 42 yes" in out


@pytest.mark.parametrize("fmt", ["graph6", "dot"])
def test_export_round_trip(tmp_path, capsys, fmt):
    code, out, _ = run(capsys, "export", "--all", "--format", fmt, "--out", str(tmp_path))
    assert code == 0
    names = out.split()
    assert ("icosa_5_2.g6" in names and "table1_paw_n5.tg" in names) if fmt == "graph6" else "icosa_5_2.dot" in names
    originals = dict(catalogue())
    for name in names:
        stem = name.rsplit(".", 1)[0]
        assert read_object(str(tmp_path / name)) == originals[stem]


def test_catalogue_export_alias_and_module_entry(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "indsat_lab", "catalogue", "export", "--all", "--out", str(tmp_path)],
        capture_output=True,
        text=True,
        check=True,
    )
    assert "claw_J.g6" in out.stdout.split()
