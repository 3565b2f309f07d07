import subprocess
import sys

import pytest

from regdigraph.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_enumerate_reg(capsys):
    status, out, err = run(capsys, "enumerate", "--nodes", "3", "--format", "reg", "--workers", "1")
    assert status == 0
    assert out.count("\n") == 16
    assert "8 classes" in err and "8 classes" not in out


def test_enumerate_dot_filtered(capsys):
    status, out, _ = run(capsys, "enumerate", "--nodes", "4", "--no-multiarcs", "--no-loops", "--format", "dot")
    assert status == 0 and out.count("digraph") == 2


def test_enumerate_connected(capsys):
    status, out, _ = run(capsys, "enumerate", "--nodes", "2", "--connected-only")
    assert status == 0 and out.count("V") == 2


def test_enumerate_tsv_and_terms(capsys):
    _, out, _ = run(capsys, "enumerate", "--nodes", "2", "--format", "tsv")
    assert out.splitlines()[0].startswith("index\tarcs")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "enumerate", "--nodes", "2", "--format", "terms")
    assert len(out.splitlines()) == 3


def test_tables_and_rooted(capsys):
    _, out, _ = run(capsys, "tables", "--table", "U", "--max-n", "6")
    lines = out.splitlines()
    assert lines[4] == "4\t14\t8\t2\t1\t\t\t25"
    assert lines[6] == "6\t265\t93\t28\t8\t2\t1\t397"
    _, out, _ = run(capsys, "tables", "--table", "L", "--max-n", "5")
    assert out.splitlines()[5] == "5\t4704\t1285\t200\t20\t1\t6210"
    _, out, _ = run(capsys, "rooted", "--max-n", "5")
    assert out.splitlines()[5] == "5\t85\t310\t588\t588\t310\t85"


def test_render(capsys):
    status, out, _ = run(capsys, "render", "--nodes", "2")
    lines = out.splitlines()
    assert status == 0 and len(lines) == 3
    assert [line.split("\t")[1] for line in lines] == ["1", "1", "1"]


def test_verify_small(capsys):
    status, out, err = run(capsys, "verify", "--max-n", "3")
    assert status == 0
    assert "PASS sum n!/|A| = 21 at n=3" in out
    assert "FAIL" not in out


def test_verify_reports_corrupted_cache(tmp_path, capsys):
    assert run(capsys, "verify", "--max-n", "4", "--cache-dir", str(tmp_path))[0] == 0
    path = tmp_path / "Reg4.txt"
    lines = path.read_text().splitlines(keepends=True)
    lines[5] = lines[5].replace("V", "V9", 1)
    path.write_text("".join(lines))
    status, out, err = run(capsys, "verify", "--max-n", "4", "--cache-dir", str(tmp_path))
    assert status == 1
    assert "FAIL load Reg4.txt: line 6" in out


def test_verify_reports_missing_class(tmp_path, capsys):
    run(capsys, "verify", "--max-n", "4", "--cache-dir", str(tmp_path))
    path = tmp_path / "Reg4.txt"
    lines = path.read_text().splitlines(keepends=True)
    path.write_text("".join(lines[:-2]))
    status, out, _ = run(capsys, "verify", "--max-n", "4", "--cache-dir", str(tmp_path))
    assert status == 1
    assert "FAIL Table II row 4: U(4,c) for c=1..[3] = 0, expected 1" in out


def test_budget_exhaustion_exit_code(capsys):
    status, out, err = run(capsys, "enumerate", "--nodes", "7", "--time-budget", "0")
    assert status == 3 and out == "" and "budget" in err


def test_bad_flags():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--nodes", "12"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["rooted", "--max-n", "3", "-k", "1"])


def test_output_file(tmp_path, capsys):
    target = tmp_path / "reg3.txt"
    status, out, _ = run(capsys, "enumerate", "--nodes", "3", "--output", str(target))
    assert status == 0 and out == ""
    assert target.read_text().count("\n") == 16


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "regdigraph", "enumerate", "--nodes", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.count("\n") == 6
