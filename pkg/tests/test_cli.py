import json
import subprocess
import sys

from grasslie.cli import _build_parser, main
from grasslie.harness import DEFAULT_GROUP_CODES


def test_verify_writes_passing_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--groups", "o:1,1", "--trials", "3",
                 "--seed", "1", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["all_pass"] is True
    assert doc["config"]["groups"] == ["o:1,1"]
    assert "all pass" in capsys.readouterr().out


def test_verify_deterministic_bytes(tmp_path):
    args = ["verify", "--groups", "sp_c:2", "--trials", "2", "--seed", "5"]
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_impossible_tolerance_exits_one(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--groups", "o:1,1", "--trials", "2",
                 "--tol-membership", "1e-300", "--out", str(out)])
    assert code == 1
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    # the report is still written, with failures recorded
    doc = json.loads(out.read_text())
    assert doc["all_pass"] is False


def test_bad_group_code_exits_two(tmp_path, capsys):
    code = main(["verify", "--groups", "su:2", "--out",
                 str(tmp_path / "r.json")])
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bad_config_exits_two(tmp_path, capsys):
    code = main(["verify", "--groups", "o:1,1", "--trials", "0",
                 "--out", str(tmp_path / "r.json")])
    assert code == 2
    assert "trials" in capsys.readouterr().err


def test_verify_defaults_cover_ten_families():
    args = _build_parser().parse_args(["verify", "--out", "r.json"])
    assert args.groups == list(DEFAULT_GROUP_CODES)
    assert args.trials == 20
    assert args.seed == 0


def test_table2_command(tmp_path, capsys):
    out = tmp_path / "t2.csv"
    assert main(["table2", "--max-n", "2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "family,size,dim_g,dim_k,dim_m,expected_k,expected_m,pass"
    assert len(lines) - 1 >= 10
    assert all(line.endswith(",true") for line in lines[1:])
    assert "all pass" in capsys.readouterr().out


def test_strata_command(tmp_path):
    out = tmp_path / "strata.csv"
    assert main(["strata", "--group", "o:1,1", "--seed", "2",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "family,k,dim_v1,dim_v2,isotropy_defect,note"
    assert len(lines) == 3  # k = 0 and k = 1


def test_strata_bad_group_exits_two(tmp_path, capsys):
    code = main(["strata", "--group", "nope:1", "--out",
                 str(tmp_path / "s.csv")])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_console_script_end_to_end(tmp_path):
    out = tmp_path / "t2.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "grasslie.cli", "table2", "--max-n", "2",
         "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.exists()
