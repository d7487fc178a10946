import json
import subprocess
import sys
from pathlib import Path

import pytest

from cartqec import cli
from cartqec.checks import Check
from cartqec.footprint import ProductSpec
from cartqec.tables import CSV_FIELDS, parse_csv, render_csv, table_row

GOLDEN = Path(__file__).parent / "golden"

TABLE_CONFIGS = {
    "table1": ["--p", "2", "--r", "3,3", "--q", "8", "--delta", "3..8"],
    "table2": ["--p", "5", "--r", "1,1,1,1", "--delta", "3..6"],
    "table3": ["--p", "2", "--r", "4,4,2", "--q", "16", "--delta", "3..17"],
    "table4": ["--p", "2", "--r", "3,3,3,1", "--q", "8", "--delta", "3..9"],
}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params_example_1(capsys):
    code, out, _ = run(capsys, "params", "--p", "3", "--r", "2,2,1", "--delta", "4")
    assert code == 0
    assert "[243,236,4]" in out
    assert "[[243,229,4]] *" in out
    assert "[[243,232,>=4]] *" in out


def test_params_mds_example(capsys):
    code, out, _ = run(capsys, "params", "--p", "3", "--r", "2,1", "--delta", "3")
    assert code == 0
    steane = next(line for line in out.splitlines() if line.startswith("steane"))
    assert "[[27,23,3]] !" in steane and "SINGLETON: MDS" in steane


def test_params_json(capsys):
    code, out, _ = run(capsys, "params", "--p", "3", "--r", "2,2,1", "--delta", "7", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["css"]["k"] == 199 and rec["steane"]["k"] == 207 and rec["steane"]["increase"] == 8


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["params", "--p", "2", "--r", "1,1", "--delta", "5"], 2),
        (["params", "--p", "2", "--r", "1,1", "--delta", "4"], 2),
        (["params", "--p", "3", "--r", "2,1", "--delta", "9"], 2),
        (["params", "--p", "4", "--r", "1", "--delta", "2"], 1),
        (["params", "--p", "2", "--r", "1,2", "--delta", "2"], 1),
        (["params", "--p", "2", "--r", "1,1", "--delta", "9"], 1),
        (["params", "--p", "2", "--r", "1,1", "--delta", "x"], 1),
        (["params", "--p", "2", "--r", "1,1"], 1),
        (["params", "--p", "3", "--r", "1", "--q", "8", "--delta", "2"], 1),
        (["table", "--p", "2", "--r", "3,3", "--q", "8", "--ambient-r", "3", "--delta", "3"], 1),
        (["bogus"], 1),
        (["grid", "--p", "2", "--r", "1,1,1,1"], 1),
    ],
)
def test_exit_codes(capsys, argv, expected):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == expected


def test_hypothesis_message_names_failure(capsys):
    code, _, err = run(capsys, "params", "--p", "2", "--r", "1,1", "--delta", "4")
    assert code == 2 and "NotDualContaining" in err


def test_table_text_row(capsys):
    code, out, _ = run(capsys, "table", *TABLE_CONFIGS["table1"])
    row = next(line for line in out.splitlines() if line.lstrip().startswith("7 "))
    assert code == 0
    assert "[[64,36,7]]" in row and "[[64,40,7]]" in row
    assert row.split()[-3:] == ["2", "4", "4"]


@pytest.mark.parametrize("name", sorted(TABLE_CONFIGS))
def test_golden_tables(capsys, name):
    code, out, _ = run(capsys, "table", *TABLE_CONFIGS[name], "--format", "csv")
    assert code == 0
    assert parse_csv(out) == parse_csv((GOLDEN / f"{name}.csv").read_text())


@pytest.mark.parametrize("name", sorted(TABLE_CONFIGS))
def test_output_is_deterministic(capsys, name):
    outs = {fmt: run(capsys, "table", *TABLE_CONFIGS[name], "--format", fmt)[1] for fmt in ("text", "csv", "json")}
    again = {fmt: run(capsys, "table", *TABLE_CONFIGS[name], "--format", fmt)[1] for fmt in ("text", "csv", "json")}
    assert outs == again


def test_csv_round_trip():
    spec = ProductSpec(2, (4, 4, 2))
    rows = [table_row(spec, d) for d in range(3, 18)]
    assert parse_csv(render_csv(rows)) == [r.record() for r in rows]


def test_json_lines_use_csv_fields(capsys):
    _, out, _ = run(capsys, "table", *TABLE_CONFIGS["table2"], "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 4 and all(list(r) == CSV_FIELDS for r in recs)


def test_skipped_delta_warnings(capsys):
    code, out, err = run(capsys, "table", "--p", "3", "--r", "2,1", "--delta", "2..9")
    assert code == 0
    assert "# delta=2 skipped: EnlargementTooSmall" in out
    assert "# delta=9 skipped: NotDualContaining" in out
    code, out, err = run(capsys, "table", "--p", "3", "--r", "2,1", "--delta", "2..9", "--format", "csv")
    assert code == 0 and "delta=9 skipped" in err
    # tau(5) = tau(7) = 1 for sizes (9, 3), so delta 6 and 8 cannot be enlarged
    assert [r["delta"] for r in parse_csv(out)] == [3, 4, 5, 7]


def test_grid_fig1(capsys):
    code, out, _ = run(capsys, "grid", "--p", "3", "--r", "2,1")
    assert code == 0
    assert out == (GOLDEN / "grid_3_21.txt").read_text()
    assert [int(x) for x in out.split()] == [
        27, 24, 21, 18, 15, 12, 9, 6, 3,
        18, 16, 14, 12, 10, 8, 6, 4, 2,
        9, 8, 7, 6, 5, 4, 3, 2, 1,
    ]  # fmt: skip


def test_grid_small(capsys):
    assert run(capsys, "grid", "--p", "2", "--r", "1")[1] == "2 1\n"
    out = run(capsys, "grid", "--p", "2", "--r", "1,1,1")[1]
    assert out == "# a3=0\n8 4\n4 2\n\n# a3=1\n4 2\n2 1\n"


def test_tau_command(capsys):
    code, out, _ = run(capsys, "tau", "--p", "3", "--r", "2,2,1", "--s", "3..6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s,tau,K,bound,exact"
    assert lines[1] == "3,3,3,3,true"
    assert lines[4] == "6,8,2,4,false"


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--p", "2", "--r", "2,1", "--delta", "3")
    assert code == 0 and "FAIL" not in out
    assert "dist_brute=3 dist_designed=3" in out
    code, out, _ = run(capsys, "verify", "--p", "3", "--r", "2,1", "--delta", "4", "--level", "matrix")
    assert code == 0 and "FAIL" not in out


def test_verify_example_1(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--r", "2,2,1", "--delta", "4")
    assert code == 0 and "PASS rank rank=236" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_checks", lambda spec, delta, level: [Check("rank", "FAIL", "forced")])
    code, out, _ = run(capsys, "verify", "--p", "2", "--r", "1,1", "--delta", "2")
    assert code == 3 and "FAIL rank forced" in out


def test_matrix_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("CARTQEC_MATRIX_CAP", "16")
    code, _, err = run(capsys, "verify", "--p", "3", "--r", "2,1", "--delta", "4")
    assert code == 1 and "n <= 16" in err
    code, _, _ = run(capsys, "verify", "--p", "3", "--r", "2,1", "--delta", "4", "--level", "none")
    assert code == 0


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", *TABLE_CONFIGS["table1"], "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "table1.csv").read_text()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "cartqec", "grid", "--p", "2", "--r", "1"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == "2 1\n"
