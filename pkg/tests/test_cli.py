import json

import pytest

from sharpdim.cli import main
from sharpdim.knot_db import builtin_db, save_db


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


@pytest.mark.parametrize("argv,out", [
    (["dim", "T23", "5", "--field", "F2"], "5"),
    (["dim", "unknot", "7/3"], "7"),
    (["dim", "fig8", "0", "--field", "C", "--bundle", "mu"], "2"),
    (["dim", "fig8", "inf"], "1"),
])
def test_dim(capsys, argv, out):
    assert run(capsys, *argv) == (0, out)


def test_exit_codes(capsys):
    assert run(capsys, "dim", "nope", "1")[0] == 2
    assert run(capsys, "dim", "T23", "1", "--field", "Fp:4")[0] == 2
    assert run(capsys, "dim", "T(2,5)", "1", "--field", "F2")[0] == 2
    assert run(capsys, "dim", "K4", "0")[0] == 3


def test_json_dim(capsys):
    code, out = run(capsys, "dim", "fig8", "0", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 4 and data["exceptional"]


def test_check_triangles(capsys):
    code, out = run(capsys, "check-triangles", "fig8", "--field", "C", "--den-max", "10")
    assert code == 0 and out.startswith("0 failures")


def test_su2(capsys):
    code, out = run(capsys, "su2", "T23", "--field", "F2", "--interval", "2", "6", "--den-max", "12",
                    "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert {"11/2", "17/3", "23/4", "29/5"} <= set(data["survivors"])
    assert "4" not in data["survivors"]


def test_farey_json_roundtrip(capsys):
    code, out = run(capsys, "farey", "2/3", "--format", "json")
    data = json.loads(out)
    assert [c["slope"] for c in data["children"]] == ["1", "1/2", "0"]
    assert json.loads(json.dumps(data)) == data


def test_table_sorted(capsys):
    code, out = run(capsys, "table", "T23", "--field", "F2", "--interval", "3", "5", "--den-max", "3",
                    "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[0] == {"slope": "3", "dim": 5}
    assert [r["slope"] for r in rows][:3] == ["3", "10/3", "7/2"]


def test_grading_and_db(capsys, tmp_path, monkeypatch):
    assert run(capsys, "check-grading", "--total", "8")[0] == 0
    assert run(capsys, "db-validate")[0] == 0
    path = tmp_path / "db.json"
    save_db([r for r in builtin_db() if r.name == "unknot"], path)
    monkeypatch.setenv("SHARPDIM_DB", str(path))
    assert run(capsys, "dim", "unknot", "3")[1] == "3"
    assert run(capsys, "dim", "T23", "3")[0] == 2
    path.write_text("[")
    assert run(capsys, "db-validate", str(path))[0] == 1
