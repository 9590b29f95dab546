import json
import subprocess
import sys

import pytest

from ginv.cli import main, parse_k_range
from ginv.errors import InputError
from ginv.finite import zmod_ring


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


A43 = {"field": "gaussian_rational", "rows": [["1", "i"], ["i", "-1"]]}
A38 = {"field": "gaussian_rational", "rows": [["1", "0"], ["-i", "1"]]}
D38 = {"field": "gaussian_rational", "rows": [["1", "0"], ["i", "0"]]}


def test_compute_mp(tmp_path, capsys):
    a = write(tmp_path, "a.json", A43)
    assert main(["compute", "--kind", "mp", "--matrix", a, "--involution", "conjugate"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exists"] and out["result"]["rows"] == [["1/4", "-1/4i"], ["-1/4i", "-1/4"]]


def test_compute_absent_inverse_exits_1(tmp_path, capsys):
    a = write(tmp_path, "a.json", A43)
    assert main(["compute", "--kind", "group", "--matrix", a]) == 1
    captured = capsys.readouterr()
    assert json.loads(captured.out)["exists"] is False
    assert "no group inverse" in captured.err


def test_compute_along_and_one_sided(tmp_path, capsys):
    a, d = write(tmp_path, "a.json", A38), write(tmp_path, "d.json", D38)
    assert main(["compute", "--kind", "along", "--matrix", a, "--d", d,
                 "--involution", "transpose"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["rows"] == D38["rows"]
    assert main(["compute", "--kind", "bc", "--matrix", a, "--b", d, "--c", d,
                 "--involution", "transpose", "--side", "left"]) == 0
    capsys.readouterr()
    assert main(["compute", "--kind", "13", "--matrix", d, "--involution", "transpose"]) == 1
    assert "{1,3}" in capsys.readouterr().err


def test_compute_input_errors(tmp_path, capsys):
    a = write(tmp_path, "a.json", A38)
    bad = write(tmp_path, "bad.json", {"rows": [["1", "2"]]})
    lit = write(tmp_path, "lit.json", {"rows": [["1/0"]]})
    assert main(["compute", "--kind", "along", "--matrix", a]) == 2
    assert main(["compute", "--kind", "mp", "--matrix", bad]) == 2
    assert main(["compute", "--kind", "mp", "--matrix", lit]) == 2
    assert main(["compute", "--kind", "mp", "--matrix", str(tmp_path / "missing.json")]) == 2
    assert main(["compute", "--kind", "mp", "--matrix", a, "--involution", "sideways"]) == 2
    assert main(["compute", "--kind", "mp", "--matrix", a, "--side", "left"]) == 2


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--theorem", "T5.3", "--structure", "zmod:6", "--k", "1..3",
                 "--report", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["verdict"] == "pass" and rep["reports"][0]["instances_examined"] == 36
    assert "T5.3" in capsys.readouterr().out


def test_verify_seeded_matrix_structure(tmp_path, capsys):
    assert main(["verify", "--theorem", "C4.2", "--structure", "matrix:2:qi",
                 "--involution", "conjugate", "--count", "15", "--seed", "3"]) == 0
    assert "C4.2" in capsys.readouterr().out


def test_verify_table_structure(tmp_path, capsys):
    t = write(tmp_path, "z4.json", zmod_ring(4).to_json())
    assert main(["verify", "--structure", f"table:{t}"]) == 0


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "T0", "--structure", "m2z2"],
    ["verify", "--structure", "m9z9"],
    ["verify", "--structure", "m3z3"],
    ["verify", "--structure", "zmod:x"],
    ["verify", "--structure", "matrix:2:z4"],
    ["verify", "--structure", "m2z2", "--k", "0..2"],
    ["counterexample", "remark99"],
])
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_counterexample(capsys):
    assert main(["counterexample", "remark4.3"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["id"] == "remark4.3" and all(a["holds"] for a in rep["assertions"])


def test_validate(tmp_path, capsys):
    ok = write(tmp_path, "ok.json", zmod_ring(5).to_json())
    assert main(["validate", f"table:{ok}"]) == 0
    assert "valid *-ring of order 5" in capsys.readouterr().out
    bad = zmod_ring(3).to_json()
    bad["mul"][2][2] = 2
    assert main(["validate", f"table:{write(tmp_path, 'bad.json', bad)}"]) == 1
    assert "invalid" in capsys.readouterr().out
    assert main(["validate", str(tmp_path / "missing.json")]) == 2


def test_parse_k_range():
    assert parse_k_range("1..3") == [1, 2, 3]
    assert parse_k_range("2") == [2]
    assert parse_k_range("1,4") == [1, 4]
    for bad in ("0..2", "a", "3..1"):
        with pytest.raises(InputError):
            parse_k_range(bad)


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "ginv.cli", "counterexample", "remark3.8"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and '"reproduced"' in res.stdout
