import json
import subprocess
import sys

import pytest

from cubicinf.cli import main, run_one
from cubicinf.tables import table_text

WORKED = "x0^3 + x1^3 + x0*x1*x2 + x1*x2 + x0*x2 + x0 + x1 + x2"

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err

def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", WORKED)
    assert code == 0
    assert "row           1:A2->A3" in out
    assert "lambda=1  mu=4  b2=5" in out
    assert "t + 4 = 0" in out

def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "classify", WORKED, "--json")
    rep = json.loads(out)
    assert code == 0 and "verification" not in rep
    assert rep["schema"] == "cubicinf.report/1"
    assert (rep["lambda"], rep["mu"], rep["b2"], rep["class"]) == (1, 4, 5, "F")
    assert rep["events"][0]["t_locus"] == "t + 4"
    assert rep["events"][0]["values"][0]["approx_note"].startswith("approximate")
    assert json.loads(json.dumps(rep)) == rep

def test_verify_section_only_on_request(capsys):
    code, out, _ = run(capsys, "classify", WORKED, "--json", "--verify", "--seed", "7")
    rep = json.loads(out)
    assert code == 0 and rep["verification"]["ok"] and rep["verification"]["seed"] == 7

def test_classify_from_file(tmp_path, capsys):
    p = tmp_path / "f.txt"
    p.write_text("# worked example\n" + WORKED + "\n")
    code, out, _ = run(capsys, "classify", str(p), "--json")
    assert code == 0 and json.loads(out)["row"] == "1:A2->A3"

@pytest.mark.parametrize("text,code", [
    ("x0^4 + x1", 1),
    ("x0 + x1", 1),
    ("x0 ** x1", 1),
    ("x0*x1^2 + x1", 2),
    ("x0^3 - 2*x1^3 + x2", 3),
])
def test_exit_codes(text, code, capsys):
    got, out, err = run(capsys, "classify", text)
    assert got == code
    assert "error" in err

def test_error_record_is_json(capsys):
    code, out, _ = run(capsys, "classify", "x0*x1^2 + x1", "--json")
    rec = json.loads(out)
    assert code == 2 and rec["error"]["kind"] == "not_b_type" and rec["error"]["exit_code"] == 2

def test_internal_exit_code(monkeypatch):

    def boom(text, verify=False, seed=0):
        from cubicinf.tables import IncompleteTable
        raise IncompleteTable(1, {})

    monkeypatch.setattr("cubicinf.cli.classify_text", boom)
    code, rec = run_one(WORKED)
    assert code == 4 and rec["error"]["kind"] == "internal"

def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 1

def test_tables_dump_verbatim(capsys):
    code, out, _ = run(capsys, "tables-dump")
    assert code == 0 and out == table_text()

def test_batch(tmp_path, capsys):
    p = tmp_path / "batch.txt"
    p.write_text("\n".join([WORKED, "# comment", "", "x1 - x0^3 + x1^2*x2", "x0^4"]) + "\n")
    code, out, _ = run(capsys, "batch", str(p))
    recs = [json.loads(ln) for ln in out.splitlines()]
    assert code == 1 and len(recs) == 3
    assert recs[0]["row"] == "1:A2->A3"
    assert recs[1]["broughton"] == {"flag": True, "case": "i"}
    assert recs[2]["error"]["kind"] == "input"

def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "cubicinf", "classify", "x1 - x0^3 + x1^2*x2"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0
    assert "Broughton type   yes, case i" in r.stdout
