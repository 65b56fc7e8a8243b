import io
import json
from importlib import resources

import pytest

from shirac.cli import main


def spec_path(name):
    return str(resources.files("shirac") / "data" / name)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_expand_worked_example():
    code, text = run("expand", spec_path("worked_example.json"))
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "position,amplitude"
    assert lines[1] == "0,60" and lines[-1] == "22,6"
    assert len(lines) == 16


def test_expand_window():
    code, text = run("expand", spec_path("periodic_pair.json"), "--from", "0", "--to", "3")
    assert code == 0
    assert text.splitlines()[1:] == ["0,2", "1,1", "5/2,3"]


def test_eval():
    path = spec_path("three_jobs.json")
    assert run("eval", path, "--lo", "2", "--hi", "4") == (0, "11\n")
    assert run("eval", path, "--lo", "2", "--hi", "4", "--mask", "oc") == (0, "6\n")


def test_bound():
    path = spec_path("three_jobs.json")
    assert run("bound", path, "--d", "1", "--w1", "0", "--w2", "4") == (0, "11 @ 2\n")
    assert run("bound", path, "--d", "1", "--w1", "0", "--w2", "4",
               "--kind", "min", "--mask", "oo") == (0, "0 @ 0\n")


def test_graph_csv():
    code, text = run("graph", spec_path("three_jobs.json"), "--w1", "0", "--w2", "4")
    assert code == 0
    assert "\r" not in text
    assert text.splitlines() == ["d,value,witness,next_d", "0,6,3,1", "1,11,2,2", "2,15,1,3",
                                 "3,15,0,4", "4,15,0,"]


def test_graph_hyperperiod(tmp_path):
    target = tmp_path / "g.csv"
    code, text = run("graph", spec_path("periodic_pair.json"), "--hyperperiod",
                     "--out", str(target))
    assert code == 0 and text == ""
    rows = target.read_text().splitlines()
    assert rows[0] == "d,value,witness,next_d"
    assert rows[-1].startswith("12,")


def test_check():
    assert run("check", spec_path("periodic_pair.json")) == (0, "ok: 2 summand(s), hyperperiod 12\n")
    assert run("check", spec_path("three_jobs.json")) == (0, "ok: 1 summand(s)\n")


def test_verify_bundled():
    code, text = run("verify", "--cases", "3")
    assert code == 0
    assert text.startswith("all ") and text.endswith("(seed 0)\n")


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("SHIRAC_SEED", "17")
    code, text = run("verify", "--cases", "2", "--seed", "1")
    assert code == 0 and "(seed 17)" in text


def test_verify_catches_corrupted_fixture(tmp_path):
    data = json.loads(open(spec_path("three_jobs.json")).read())
    data["expect"]["eval"][0]["value"] = "12"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, text = run("verify", str(bad), "--cases", "0")
    assert code == 3
    assert "FAIL" in text and "expected 12" in text


def test_domain_errors_exit_2(tmp_path, capsys):
    path = spec_path("three_jobs.json")
    assert run("bound", path, "--d", "1", "--w1", "0", "--w2", "4", "--kind", "min")[0] == 2
    neg = tmp_path / "neg.json"
    neg.write_text(json.dumps({"summands": [{"factors": [
        {"shift_step": 1, "amplitudes": [1, -2]}]}]}))
    assert run("eval", str(neg), "--lo", "0", "--hi", "1")[0] == 2
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps({"summands": [{"factors": [
        {"shift_step": 0, "degree": "inf", "amplitudes": [1]}]}]}))
    assert run("check", str(zero))[0] == 2
    assert "shirac:" in capsys.readouterr().err


def test_io_and_parse_errors_exit_1(tmp_path):
    assert run("expand", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "float.json"
    bad.write_text('{"summands": [{"factors": [{"shift_step": 0.5, "amplitudes": [1]}]}]}')
    assert run("expand", str(bad))[0] == 1
    assert run("expand", spec_path("periodic_pair.json"), "--from", "0")[0] == 1
    assert run("graph", spec_path("three_jobs.json"), "--hyperperiod")[0] == 1
    assert run("bound", spec_path("three_jobs.json"), "--d", "1")[0] == 1


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        main(["bound", "x.json", "--d", "0.5.5"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 1


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "shirac", "eval", spec_path("three_jobs.json"),
                           "--lo", "2", "--hi", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "11\n"
