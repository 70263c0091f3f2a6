import json
import subprocess
import sys

import pytest

from crystal_automata.cli import main
from crystal_automata.stateio import serialize_state
from crystal_automata.sweeps import capacity_lists, states

BBS = "A 2 4\n1 : 1 0\n1 : 0 1\n1 : 1 0\n1 : 0 1\n"


@pytest.fixture
def bbs_file(tmp_path):
    p = tmp_path / "bbs.txt"
    p.write_text(BBS)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_evolve_one_step(capsys, bbs_file):
    code, out, _ = run(capsys, "evolve", bbs_file, "--steps", "1")
    assert code == 0
    assert out.splitlines() == ["1 2 1 2", "2 1 2 1"]


def test_evolve_zero_steps_echoes(capsys, bbs_file):
    code, out, _ = run(capsys, "evolve", bbs_file, "--steps", "0")
    assert (code, out) == (0, "1 2 1 2\n")


def test_evolve_both_has_empty_diff(capsys, bbs_file):
    code, out, _ = run(capsys, "evolve", bbs_file, "--steps", "3", "--mode", "both")
    assert code == 0
    assert out.endswith("# diff\n")


def test_evolve_both_on_sweep_states(capsys, tmp_path):
    p = tmp_path / "s.txt"
    for caps in capacity_lists(3, 2):
        for s in list(states("D", 3, caps))[::7]:
            p.write_text(serialize_state(s))
            code, out, _ = run(capsys, "evolve", str(p), "--steps", "2", "--mode", "both")
            assert code == 0 and out.endswith("# diff\n")


def test_evolve_renders_walls_and_bars(capsys, tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("D 3 2\n2 : 1 0 0 | 0 0 1\n1 : 0 0 0 | 1 0 0\n")
    code, out, _ = run(capsys, "evolve", str(p), "--steps", "0")
    assert out == "B 1 | -1\n"


def test_evolve_json(capsys, bbs_file):
    code, out, _ = run(capsys, "evolve", bbs_file, "--format", "json")
    doc = json.loads(out)
    assert doc["kind"] == "A" and doc["capacities"] == [1, 1, 1, 1]
    assert doc["steps"][1]["cells"] == [2, 1, 2, 1]
    assert doc["steps"][1]["sites"][0] == {"capacity": 1, "x": [0, 1]}


def test_evolve_explicit_carrier_and_out(capsys, tmp_path):
    empty = tmp_path / "e.txt"
    empty.write_text("A 2 3\n1 : 0 1\n1 : 0 1\n1 : 0 1\n")
    out_file = tmp_path / "o.txt"
    code, out, _ = run(capsys, "evolve", str(empty), "--carrier", "1,5", "--out", str(out_file))
    assert code == 0 and out == ""
    # the carrier's ball drops into the first empty box
    assert out_file.read_text().splitlines() == ["2 2 2", "1 2 2"]


def test_evolve_random_state_is_deterministic(capsys):
    args = ("evolve", "--kind", "D", "--n", "3", "--capacities", "2,1,2", "--seed", "11", "--steps", "2")
    first = run(capsys, *args)
    assert first == run(capsys, *args)
    assert first[0] == 0 and len(first[1].splitlines()) == 3


def test_evolve_usage_errors(capsys, tmp_path, bbs_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("A 2 1\n1 : 1 z\n")
    code, _, err = run(capsys, "evolve", str(bad))
    assert code == 2 and "line 2, column 7" in err
    assert run(capsys, "evolve")[0] == 2
    assert run(capsys, "evolve", bbs_file, "--kind", "D")[0] == 2
    assert run(capsys, "evolve", bbs_file, "--carrier", "1,1")[0] == 2
    assert run(capsys, "evolve", bbs_file, "--mode", "sideways")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_r_apply_type_a(capsys):
    code, out, _ = run(capsys, "r-apply", "--kind", "A", "2,0", "0,1", "--intermediates")
    assert code == 0
    assert out.splitlines() == ["x' = (1,0)", "y' = (1,1)", "P = (0,1)"]


def test_r_apply_type_d_reduction_banner(capsys):
    code, out, _ = run(capsys, "r-apply", "--kind", "D", "1,0,5|0,0,0", "0,1,0|0,0,0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("barred coordinates are zero")
    assert lines[-1].endswith("(agrees)")


def test_r_apply_json_intermediates(capsys):
    code, out, _ = run(
        capsys, "r-apply", "--kind", "D", "0,2,3,1|1,0,0,0", "1,1,0,0|0,2,0,2",
        "--intermediates", "--format", "json",
    )
    doc = json.loads(out)
    assert doc["V"] == [8, 7, 9, 9, 11] and doc["W"] == [14, 16, 19]
    assert doc["x'"] == {"x": [0, 1, 3, 1], "xbar": [1, 0, 0, 0]}


def test_r_apply_malformed(capsys):
    code, _, err = run(capsys, "r-apply", "--kind", "A", "2,x", "0,1")
    assert code == 2 and "ParseError" in err


def test_gamma(capsys):
    assert run(capsys, "gamma", "1", "0", "2", "0", "3")[1] == "1 0 2 0 0\n"
    code, out, _ = run(capsys, "gamma", "2", "1", "1", "1", "1", "--format", "json")
    assert json.loads(out)["G"] == 2


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", "2,1,0|1,0,0", "0,1,1|1,0,0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["local_step_agrees"]
    assert doc["v"] == [-1, 0, 0, 0] and doc["w"] == [-2, 0, 1]
    code, out, _ = run(capsys, "limits", "2,1,0|1,0,0", "0,1,1|1,0,0", "--method", "direct")
    assert "agrees" in out


def test_verify_pass_and_json(capsys):
    code, out, _ = run(capsys, "verify", "gamma-identities")
    assert code == 0 and out.startswith("PASS gamma-identities: 3125 cases")
    code, out, _ = run(capsys, "verify", "lemma31", "--bounds", "max_coord=1", "--format", "json")
    doc = json.loads(out)
    assert doc["passed"] and doc["bounds"]["max_coord"] == 1 and doc["seed"] == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from crystal_automata import verify

    suite = verify.SUITES["gamma-identities"]
    broken = verify.Suite(suite.cases, lambda c: "forced", suite.defaults, suite.description)
    monkeypatch.setitem(verify.SUITES, "gamma-identities", broken)
    code, out, _ = run(capsys, "verify", "gamma-identities", "--bounds", "max_input=0")
    assert code == 1 and out.startswith("FAIL") and '"abcde": [0, 0, 0, 0, 0]' in out


def test_verify_unknown_suite_and_bad_bounds(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2 and "UnknownSuiteError" in err
    assert run(capsys, "verify", "lemma31", "--bounds", "bogus=1")[0] == 2
    assert run(capsys, "verify", "lemma31", "--bounds", "n")[0] == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "bbs.txt"
    p.write_text(BBS)
    res = subprocess.run(
        [sys.executable, "-m", "crystal_automata", "evolve", str(p)],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.splitlines()[-1] == "2 1 2 1"
