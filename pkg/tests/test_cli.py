import json
import shutil
import subprocess
import sys

import pytest

from arcgeom import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", "--q", "3")
    assert code == 0
    assert json.loads(out)["count"] == 892


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--p", "2", "--h", "1")
    d = json.loads(out)
    assert code == 0 and d["order"] == 64 and d["subfield_sizes"] == {"1": 2, "2": 4, "3": 8, "6": 64}


def test_custom_modulus(capsys):
    code, out, _ = run(capsys, "curve", "--q", "2", "--modulus", "1,0,0,1,0,0,1")
    assert code == 0 and json.loads(out)["count"] == 81


@pytest.mark.parametrize("argv", [
    ["curve", "--q", "6"],
    ["curve"],
    ["curve", "--q", "2", "--p", "2"],
    ["curve", "--q", "2", "--modulus", "1,1,1,1,1,1,1"],
    ["nonsense"],
    ["verify", "--q", "2", "--suite", "nope"],
    ["secants", "--q", "2", "--point", "zz"],
    ["bounds", "--q-min", "9", "--q-max", "3"],
    ["spectrum", "--q", "3", "--budget", "64"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--q", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "character,lines"
    assert {l.split(",")[0] for l in lines[1:]} <= {"0", "1", "2", "3"}


def test_secants_all_paths_agree(capsys):
    code, out, _ = run(capsys, "secants", "--q", "2", "--point", "5:7")
    d = json.loads(out)
    assert code == 0 and d["agreement"] is True
    assert d["paths"]["oracle"] == d["paths"]["roots"]


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--threshold")
    assert code == 0 and json.loads(out)["q_star"] == 315372590
    code, out, _ = run(capsys, "bounds", "--q-min", "2", "--q-max", "4", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 4


def test_complete(capsys):
    code, out, _ = run(capsys, "complete", "--q", "2")
    d = json.loads(out)
    assert code == 0 and d["complete"] and d["strong"]


def test_verify_deterministic(capsys):
    argv = ["verify", "--q", "2", "--suite", "bounds,identities,field", "--seed", "3", "--threads", "2"]
    c1, o1, _ = run(capsys, *argv)
    c2, o2, _ = run(capsys, *argv)
    assert c1 == c2 == 0
    assert o1 == o2
    assert json.loads(o1)["passed"] is True


def test_console_script_installed():
    exe = shutil.which("arcgeom")
    cmd = [exe] if exe else [sys.executable, "-m", "arcgeom.cli"]
    p = subprocess.run(cmd + ["curve", "--q", "2"], capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["count"] == 81
