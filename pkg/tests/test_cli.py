import json
import subprocess
import sys

import pytest

from framedhom import cli
from framedhom.framing import Framing
from framedhom.lattice import SurfaceSpec
from framedhom.paut import PAutElem, identity_mat


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def f2(tmp_path):
    return write_json(tmp_path, "f2.json", {"g": 2, "kappa": [2], "wind_x": [0, 0], "wind_y": [0, 0]})


@pytest.fixture
def f11(tmp_path):
    return write_json(
        tmp_path, "f11.json",
        {"g": 2, "kappa": [1, 1], "wind_x": [0, 0], "wind_y": [0, 0], "arc2": [-1]},
    )


def test_arf_command(capsys, f2, tmp_path):
    code, out, _ = run_cli(capsys, "arf", "--framing", f2)
    assert code == 0 and json.loads(out) == {"arf": 0}
    f = write_json(tmp_path, "f.json", {"g": 2, "kappa": [2], "wind_x": [1, 0], "wind_y": [0, 0]})
    code, out, _ = run_cli(capsys, "arf", "--framing", f)
    assert code == 0 and json.loads(out) == {"arf": 1}


def test_arf_validation_exit2(capsys, tmp_path):
    bad = write_json(tmp_path, "bad.json", {"g": 2, "kappa": [3], "wind_x": [0, 0], "wind_y": [0, 0]})
    code, _, err = run_cli(capsys, "arf", "--framing", bad)
    assert code == 2 and "kappa sum" in err


def test_unknown_keys_rejected(capsys, tmp_path):
    bad = write_json(
        tmp_path, "bad.json",
        {"g": 2, "kappa": [2], "wind_x": [0, 0], "wind_y": [0, 0], "extra": 1},
    )
    code, _, err = run_cli(capsys, "arf", "--framing", bad)
    assert code == 2 and "unknown" in err


def test_theta_and_kernel_commands(capsys, tmp_path, f2, f11):
    pid = write_json(tmp_path, "pid.json", {"g": 2, "n": 1, "S": identity_mat(4), "M": []})
    code, out, _ = run_cli(capsys, "theta", "--paut", pid, "--framing", f2)
    assert code == 0 and json.loads(out) == {"theta": [0, 0, 0, 0]}
    prel = write_json(
        tmp_path, "prel.json",
        {"g": 2, "n": 2, "S": identity_mat(4), "M": [[1], [0], [0], [0]]},
    )
    code, out, _ = run_cli(capsys, "theta", "--paut", prel, "--framing", f11)
    assert code == 0 and json.loads(out) == {"theta": [0, 1, 0, 0]}
    code, out, _ = run_cli(capsys, "kernel-test", "--paut", prel, "--framing", f11)
    assert code == 0 and json.loads(out) == {"in_kernel": False}
    # cross-input mismatch
    code, _, err = run_cli(capsys, "theta", "--paut", prel, "--framing", f2)
    assert code == 3


def test_lift_command(capsys, f2, tmp_path):
    code, out, _ = run_cli(capsys, "lift", "--framing", f2, "x1")
    assert code == 0
    data = json.loads(out)
    assert data["S"][0][1] == -1
    odd = write_json(tmp_path, "odd.json", {"g": 2, "kappa": [2], "wind_x": [1, 0], "wind_y": [0, 0]})
    code, out, _ = run_cli(capsys, "lift", "--framing", odd, "x1")
    assert code == 1 and json.loads(out)["error"] == "NoLiftExists"


def test_factor_sp_command(capsys, tmp_path):
    s = [[1, -2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    p = write_json(tmp_path, "p.json", {"g": 2, "n": 1, "S": s, "M": []})
    code, out, _ = run_cli(capsys, "factor-sp", "--paut", p)
    assert code == 0
    data = json.loads(out)
    assert data["factors"] == [{"v": [1, 0, 0, 0], "k": 2}]


def test_act_command(capsys, f2):
    code, out, _ = run_cli(capsys, "act", "--framing", f2, "--word", "Tx1 Ty2^-1")
    assert code == 0
    data = json.loads(out)
    assert data["framing"]["g"] == 2
    assert data["paut"]["S"][0][1] == -1


def test_act_word_with_explicit_letters(capsys, tmp_path):
    # no arc data, so point-push letters are allowed to act
    noarc = write_json(
        tmp_path, "noarc.json",
        {"g": 2, "kappa": [1, 1], "wind_x": [0, 0], "wind_y": [0, 0]},
    )
    code, out, _ = run_cli(
        capsys, "act", "--framing", noarc, "--word", "T(x1+2y2;w=-1)^2 P(2;x1)"
    )
    assert code == 0
    data = json.loads(out)
    assert data["paut"]["M"] != [[0], [0], [0], [0]]


def test_act_push_on_arcs_rejected(capsys, f11):
    code, _, err = run_cli(capsys, "act", "--framing", f11, "--word", "P(2;x1)")
    assert code == 2 and "point-push" in err.lower()


def test_act_word_syntax_error(capsys, f2):
    code, _, err = run_cli(capsys, "act", "--framing", f2, "--word", "Q(nope)")
    assert code == 2


def test_match_command(capsys, tmp_path, f11):
    target = write_json(
        tmp_path, "target.json",
        {"g": 2, "kappa": [1, 1], "wind_x": [2, 0], "wind_y": [0, 0], "arc2": [-1]},
    )
    code, out, _ = run_cli(capsys, "match", f11, target)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1 and data["moves"][0]["move"] == "connect-sum"
    mism = write_json(
        tmp_path, "mism.json",
        {"g": 2, "kappa": [1, 1], "wind_x": [1, 0], "wind_y": [0, 0], "arc2": [-1]},
    )
    code, _, _ = run_cli(capsys, "match", f11, mism)
    assert code == 3


def test_stratum_command(capsys):
    code, out, _ = run_cli(capsys, "stratum", "2")
    assert code == 0
    data = json.loads(out)
    assert data["framing"]["g"] == 2 and data["report"]["regime"] == "even"
    code, out, _ = run_cli(capsys, "stratum", "1,1")
    data = json.loads(out)
    assert code == 0 and data["report"]["regime"] == "odd"
    code, out, _ = run_cli(capsys, "stratum", "3,1")
    data = json.loads(out)
    assert code == 0 and data["framing"]["g"] == 3 and data["report"]["regime"] == "odd"
    code, _, _ = run_cli(capsys, "stratum", "1,2")
    assert code == 2
    code, _, _ = run_cli(capsys, "stratum", "0,4")
    assert code == 2


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "parity", "--trials", "40", "--seed", "1")
    assert code == 0 and "PASS parity/parity-oracle" in out


def test_verify_json_flag(capsys):
    code, out, _ = run_cli(capsys, "--json", "verify", "moves", "--trials", "20")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["suites"][0]["suite"] == "moves"


def test_verify_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "unknown-suite"])
    assert exc.value.code == 2


def test_json_roundtrip():
    spec = SurfaceSpec(2, (1, 1))
    f = Framing(spec, (1, -2), (0, 3), (5,))
    assert cli.framing_from_dict(cli.framing_to_dict(f)) == f
    f1 = Framing(SurfaceSpec(3, (4,)), (0, 1, 2), (3, 4, 5))
    assert cli.framing_from_dict(cli.framing_to_dict(f1)) == f1
    a = PAutElem(2, 2, identity_mat(4), ((1,), (0,), (-2,), (0,)))
    b = cli.paut_from_dict(cli.paut_to_dict(a))
    assert a.S == b.S and a.M == b.M and (a.g, a.n) == (b.g, b.n)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "framedhom.cli", "stratum", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["regime"] == "even"
