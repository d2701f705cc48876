"""The command-line front end: exit codes, output determinism, expand tables, chains."""
import json
import subprocess
import sys

import pytest

from bcbailey import cli
from bcbailey.identities import BY_ID
from bcbailey.identities.common import Outcome
from bcbailey.identities.qseries import gis_lhs
from bcbailey.qfact import PoleError
from bcbailey.scalar import EqVerdict, load_csv

from oracles import as_q_list, parts_mod


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_pass(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--id", "rr-classical", "--json", str(path))
    assert code == cli.EXIT_PASS
    assert out.splitlines()[-1] == "2/2 passed"
    rows = json.loads(path.read_text())
    assert [r["params"] for r in rows] == [{"delta": 0}, {"delta": 1}]
    assert all(set(r) == {"id", "params", "mode", "order", "verdict", "witness", "seed", "wall_ms"} for r in rows)


def test_verify_with_overrides(capsys):
    code, out, _ = run(capsys, "verify", "--id", "6phi5", "--n", "1", "--k", "2", "--seed", "4")
    assert code == 0
    assert "PASS  6phi5 [exact] n=1 k=2" in out


def test_verify_fail_exit(capsys, monkeypatch):
    monkeypatch.setattr(BY_ID["gis"], "fn", lambda p, o, r: Outcome(EqVerdict(False, 4, 1, 0), "gis"))
    code, out, _ = run(capsys, "verify", "--id", "gis", "--delta", "0", "--order", "5")
    assert code == cli.EXIT_FAIL
    assert out.startswith("FAIL ") and "witness" in out


def test_verify_pole_exit(capsys, monkeypatch):
    def pole(p, o, r):
        raise PoleError("always")
    monkeypatch.setattr(BY_ID["6phi5"], "fn", pole)
    code, out, _ = run(capsys, "verify", "--id", "6phi5", "--n", "1", "--k", "1")
    assert code == cli.EXIT_POLE
    assert "pole-retry-exhausted" in out.lower()


def test_exit_code_priority():
    from bcbailey.report import Report
    ok = Report("a", {}, "exact", None, "pass")
    pole = Report("a", {}, "exact", None, "pole-retry-exhausted")
    bad = Report("a", {}, "exact", None, "fail", witness={})
    assert cli.exit_code([ok]) == 0
    assert cli.exit_code([ok, pole]) == 3
    assert cli.exit_code([pole, bad]) == 1


@pytest.mark.parametrize("argv,flag", [
    (["verify", "--id", "nope"], "--id"),
    (["verify", "--id", "gis", "--delta", "99"], "--delta"),
    (["verify", "--id", "gis", "--n", "1"], "--n"),
    (["verify", "--id", "gis", "--mode", "float"], "--mode"),
    (["verify", "--id", "gis", "--order", "-1"], "--order"),
    (["verify", "--all", "--n", "2"], "--n"),
    (["expand", "--expr", "nope-3", "--order", "5"], "--expr"),
    (["expand", "--expr", "rr-product-0", "--order", "-2"], "--order"),
    (["chain", "--steps", "5", "--n", "1", "--k", "1"], "--steps"),
    (["chain", "--steps", "1", "--n", "3", "--k", "1"], "--n"),
    (["chain", "--steps", "1", "--n", "1", "--k", "9"], "--k"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert flag in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])
    assert exc.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--id", "gis", "--all"])
    assert exc.value.code == cli.EXIT_USAGE


def test_stdout_is_deterministic(capsys):
    argv = ["verify", "--id", "watson-bc", "--seed", "9"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b


def test_expand_rr_product(capsys, tmp_path):
    path = tmp_path / "rr.csv"
    code, out, _ = run(capsys, "expand", "--expr", "rr-product-0", "--order", "25", "--csv", str(path))
    assert code == 0
    assert path.read_text() == out
    s = load_csv(out)
    assert as_q_list(s, 25) == parts_mod(25, 5, (1, 4))
    # exponents are sqrtq units and only even ones are written
    assert [int(r.split(",")[0]) for r in out.splitlines()] == list(range(0, 51, 2))


def test_expand_order_zero_is_one_row(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "rr-product-1", "--order", "0")
    assert code == 0 and out.splitlines() == ["0,1,1"]


def test_expand_pi_times_ratio_is_gis(capsys):
    _, out, _ = run(capsys, "expand", "--expr", "gis-rhs-3", "--order", "20")
    assert (load_csv(out) - gis_lhs(3, 40)).truncate(40).is_zero()


def test_expand_half_integer_theta(capsys):
    _, out, _ = run(capsys, "expand", "--expr", "theta-1/2-1", "--order", "3")
    rows = out.splitlines()
    assert [r.split(",")[0] for r in rows] == [str(e) for e in range(7)]


def test_expand_epnt_n1_is_euler(capsys):
    _, a, _ = run(capsys, "expand", "--expr", "epnt-lhs-1-2", "--order", "15")
    s = load_csv(a)
    assert [s.coeff(2 * k) for k in range(16)] == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]


@pytest.mark.parametrize("steps", [0, 1, 2])
def test_chain_steps(capsys, tmp_path, steps):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "chain", "--steps", str(steps), "--n", "2", "--k", "2", "--json", str(path))
    assert code == 0
    rows = json.loads(path.read_text())
    assert [r["params"]["step"] for r in rows] == list(range(steps + 1))
    assert all(r["verdict"] == "pass" and r["beta"] for r in rows)
    # the unit pair: beta is 1 at the empty partition and 0 elsewhere
    b0 = rows[0]["beta"]
    assert sorted(b0.values()) == [0] * (len(b0) - 1) + [1]
    assert "beta" in out


def test_chain_is_reproducible(capsys):
    a = run(capsys, "chain", "--steps", "2", "--n", "1", "--k", "3", "--seed", "1")
    b = run(capsys, "chain", "--steps", "2", "--n", "1", "--k", "3", "--seed", "1")
    assert a == b


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bcbailey.cli", "verify", "--id", "qbinom-thm", "--delta", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip().endswith("1/1 passed")
