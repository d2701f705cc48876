"""Registry rows, schemas, pole retries and report serialization."""
import json

import pytest

from bcbailey.identities import BY_ID, MODES, REGISTRY, SchemaError, get_entry, grid_points, run_check, run_row
from bcbailey.identities import registry
from bcbailey.identities.common import Outcome
from bcbailey.qfact import PoleError
from bcbailey.report import FAIL, PASS, POLE, Report
from bcbailey.scalar import EqVerdict

JSON_FIELDS = {"id", "params", "mode", "order", "verdict", "witness", "seed", "wall_ms"}

# rows cheap enough to run every default point here; the rest run once at their first point
CHEAP = {"jtp", "rr-classical", "gis", "rs-1dim-bilateral", "macd-c1", "macd-bc1", "qbinom-thm", "schur-alt",
         "watson-1dim", "m-inverse", "degree-formula"}


def test_registry_ids_unique_and_modes_known():
    assert len(BY_ID) == len(REGISTRY)
    for e in REGISTRY:
        assert e.modes and set(e.modes) <= set(MODES)
        assert e.grid, e.id
        for pt in e.grid:
            registry.validate(e, pt, pt.get("mode", e.mode))


@pytest.mark.parametrize("entry_id", sorted(CHEAP))
def test_cheap_rows_pass_whole_grid(entry_id):
    reps = run_row(entry_id)
    assert reps and all(r.verdict == PASS for r in reps), [r.line() for r in reps if not r.passed]


@pytest.mark.parametrize("entry_id", sorted(set(BY_ID) - CHEAP))
def test_every_row_runs_at_one_point(entry_id):
    e = get_entry(entry_id)
    pt = dict(e.grid[0])
    small = {}
    if pt.get("mode", e.mode) == "qseries":
        small["order"] = min(e.order, 10)
    rep = run_check(entry_id, pt, seed=3, trials=1, **small)
    assert rep.verdict == PASS, (rep.line(), rep.witness)


def test_unknown_row():
    with pytest.raises(SchemaError):
        get_entry("no-such-row")
    with pytest.raises(SchemaError):
        run_row("no-such-row")


def test_schema_rejects_out_of_range_and_unknown_params():
    with pytest.raises(SchemaError):
        run_check("gis", {"delta": 99})
    with pytest.raises(SchemaError):
        run_check("gis", {"n": 1})
    with pytest.raises(SchemaError):
        run_check("gis", {"delta": 1.0})
    with pytest.raises(SchemaError):
        run_check("gis", {"delta": 1, "mode": "float"})
    with pytest.raises(SchemaError):
        run_row("6phi5", {"delta": 1})


def test_grid_overrides_deduplicate():
    pts = grid_points(get_entry("6phi5"), {"n": 2})
    assert pts == [{"n": 2, "k": k, "mode": "exact"} for k in (1, 2, 3)]
    pts = grid_points(get_entry("rs-bc"), None, "float")
    assert pts == [{"n": 2, "mode": "float"}]


def test_report_json_fields_exact():
    rep = run_check("rr-classical", {"delta": 0}, order=10)
    d = rep.to_json()
    assert set(d) == JSON_FIELDS
    assert d["verdict"] == "pass" and d["order"] == 10 and d["params"] == {"delta": 0}
    json.dumps(d)
    assert "ms" not in rep.line()


def test_report_needs_witness_on_failure():
    with pytest.raises(ValueError):
        Report("x", {}, "exact", None, FAIL)
    with pytest.raises(ValueError):
        Report("x", {}, "exact", None, "maybe")


def test_failing_checker_gives_witness(monkeypatch):
    def bad(p, order, rng):
        return Outcome(EqVerdict(False, 6, 1, 2), "side", {"x": 1})
    monkeypatch.setattr(BY_ID["gis"], "fn", bad)
    rep = run_check("gis", {"delta": 0}, order=5)
    assert rep.verdict == FAIL
    # sqrtq exponent 6 is q^3
    assert rep.witness["exponent"] == 3 and rep.witness["label"] == "side"
    assert rep.witness["point"] == {"x": 1}


def test_pole_retries(monkeypatch):
    calls = []

    def always_pole(p, order, rng):
        calls.append(1)
        raise PoleError("pole")
    monkeypatch.setattr(BY_ID["6phi5"], "fn", always_pole)
    rep = run_check("6phi5", {"n": 1, "k": 1}, trials=2)
    assert rep.verdict == POLE
    assert len(calls) == registry.POLE_RETRIES + 1


def test_pole_then_success(monkeypatch):
    state = {"n": 0}
    real = BY_ID["6phi5"].fn

    def flaky(p, order, rng):
        state["n"] += 1
        if state["n"] % 3:
            raise ZeroDivisionError
        return real(p, order, rng)
    monkeypatch.setattr(BY_ID["6phi5"], "fn", flaky)
    assert run_check("6phi5", {"n": 1, "k": 1}, trials=2).verdict == PASS


def test_seeded_runs_are_reproducible():
    a = run_check("watson-bc", {"n": 1, "k": 1}, seed=11, trials=2)
    b = run_check("watson-bc", {"n": 1, "k": 1}, seed=11, trials=2)
    assert {**a.to_json(), "wall_ms": 0} == {**b.to_json(), "wall_ms": 0}


@pytest.mark.parametrize("bigN", [1, 2])
def test_gen_watson_matches_one_and_two_step_forms(bigN):
    # the checker compares against the 6phi5 sum (N=1) and Watson (N=2) at the same point
    rep = run_check("gen-watson", {"bigN": bigN, "n": 2, "k": 2}, seed=5, trials=3)
    assert rep.verdict == PASS


def test_random_rows_honour_trials(monkeypatch):
    seen = []
    real = BY_ID["m-inverse"].fn

    def count(p, order, rng):
        seen.append(1)
        return real(p, order, rng)
    monkeypatch.setattr(BY_ID["m-inverse"], "fn", count)
    run_check("m-inverse", {"n": 1, "k": 1}, trials=4)
    assert len(seen) == 4
    seen.clear()

    # fixed-point modes run once whatever the trial count
    def stub(p, order, rng):
        seen.append(1)
        return Outcome(EqVerdict(True))
    monkeypatch.setattr(BY_ID["rs-1dim"], "fn", stub)
    run_check("rs-1dim", {"delta": 0}, order=5, trials=4)
    assert len(seen) == 1
