"""Acceptance criteria 1-11, each at its stated sizes, tolerances and time budget.

Every test prints one ``criterion N: PASS|FAIL`` line with its wall time, so
``pytest -v -s tests/test_acceptance.py`` gives a compact summary.
"""
import time
from contextlib import contextmanager

import pytest

from bcbailey import cli
from bcbailey.identities import REGISTRY, euler, rr_product, run_check, run_row
from bcbailey.identities import multiple
from bcbailey.identities.qseries import gis_lhs

from oracles import as_q_list, bilateral_pentagonal, parts_mod


@contextmanager
def criterion(num, budget_s, capsys):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget_s, f"took {elapsed:.1f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        with capsys.disabled():
            print(f"\ncriterion {num}: {status} ({elapsed:.1f}s, budget {budget_s}s)")


def _all_pass(reports):
    bad = [(r.line(), r.witness) for r in reports if not r.passed]
    assert not bad, bad
    return reports


def test_criterion_01_classical_series(capsys):
    with criterion(1, 4, capsys):
        for entry_id, params in [("jtp", {"e2": e}) for e in (0, 1, 2)] + \
                [("rr-classical", {"delta": d}) for d in (0, 1)] + \
                [("gis", {"delta": d}) for d in range(-2, 7)] + \
                [("rs-1dim-bilateral", {"delta": d}) for d in (0, 1)]:
            t0 = time.perf_counter()
            rep = run_check(entry_id, params, order=40)
            assert rep.passed, (rep.line(), rep.witness)
            assert time.perf_counter() - t0 < 1.0, entry_id
        rep = run_check("rr-classical", {"delta": 0}, order=40)
        assert "q4=2" in rep.notes
        assert gis_lhs(0, 8).coeff(8) == parts_mod(4, 5, (1, 4))[4] == 2


def test_criterion_02_six_phi_five(capsys):
    with criterion(2, 30, capsys):
        reps = _all_pass(run_row("6phi5", trials=5))
        assert sorted((r.params["n"], r.params["k"]) for r in reps) == [(n, k) for n in (1, 2, 3) for k in (1, 2, 3)]


def test_criterion_03_watson(capsys):
    with criterion(3, 120, capsys):
        reps = _all_pass(run_row("watson-bc", trials=5))
        assert sorted((r.params["n"], r.params["k"]) for r in reps) == [(n, k) for n in (1, 2) for k in (1, 2)]
        # N=3, plus N=1 and N=2 against the one- and two-step forms at the same drawn points
        for bigN in (1, 2, 3):
            rep = run_check("gen-watson", {"bigN": bigN, "n": 2, "k": 2}, trials=3)
            assert rep.passed, (rep.line(), rep.witness)


def test_criterion_04_elliptic_tier(capsys):
    with criterion(4, 180, capsys):
        for entry_id in ("cocycle", "key-lemma", "elliptic-shifts-omega", "elliptic-shifts-m", "w-jackson"):
            reps = _all_pass(run_row(entry_id, {"k": 2}, order=2, trials=3, mode="pseries"))
            assert all(r.order == 2 and r.mode == "pseries" for r in reps)


def test_criterion_05_m_inverse(capsys):
    with criterion(5, 30, capsys):
        rep = run_check("m-inverse", {"n": 2, "k": 2}, trials=5)
        assert rep.passed, (rep.line(), rep.witness)


def test_criterion_06_rs_bc(capsys):
    with criterion(6, 120, capsys):
        reps = _all_pass(run_row("rs-bc", order=30, mode="qseries"))
        assert sorted((r.params["n"], r.params["k"], r.params["m"]) for r in reps) == \
            [(n, k, m) for n in (1, 2, 3) for k in (0, 1) for m in (0, 1, 2)]
        lhs, rhs = multiple.rs_bc_float(2, 0.2, 0.37, -0.29)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))
        _all_pass(run_row("rs-bc", {"n": 2}, mode="float", trials=3))


def test_criterion_07_rogers_ramanujan(capsys):
    with criterion(7, 120, capsys):
        _all_pass(run_row("rr-dn", order=40))
        _all_pass(run_row("rr-bn", order=40))
        for d in (0, 1):
            assert (multiple.rr_orthant_sum(1, d, 80) - rr_product(d, 80)).truncate(80).is_zero()
        _all_pass(run_row("rr-det-dn", order=25))
        _all_pass(run_row("rr-det-bn", order=25))


def test_criterion_08_pentagonal(capsys):
    with criterion(8, 120, capsys):
        reps = _all_pass(run_row("epnt-family", {"m": 0}, order=40))
        assert {(r.params["n"], r.params["k"]) for r in reps} >= {(n, k) for n in (1, 2, 3) for k in (0, 1, 2)}
        pent = bilateral_pentagonal(40)
        for k in range(4):
            assert as_q_list(multiple.epnt_rhs(1, k, 80), 40) == pent
            assert as_q_list(multiple.epnt_lhs(1, k, 80), 40) == pent
        assert as_q_list(euler(80), 40) == pent
        _all_pass(run_row("epnt-det-k1", order=40))


def _doubled(fn, cert, n, order):
    T = cert.radius(n, order)
    return (fn(None) - fn(2 * max(T, 1))).truncate(order)


def test_criterion_09_radius_doubling(capsys):
    order = 80  # q^40 in sqrtq units
    with criterion(9, 300, capsys):
        for n in (1, 2, 3):
            for d in (0, 1):
                diff = _doubled(lambda r: multiple.rr_orthant_sum(n, d, order, r),
                                multiple._orthant_cert(n, 1, d), n, order)
                assert diff.is_zero(), ("rr-dn orthant", n, d)
                diff = _doubled(lambda r: multiple.rr_multilateral(n, d, order, r),
                                multiple._spec_bilateral_cert(n, 1, d), n, order)
                assert diff.is_zero(), ("rr-dn multilateral", n, d)
        for n, k in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]:
            diff = _doubled(lambda r: multiple.epnt_rhs(n, k, order, 0, r), multiple.epnt_cert(n, k), n, order)
            assert diff.is_zero(), ("epnt", n, k)


def test_criterion_10_symmetry_and_macdonald(capsys):
    with criterion(10, 60, capsys):
        _all_pass(run_row("hyperoctahedral", {"n": 2}, order=20))
        for entry_id in ("macd-cn-spec", "macd-bn-minus"):
            _all_pass(run_row(entry_id, {"n": 2}, order=20))
        for entry_id in ("macd-c1", "macd-bc1"):
            _all_pass(run_row(entry_id, order=20))


@pytest.mark.slow
def test_criterion_11_verify_all(capsys):
    with criterion(11, 15 * 60, capsys):
        code = cli.main(["verify", "--all", "--workers", "4"])
        out = capsys.readouterr().out
        assert code == cli.EXIT_PASS, out[-2000:]
        lines = [ln for ln in out.splitlines() if ln[:4] in ("PASS", "FAIL", "POLE")]
        assert {ln.split()[1] for ln in lines} == {e.id for e in REGISTRY}
