"""The identity registry: one row per identity, each with a schema and a default grid.

``run_check`` evaluates a row at one parameter point and turns the checker's
:class:`Outcome` into a :class:`~bcbailey.report.Report`.  ``run_row`` walks a
row's default grid (with optional overrides), and ``run_all`` runs every row
in a process pool, returning reports in registry order.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from ..qfact import PoleError
from ..report import FAIL, PASS, POLE, Report, stopwatch, witness
from . import classical, hyperoctahedral, matrix_rows, multiple
from .common import Outcome

MODES = ("exact", "qseries", "pseries", "float")
# the checkers' own spelling of the modes
_CHECKER_MODE = {"exact": "exact", "qseries": "q-series", "pseries": "p-series", "float": "float"}
POLE_RETRIES = 20


class SchemaError(ValueError):
    """Parameters outside a row's schema, or an unknown row."""


@dataclass
class IdentityEntry:
    """A registry row.

    ``schema`` maps each accepted parameter to its allowed range (inclusive
    ``(lo, hi)``).  ``grid`` lists the default points; a point may carry its
    own ``mode``.  ``order`` is the default series order in powers of ``q``
    (``None`` for exact rows); p-series rows read it as the p-order.
    ``random`` rows draw rational points and honour ``trials``, except in
    ``fixed_modes`` where the point is fully determined by the parameters.
    """

    id: str
    fn: Callable
    modes: tuple
    schema: dict
    grid: list
    order: int | None = None
    trials: int = 1
    random: bool = False
    fixed_modes: tuple = ()
    summary: str = ""
    extra_params: dict = field(default_factory=dict)

    @property
    def mode(self) -> str:
        return self.modes[0]


def _grid(**axes) -> list:
    keys = list(axes)
    return [dict(zip(keys, vals)) for vals in product(*(axes[k] for k in keys))]


def _with(points, **fixed) -> list:
    return [{**p, **fixed} for p in points]


N3 = {"n": (1, 3)}


def _registry() -> list:
    E = IdentityEntry
    rows = [
        E("jtp", classical.check_jtp, ("qseries",), {"e2": (0, 2)}, _grid(e2=[0, 1, 2]), 40, random=True,
          summary="Jacobi triple product"),
        E("rr-classical", classical.check_rr_classical, ("qseries",), {"delta": (0, 1)}, _grid(delta=[0, 1]), 40,
          summary="Rogers-Ramanujan sums against their products"),
        E("gis", classical.check_gis, ("qseries",), {"delta": (-2, 8)}, _grid(delta=list(range(-2, 7))), 40,
          summary="generalized Rogers-Ramanujan identity with Schur polynomials"),
        E("rs-1dim", classical.check_rs_1dim, ("qseries", "float"), {"delta": (0, 3)},
          _grid(delta=[0, 1, 2]) + [{"mode": "float"}], 30, trials=3, random=True, fixed_modes=("qseries",),
          summary="one-variable Rogers-Selberg identity"),
        E("rs-1dim-bilateral", classical.check_rs_bilateral, ("qseries",), {"delta": (0, 1)}, _grid(delta=[0, 1]),
          40, summary="Rogers-Selberg identity as a bilateral sum"),
        E("macd-c1", classical.check_macd_c1, ("qseries",), {"delta": (0, 1), "mu": (0, 3), "m": (0, 3)},
          _grid(delta=[0, 1], mu=[0, 1], m=[0, 1, 2]), 20, summary="C_1 Macdonald-type sum equals 1"),
        E("macd-bc1", classical.check_macd_bc1, ("qseries",), {"delta": (0, 1), "m": (0, 3)},
          _grid(delta=[0, 1], m=[0, 1, 2]), 20, summary="BC_1 Macdonald-type sum equals 1"),
        E("qbinom-thm", classical.check_qbinom_theorem, ("exact",), {"delta": (0, 10)},
          _grid(delta=list(range(0, 7))), summary="terminating q-binomial theorem"),
        E("schur-alt", classical.check_schur_alt, ("exact",), {"delta": (2, 10)}, _grid(delta=list(range(2, 9))),
          summary="Schur polynomials against their binomial sums"),
        E("cocycle", matrix_rows.check_omega_cocycle, ("exact", "pseries"), {"n": (1, 3), "k": (1, 2)},
          _grid(n=[1, 2], k=[2]) + _with(_grid(n=[1, 2], k=[2]), mode="pseries"), 2, trials=3, random=True,
          summary="cocycle identity of the Jackson coefficients"),
        E("key-lemma", matrix_rows.check_key_lemma, ("exact", "pseries"), {"n": (1, 3), "k": (1, 2)},
          _grid(n=[1, 2], k=[2]) + _with(_grid(n=[1, 2], k=[2]), mode="pseries"), 2, trials=3, random=True,
          summary="conjugation of M by S across parameters"),
        E("m-inverse", matrix_rows.check_m_inverse, ("exact",), {"n": (1, 3), "k": (1, 3)}, _grid(n=[2], k=[2]),
          trials=5, random=True, summary="M(b) and its closed-form inverse, M(a,b) M(b,a) = 1"),
        E("elliptic-shifts-omega", matrix_rows.check_elliptic_shifts_omega, ("pseries",),
          {"n": (1, 3), "k": (1, 2)}, _grid(n=[1, 2], k=[2]), 2, trials=3, random=True,
          summary="p-shifts of the Jackson coefficients"),
        E("elliptic-shifts-m", matrix_rows.check_elliptic_shifts_m, ("pseries",), {"n": (1, 3), "k": (1, 2)},
          _grid(n=[1, 2], k=[2]), 2, trials=3, random=True, summary="p-shifts of M(a,b)"),
        E("w-jackson", matrix_rows.check_w_jackson, ("pseries", "exact"), {"n": (1, 3), "k": (1, 2)},
          _grid(n=[1, 2], k=[2]), 2, trials=3, random=True, summary="W-Jackson sum"),
        E("degree-formula", matrix_rows.check_degree_formula, ("exact",), {"n": (1, 3), "k": (1, 3)},
          _grid(n=[1, 2, 3], k=[2]), trials=3, random=True, summary="Weyl degree formula for W at t^delta"),
        E("6phi5", matrix_rows.check_6phi5, ("exact",), {"n": (1, 3), "k": (0, 3)},
          _grid(n=[1, 2, 3], k=[1, 2, 3]), trials=5, random=True, summary="terminating 6phi5 summation"),
        E("watson-bc", matrix_rows.check_watson_bc, ("exact",), {"n": (1, 2), "k": (0, 2)},
          _grid(n=[1, 2], k=[1, 2]), trials=5, random=True, summary="BC_n Watson transformation"),
        E("watson-1dim", matrix_rows.check_watson_1dim, ("exact",), {"bigN": (0, 6)}, _grid(bigN=[1, 2, 3, 4]),
          trials=5, random=True, summary="one-variable Watson transformation"),
        E("gen-watson", matrix_rows.check_gen_watson, ("exact",), {"bigN": (1, 3), "n": (1, 2), "k": (0, 2)},
          _grid(bigN=[1, 2, 3], n=[2], k=[2]), trials=3, random=True,
          summary="generalized Watson transformation; N = 1, 2 against 6phi5 and Watson"),
        E("hyperoctahedral", hyperoctahedral.check_hyperoctahedral, ("qseries",),
          {"n": (1, 3), "k": (0, 2), "m": (0, 2)}, _grid(n=[2], k=[1, 2], m=[0, 1]), 20, random=True,
          summary="signed-permutation symmetry of M(b) and S(b) product forms"),
        E("rs-bc", multiple.check_rs_bc, ("qseries", "float"), {"n": (1, 3), "k": (0, 2), "m": (0, 3)},
          _grid(n=[1, 2, 3], k=[0, 1], m=[0, 1, 2]) + _with(_grid(n=[2]), mode="float"), 30, trials=3,
          random=True, fixed_modes=("qseries",), summary="BC_n Rogers-Selberg identity"),
        E("rs-specialized", multiple.check_rs_specialized, ("qseries",), {"n": (1, 3), "k": (0, 2), "m": (0, 2)},
          _grid(n=[1, 2], k=[0, 1, 2], m=[0, 1, 2]) + _grid(n=[3], k=[0, 1], m=[0, 1]), 20,
          summary="specialized Rogers-Selberg: partition, orthant and multilateral sums"),
        E("macd-cn-spec", multiple.check_macd_cn_spec, ("qseries",), {"n": (1, 3), "k": (0, 2), "m": (0, 3)},
          _grid(n=[2], k=[0, 1, 2], m=[1, 2]), 20, summary="C_n Weyl-group sum at q-power points equals 1"),
        E("macd-bn-minus", multiple.check_macd_bn_minus, ("qseries",), {"n": (1, 3), "k": (0, 2), "m": (0, 3)},
          _grid(n=[2], k=[0, 1, 2], m=[0]), 20, summary="B_n Weyl-group sum with 1 + x^-1 factors equals 1"),
        E("rr-trivial-k0", multiple.check_rr_trivial_k0, ("qseries",), {"n": (1, 3), "m": (0, 2)},
          _grid(n=[1, 2, 3], m=[0, 1, 2]), 40, summary="k = 0 collapse to n-th powers"),
        E("rr-dn", multiple.check_rr_dn, ("qseries",), {"n": (1, 3), "delta": (0, 1)},
          _grid(n=[1, 2, 3], delta=[0, 1]), 40, summary="D_n Rogers-Ramanujan identities"),
        E("rr-bn", multiple.check_rr_bn, ("qseries",), N3, _grid(n=[1, 2, 3]), 40,
          summary="B_n Rogers-Ramanujan identity"),
        E("rr-det-dn", multiple.check_rr_det, ("qseries",), {"n": (1, 3), "delta": (0, 1)},
          _grid(n=[1, 2, 3], delta=[0, 1]), 25, extra_params={"variant": "dn"},
          summary="Toeplitz determinant of pi values against a D_n theta determinant"),
        E("rr-det-bn", multiple.check_rr_det, ("qseries",), N3, _grid(n=[1, 2, 3]), 25,
          extra_params={"variant": "bn"}, summary="Toeplitz determinant of pi values against a B_n theta determinant"),
        E("epnt-family", multiple.check_epnt_family, ("qseries",), {"n": (1, 3), "k": (0, 2), "m": (0, 2)},
          _grid(n=[1, 2, 3], k=[0, 1, 2]) + _grid(n=[2], k=[1, 2], m=[1, 2]), 40,
          summary="D_n pentagonal number theorems"),
        E("epnt-6phi5-limit", multiple.check_epnt_6phi5_limit, ("qseries", "float"),
          {"n": (1, 3), "k": (0, 2), "m": (0, 2)},
          _grid(n=[1, 2], k=[0, 1, 2], m=[0, 1]) + _with(_grid(n=[2]), mode="float"), 30, random=True,
          summary="limiting 6phi5 expansion of (qb)_oo^n"),
        E("epnt-det-k1", multiple.check_epnt_det_k1, ("qseries",), N3, _grid(n=[1, 2, 3]), 40,
          summary="k = 1 pentagonal identity as a theta determinant"),
        E("weyl-denominator", multiple.check_weyl_denominator, ("qseries",), {"n": (1, 3)}, _grid(n=[2, 3]), 20,
          random=True, summary="Weyl denominator sums for A, B, C, D and the Macdonald form"),
    ]
    ids = [r.id for r in rows]
    assert len(ids) == len(set(ids)), "duplicate registry id"
    return rows


REGISTRY: list = _registry()
BY_ID: dict = {r.id: r for r in REGISTRY}


def get_entry(entry_id: str) -> IdentityEntry:
    try:
        return BY_ID[entry_id]
    except KeyError:
        raise SchemaError(f"unknown identity id {entry_id!r}") from None


def validate(entry: IdentityEntry, params: dict, mode: str | None = None):
    for k, v in params.items():
        if k == "mode":
            continue
        if k not in entry.schema:
            raise SchemaError(f"{entry.id} takes no parameter {k!r}")
        lo, hi = entry.schema[k]
        if not isinstance(v, int) or not lo <= v <= hi:
            raise SchemaError(f"{entry.id}: {k}={v!r} outside [{lo}, {hi}]")
    if mode is not None and mode not in entry.modes:
        raise SchemaError(f"{entry.id} does not run in mode {mode!r} (modes: {', '.join(entry.modes)})")


def _checker_params(entry: IdentityEntry, params: dict, mode: str) -> dict:
    p = dict(entry.extra_params)
    for k, v in params.items():
        if k == "mode":
            continue
        p["N" if k == "bigN" else k] = v
    p["mode"] = _CHECKER_MODE[mode]
    return p


def _checker_order(entry: IdentityEntry, mode: str, order: int | None):
    o = entry.order if order is None else order
    if mode == "qseries":
        return 2 * o  # the checkers work in sqrtq
    if mode == "pseries":
        return o
    return None


def _witness(out: Outcome, mode: str) -> dict:
    v = out.verdict
    exp = v.exponent
    if exp is not None and mode == "qseries":
        exp = Fraction(exp, 2)
    w = witness(exp, v.lhs, v.rhs)
    if out.label:
        w["label"] = out.label
    if "entry" in out.extra:
        w["entry"] = out.extra["entry"]
    return w


def run_check(entry_id: str, params: dict | None = None, order: int | None = None, seed: int = 0,
              trials: int | None = None) -> Report:
    """Evaluate one row at one parameter point.

    ``order`` is in powers of ``q`` (or of ``p`` for p-series).  Rows with
    random points run ``trials`` independent draws from ``random.Random(seed)``;
    a draw that hits a pole is replaced, and after ``POLE_RETRIES`` replacements
    in a row the verdict is ``pole-retry-exhausted``.
    """
    entry = get_entry(entry_id)
    params = dict(params or {})
    mode = params.pop("mode", None) or entry.mode
    validate(entry, params, mode)
    rng = random.Random(seed)
    o = _checker_order(entry, mode, order)
    cp = _checker_params(entry, params, mode)
    if mode == "pseries":
        cp["p_order"] = o
    n_trials = (trials or entry.trials) if entry.random and mode not in entry.fixed_modes else 1
    shown_order = (entry.order if order is None else order) if mode in ("qseries", "pseries") else None
    notes: list = []
    verdict, wit = PASS, None
    with stopwatch() as sw:
        for _ in range(n_trials):
            for attempt in range(POLE_RETRIES + 1):
                try:
                    out = entry.fn(cp, o, rng)
                    break
                except (PoleError, ZeroDivisionError):
                    if attempt == POLE_RETRIES:
                        out = None
            if out is None:
                verdict = POLE
                notes.append(f"{POLE_RETRIES} consecutive pole draws")
                break
            for k, v in out.extra.items():
                if k != "entry":
                    notes.append(f"{k}={v}")
            if not out.passed:
                verdict, wit = FAIL, _witness(out, mode)
                wit["point"] = out.point
                break
    return Report(entry.id, params, mode, shown_order, verdict, wit, seed, sw[0], notes)


def grid_points(entry: IdentityEntry, overrides: dict | None = None, mode: str | None = None) -> list:
    """The row's default points with ``overrides`` applied, deduplicated, in grid order.

    With ``mode`` given only the points that run in that mode are kept; a row
    whose grid has none of them gets the overrides as a single point.
    """
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    out = []
    for g in entry.grid:
        gm = g.get("mode", entry.mode)
        if mode is not None and gm != mode:
            continue
        pt = {k: v for k, v in g.items() if k != "mode"}
        pt.update({k: v for k, v in overrides.items() if k in entry.schema})
        pt["mode"] = gm
        if pt not in out:
            out.append(pt)
    if not out:
        out.append({**{k: v for k, v in overrides.items() if k in entry.schema}, "mode": mode or entry.mode})
    return out


def run_row(entry_id: str, overrides: dict | None = None, order: int | None = None, seed: int = 0,
            trials: int | None = None, mode: str | None = None) -> list:
    entry = get_entry(entry_id)
    bad = [k for k in (overrides or {}) if (overrides or {})[k] is not None and k not in entry.schema]
    if bad:
        raise SchemaError(f"{entry_id} takes no parameter {bad[0]!r}")
    if mode is not None and mode not in entry.modes:
        raise SchemaError(f"{entry_id} does not run in mode {mode!r} (modes: {', '.join(entry.modes)})")
    return [run_check(entry_id, pt, order, seed, trials) for pt in grid_points(entry, overrides, mode)]


def _run_row_args(args):
    entry_id, seed = args
    return run_row(entry_id, seed=seed)


def run_all(seed: int = 0, workers: int | None = None) -> list:
    """Every row's default grid, rows in parallel, reports in registry order."""
    ids = [r.id for r in REGISTRY]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_row_args, [(i, seed) for i in ids]))
    assert len(results) == len(REGISTRY), "--all must cover every registry row"
    return [rep for row in results for rep in row]


__all__ = [
    "IdentityEntry", "REGISTRY", "BY_ID", "MODES", "SchemaError", "get_entry", "validate", "run_check",
    "grid_points", "run_row", "run_all",
]
