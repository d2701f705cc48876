"""Command-line front end: ``verify``, ``expand`` and ``chain``.

Exit codes depend only on verdicts: 0 when everything passes, 1 when some
check fails, 2 for usage and schema errors, 3 when a check ran out of pole
retries.  Standard output carries no timings, so repeated runs with the same
seed print the same bytes.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from .bailey import bailey_step_one, unit_pair
from .identities import registry
from .identities.common import rand_rat
from .identities.matrix_rows import gen_watson_sides, make_ctx, sfs_sides, watson_sides
from .identities.multiple import epnt_lhs
from .identities.qseries import gis_rhs, pi_k, rr_product, theta
from .partitions import format_partition
from .report import FAIL, PASS, POLE, Report, jsonable, stopwatch, witness
from .scalar import dump_csv

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3

# verify flag -> registry parameter name
PARAM_FLAGS = {"n": "n", "k": "k", "m": "m", "delta": "delta", "bigN": "bigN"}

CHAIN_MAX_STEPS = 4
CHAIN_BOX = (2, 3)


class UsageError(Exception):
    def __init__(self, flag: str, msg: str):
        super().__init__(f"{flag}: {msg}")
        self.flag = flag


def exit_code(reports) -> int:
    verdicts = {r.verdict for r in reports}
    if FAIL in verdicts:
        return EXIT_FAIL
    if POLE in verdicts:
        return EXIT_POLE
    return EXIT_PASS


def _write_json(path: str, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def _emit(reports, json_path) -> int:
    for r in reports:
        print(r.line())
        if r.witness is not None:
            print(f"      witness: {json.dumps(jsonable(r.witness))}")
        for note in r.notes:
            print(f"      note: {note}")
    n_pass = sum(r.passed for r in reports)
    print(f"{n_pass}/{len(reports)} passed")
    if json_path:
        _write_json(json_path, [r.to_json() for r in reports])
    return exit_code(reports)


# -- verify ---------------------------------------------------------------------------


def _overrides(args, entry) -> dict:
    out = {}
    for flag, key in PARAM_FLAGS.items():
        v = getattr(args, flag)
        if v is None:
            continue
        if key not in entry.schema:
            raise UsageError(f"--{flag}", f"{entry.id} takes no such parameter")
        lo, hi = entry.schema[key]
        if not lo <= v <= hi:
            raise UsageError(f"--{flag}", f"{v} outside [{lo}, {hi}] for {entry.id}")
        out[key] = v
    return out


def cmd_verify(args) -> int:
    if args.all:
        given = [f"--{f}" for f in (*PARAM_FLAGS, "order", "mode", "trials") if getattr(args, f) is not None]
        if given:
            raise UsageError(given[0], "not accepted with --all")
        reports = registry.run_all(args.seed, args.workers)
        return _emit(reports, args.json)
    try:
        entry = registry.get_entry(args.id)
    except registry.SchemaError as exc:
        raise UsageError("--id", str(exc)) from None
    if args.mode is not None and args.mode not in entry.modes:
        raise UsageError("--mode", f"{entry.id} runs in {', '.join(entry.modes)}")
    if args.order is not None and args.order < 0:
        raise UsageError("--order", "must be non-negative")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials", "must be positive")
    reports = registry.run_row(entry.id, _overrides(args, entry), args.order, args.seed, args.trials,
                               args.mode)
    return _emit(reports, args.json)


# -- expand ---------------------------------------------------------------------------

_INT = r"(-?\d+)"
BUILTINS = {
    "rr-product": (re.compile(rf"rr-product-{_INT}$"), "rr-product-<delta>, delta in 0..3"),
    "epnt-lhs": (re.compile(rf"epnt-lhs-{_INT}-{_INT}$"), "epnt-lhs-<n>-<k>, n >= 1, k >= 0"),
    "gis-rhs": (re.compile(rf"gis-rhs-{_INT}$"), "gis-rhs-<delta>"),
    "theta": (re.compile(r"theta-(-?\d+(?:/\d+)?)-(\d+)$"), "theta-<z>-<base>, z a half-integer"),
    "pi": (re.compile(rf"pi-{_INT}$"), "pi-<k>"),
}


def expand_expr(expr: str, order: int):
    """The builtin series ``expr`` truncated at ``q^order``."""
    o2 = 2 * order
    for name, (pat, _) in BUILTINS.items():
        m = pat.match(expr)
        if not m:
            continue
        g = m.groups()
        if name == "rr-product":
            d = int(g[0])
            if not 0 <= d <= 3:
                raise UsageError("--expr", "rr-product needs delta in 0..3")
            return rr_product(d, o2)
        if name == "epnt-lhs":
            n, k = int(g[0]), int(g[1])
            if n < 1:
                raise UsageError("--expr", "epnt-lhs needs n >= 1")
            return epnt_lhs(n, k, o2)
        if name == "gis-rhs":
            return gis_rhs(int(g[0]), o2)
        if name == "theta":
            z, base = Fraction(g[0]), int(g[1])
            if base < 1 or (2 * z).denominator != 1:
                raise UsageError("--expr", "theta needs base >= 1 and a half-integer z")
            if z % base == 0:
                raise UsageError("--expr", "theta vanishes identically when base divides z")
            return theta(z, base, o2)
        return pi_k(int(g[0]), o2)
    forms = "; ".join(h for _, h in BUILTINS.values())
    raise UsageError("--expr", f"unknown builtin {expr!r} (known: {forms})")


def cmd_expand(args) -> int:
    if args.order < 0:
        raise UsageError("--order", "must be non-negative")
    s = expand_expr(args.expr, args.order)
    stride = 1 if any(e % 2 for e in s.to_dict()) else 2
    text = dump_csv(s, 2 * args.order, stride)
    sys.stdout.write(text)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    return EXIT_PASS


# -- chain ----------------------------------------------------------------------------


def _chain_targets(step, lam, b, sig, rho, ctx):
    """Closed forms that ``beta`` must equal after ``step`` one-parameter steps."""
    alg = ctx.alg
    if step == 0:
        return [("unit", alg.one if lam == () else alg.zero)]
    nested, pre, wp = gen_watson_sides(lam, b, sig[:step], rho[:step], ctx)
    out = [("well-poised sum", wp), ("nested sum", alg.div(nested, pre))]
    if step == 1:
        out.append(("6phi5 product", sfs_sides(lam, b, sig[0], rho[0], ctx)[0]))
    elif step == 2:
        wpre, bal, _ = watson_sides(lam, b, sig[0], rho[0], sig[1], rho[1], ctx)
        out.append(("Watson balanced side", wpre * bal))
    return out


def run_chain(steps: int, n: int, k: int, seed: int = 0) -> list:
    """Reports for ``beta`` after 0..steps one-parameter steps from the unit pair.

    Parameters are drawn from ``random.Random(seed)``; a draw that hits a pole
    is replaced, and after the registry's retry budget the step reports a pole.
    """
    rng = random.Random(seed)
    box = (n, k)
    for _ in range(registry.POLE_RETRIES):
        ctx, mk, point = make_ctx(n, rng)
        names = ["b"] + [f"sigma{i}" for i in range(1, steps + 1)] + [f"rho{i}" for i in range(1, steps + 1)]
        raw = {nm: rand_rat(rng) for nm in names}
        point.update(raw)
        b = mk(raw["b"])
        sig = [mk(raw[f"sigma{i}"]) for i in range(1, steps + 1)]
        rho = [mk(raw[f"rho{i}"]) for i in range(1, steps + 1)]
        try:
            return _chain_reports(steps, n, k, box, b, sig, rho, ctx, point, seed)
        except ZeroDivisionError:  # includes PoleError
            continue
    return [Report("chain", {"n": n, "k": k, "step": s}, "exact", None, POLE, seed=seed)
            for s in range(steps + 1)]


def _chain_reports(steps, n, k, box, b, sig, rho, ctx, point, seed):
    reports = []
    pair = unit_pair(b, box, ctx)
    for step in range(steps + 1):
        with stopwatch() as ms:
            if step:
                pair = bailey_step_one(pair, sig[step - 1], rho[step - 1], b, box, ctx)
            bad = None
            ok, why = pair.check(box, ctx)
            if not ok:
                bad = ("pair relation", format_partition(why[0]), None, None)
            for lam in sorted(pair.beta, key=lambda x: (sum(x), x)):
                if bad:
                    break
                for label, want in _chain_targets(step, lam, b, sig, rho, ctx):
                    if pair.beta[lam] != want:
                        bad = (label, format_partition(lam), pair.beta[lam], want)
                        break
        params = {"n": n, "k": k, "step": step}
        rep = Report("chain", params, "exact", None, PASS if bad is None else FAIL, seed=seed, wall_ms=ms[0])
        if bad:
            rep.witness = witness(None, bad[2], bad[3])
            rep.witness.update({"label": bad[0], "lam": bad[1], "point": jsonable(point)})
        rep.beta = {format_partition(lam): pair.beta[lam] for lam in sorted(pair.beta, key=lambda x: (sum(x), x))}
        rep.notes.append("point " + json.dumps(jsonable(point)))
        reports.append(rep)
    return reports


def cmd_chain(args) -> int:
    if not 0 <= args.steps <= CHAIN_MAX_STEPS:
        raise UsageError("--steps", f"must be in 0..{CHAIN_MAX_STEPS}")
    if not 1 <= args.n <= CHAIN_BOX[0]:
        raise UsageError("--n", f"must be in 1..{CHAIN_BOX[0]}")
    if not 0 <= args.k <= CHAIN_BOX[1]:
        raise UsageError("--k", f"must be in 0..{CHAIN_BOX[1]}")
    reports = run_chain(args.steps, args.n, args.k, args.seed)
    for r in reports:
        print(r.line())
        for lam, v in getattr(r, "beta", {}).items():
            print(f"      beta{lam} = {jsonable(v)}")
        if r.witness is not None:
            print(f"      witness: {json.dumps(jsonable(r.witness))}")
    if reports and reports[0].notes:
        print(reports[0].notes[0])
    if args.json:
        rows = []
        for r in reports:
            row = r.to_json()
            row["beta"] = jsonable(getattr(r, "beta", {}))
            rows.append(row)
        _write_json(args.json, rows)
    return exit_code(reports)


# -- entry point ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bcbailey", description="Exact checks of BC_n Bailey-lemma identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run one registry row or all of them")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", help="registry row id")
    which.add_argument("--all", action="store_true", help="every row at its default grid")
    for flag in PARAM_FLAGS:
        v.add_argument(f"--{flag}", type=int)
    v.add_argument("--order", type=int, help="series order in powers of q (p-order in p-series mode)")
    v.add_argument("--mode", choices=registry.MODES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int)
    v.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1), help="pool size for --all")
    v.add_argument("--json", metavar="PATH")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="coefficient table of a builtin series")
    e.add_argument("--expr", required=True)
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--csv", metavar="PATH")
    e.set_defaults(func=cmd_expand)

    c = sub.add_parser("chain", help="iterate one-parameter Bailey steps from the unit pair")
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_chain)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bcbailey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except registry.SchemaError as exc:
        print(f"bcbailey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
