"""Bailey matrices, their conjugation by S, and Bailey-chain walks.

Matrices are indexed by the partitions of an ``n x k`` box and stored as
sparse lower-triangular dictionaries.  Entries live in the ring of the
context's algebra: exact rationals at ``p = 0``, truncated p-series in the
elliptic tier, or complex floats.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bcw import WContext, _pair_products, w_degenerate, w_principal, w_multi, principal_point
from .partitions import contains, n_conj, n_stat, normalize, pad, partitions_in_box, subpartitions, weight
from .qfact import PMono, PoleError
from .report import FAIL, PASS, Report, stopwatch, witness
from .scalar import EqVerdict, Series, close, series_eq


# -- ring helpers ----------------------------------------------------------------------


def is_zero(v) -> bool:
    z = getattr(v, "is_zero", None)
    return z() if callable(z) else v == 0


def same(x, y, order: int | None = None, rtol: float = 1e-9) -> EqVerdict:
    """Equality in whichever ring ``x`` and ``y`` live in."""
    if isinstance(x, Series) or isinstance(y, Series):
        var = x.var if isinstance(x, Series) else y.var
        xs = x if isinstance(x, Series) else Series.monomial(x, 0, var)
        ys = y if isinstance(y, Series) else Series.monomial(y, 0, var)
        return series_eq(xs, ys, order)
    if isinstance(x, (complex, float)) or isinstance(y, (complex, float)):
        ok = close(complex(x), complex(y), rtol=rtol, atol=rtol)
        return EqVerdict(ok, None if ok else 0, x, y)
    ok = x == y
    return EqVerdict(ok, None if ok else 0, x, y)


# -- partition-indexed matrices --------------------------------------------------------


class PartitionMatrix:
    """Sparse matrix over the partitions of a box; absent entries are zero."""

    def __init__(self, index: Sequence, entries: dict, zero=0):
        self.index = [normalize(lam) for lam in index]
        self.entries = {k: v for k, v in entries.items() if not is_zero(v)}
        self.zero = zero

    @classmethod
    def build(cls, index, f: Callable, zero=0, lower: bool = True) -> "PartitionMatrix":
        """Tabulate ``f(lam, mu)``; with ``lower`` only pairs ``mu ⊆ lam`` are visited."""
        ent = {}
        for lam in index:
            for mu in index:
                if lower and not contains(lam, mu):
                    continue
                ent[(lam, mu)] = f(lam, mu)
        return cls(index, ent, zero)

    @classmethod
    def diagonal(cls, index, f: Callable, zero=0) -> "PartitionMatrix":
        return cls(index, {(lam, lam): f(lam) for lam in index}, zero)

    @classmethod
    def identity(cls, index, one=1, zero=0) -> "PartitionMatrix":
        return cls.diagonal(index, lambda lam: one, zero)

    def __getitem__(self, key):
        lam, mu = key
        return self.entries.get((normalize(lam), normalize(mu)), self.zero)

    def __matmul__(self, other: "PartitionMatrix") -> "PartitionMatrix":
        cols: dict = {}
        for (nu, mu), v in other.entries.items():
            cols.setdefault(nu, []).append((mu, v))
        out: dict = {}
        for (lam, nu), u in self.entries.items():
            for mu, v in cols.get(nu, ()):
                key = (lam, mu)
                out[key] = out[key] + u * v if key in out else u * v
        return PartitionMatrix(self.index, out, self.zero)

    def apply(self, vec: dict) -> dict:
        """Matrix times a partition-indexed vector."""
        out = {lam: self.zero for lam in self.index}
        for (lam, mu), v in self.entries.items():
            x = vec.get(mu)
            if x is not None and not is_zero(x):
                out[lam] = out[lam] + v * x
        return out

    def is_lower_triangular(self) -> bool:
        return all(contains(lam, mu) for (lam, mu) in self.entries)

    def inverse(self, div: Callable | None = None) -> "PartitionMatrix":
        """Inverse of a lower-triangular matrix by forward substitution."""
        div = div or (lambda a, b: a / b)
        order = self.index  # inclusion-compatible
        inv: dict = {}
        for mu in order:
            d = self[mu, mu]
            if is_zero(d):
                raise PoleError(f"zero diagonal entry at {mu}")
            inv[(mu, mu)] = div(self.zero + 1 if not isinstance(d, Series) else Series.one(d.var), d)
            for lam in order:
                if lam == mu or not contains(lam, mu):
                    continue
                acc = self.zero
                for nu in order:
                    if (nu, mu) in inv and contains(lam, nu) and nu != lam:
                        a = self[lam, nu]
                        if not is_zero(a):
                            acc = acc + a * inv[(nu, mu)]
                inv[(lam, mu)] = div(-acc, self[lam, lam])
        return PartitionMatrix(self.index, inv, self.zero)

    def compare(self, other: "PartitionMatrix", order: int | None = None):
        """First entry where the two matrices differ, as ``(lam, mu, verdict)``, else None."""
        for lam in self.index:
            for mu in self.index:
                v = same(self[lam, mu], other[lam, mu], order)
                if not v:
                    return lam, mu, v
        return None

    def __repr__(self):
        return f"PartitionMatrix({len(self.index)} rows, {len(self.entries)} nonzero)"


# -- entries ---------------------------------------------------------------------------


def _theta_ratio(ctx: WContext, b, mu):
    """``prod_i theta(b t^{2-2i} q^{2 mu_i}) / theta(b t^{2-2i})``."""
    alg, q, t = ctx.alg, ctx.q, ctx.t
    out = alg.one
    for i, m in enumerate(pad(mu, ctx.n), start=1):
        if m:
            base = b * t ** (2 - 2 * i)
            out = alg.div(out * alg.theta(base * q ** (2 * m)), alg.theta(base))
    return out


def _pair_q(ctx: WContext, mu):
    """``prod_{i<j} (q t^{j-i})_{mu_i-mu_j} / (q t^{j-i-1})_{mu_i-mu_j}``."""
    return _pair_products(ctx, mu, None, with_b=False)


def k_factor(mu, b, ctx: WContext):
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    out = alg.mono(q ** weight(mu) * t ** (2 * n_stat(mu)))
    out = out * alg.div(alg.poch_part(b * t ** (1 - n), mu), alg.poch_part(q * t ** (n - 1), mu))
    out = out * _theta_ratio(ctx, b, mu)
    return out * _pair_products(ctx, mu, b)


def l_factor(mu, b, ctx: WContext):
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    w = weight(mu)
    out = alg.mono(q ** (2 * w + n_conj(mu)) * t ** n_stat(mu))
    if w % 2:
        out = -out
    out = out * alg.div(alg.poch_part(b * t ** (1 - n), mu), alg.poch_part(q * t ** (n - 1), mu))
    return out * _pair_products(ctx, mu, b)


def m_ab(lam, mu, a, b, ctx: WContext):
    """Entry ``M_{lam mu}(a, b)``; ``a == 0`` gives the leading-order limit."""
    lam, mu = normalize(lam), normalize(mu)
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    if not contains(lam, mu):
        return alg.zero
    if a == b:
        # (a/b)_lam vanishes against a pole of W; the limit is the identity
        return alg.one if lam == mu else alg.zero
    wl, wm = weight(lam), weight(mu)
    kf = k_factor(mu, b, ctx)
    if _param_zero(a):
        # (a/b)_lam / a^{|mu|} -> 1, and a^{-|mu|} W -> t^{(2-2n)|mu|} times the a-leading term
        w = w_multi(mu, (), principal_point(lam, ctx), b * 0, b * t ** (1 - n), ctx, "alead")
        out = alg.div(alg.mono(b ** wl), alg.poch_part(q * b, lam)) * kf * w
        return out * alg.mono(t ** ((2 - 2 * n) * wm))
    out = alg.div(alg.mono(b ** wl) * alg.poch_part(a / b, lam), alg.mono(a ** wm) * alg.poch_part(q * b, lam))
    return out * kf * w_principal(mu, lam, a * t ** (2 - 2 * n), b * t ** (1 - n), ctx)


def _param_zero(a) -> bool:
    c = getattr(a, "c", a)
    return c == 0


def s_diag(lam, b, sigma, rho, ctx: WContext):
    """Diagonal entry ``S_lam(b)`` with parameters ``sigma``, ``rho``."""
    alg, q = ctx.alg, ctx.q
    num = alg.poch_part(sigma, lam) * alg.poch_part(rho, lam)
    den = alg.poch_part(q * b / sigma, lam) * alg.poch_part(q * b / rho, lam)
    return alg.div(num, den) * alg.mono((q * b / (rho * sigma)) ** weight(lam))


def m_b(lam, mu, b, ctx: WContext):
    """One-parameter matrix entry ``M_{lam mu}(b)``."""
    lam, mu = normalize(lam), normalize(mu)
    if not contains(lam, mu):
        return ctx.alg.zero
    w = w_degenerate(mu, principal_point(lam, ctx), ctx, "a_to_0_normalized", b=b * ctx.t ** (1 - ctx.n))
    return l_factor(mu, b, ctx) * w


def m_b_inv(lam, mu, b, ctx: WContext):
    """Closed-form entry of the inverse of ``M(b)``."""
    lam, mu = normalize(lam), normalize(mu)
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    if not contains(lam, mu):
        return alg.zero
    out = alg.div(alg.mono(q ** (weight(mu) - weight(lam)) * t ** (2 * n_stat(mu))),
                  alg.poch_part(q * b, mu) * alg.poch_part(q * t ** (n - 1), mu))
    out = out * _theta_ratio(ctx, b, lam) * _pair_q(ctx, mu)
    w = w_degenerate(mu, principal_point(lam, ctx), ctx, "b_to_0", a=b * t ** (2 - 2 * n))
    return out * w


def n_b(lam, mu, b, sigma, rho, ctx: WContext):
    """Closed-form entry of ``N(b) = M(b) S(b) M(b)^{-1}``."""
    lam, mu = normalize(lam), normalize(mu)
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    if not contains(lam, mu):
        return alg.zero
    out = alg.mono(q ** weight(mu) * t ** (2 * n_stat(mu)))
    out = out * alg.div(alg.poch_part(q * b, lam) * alg.poch_part(q * b / (rho * sigma), lam),
                        alg.poch_part(q * b / sigma, lam) * alg.poch_part(q * b / rho, lam))
    out = out * alg.div(alg.poch_part(sigma, mu) * alg.poch_part(rho, mu),
                        alg.poch_part(q * b, mu) * alg.poch_part(q * t ** (n - 1), mu))
    out = out * _pair_q(ctx, mu)
    c = rho * sigma * t ** (n - 1) / (q * b)
    return out * w_degenerate(mu, principal_point(lam, ctx), ctx, "ratio", ratio=c)


def unit_alpha(lam, b, ctx: WContext):
    """``alpha`` of the unit Bailey pair ``beta = delta_{lam, 0}`` relative to ``b``."""
    alg, q = ctx.alg, ctx.q
    lam = normalize(lam)
    return alg.div(_theta_ratio(ctx, b, lam), alg.mono(q ** weight(lam)))


# -- whole matrices --------------------------------------------------------------------


def _box_k(ctx: WContext, box) -> int:
    """Validate ``box = (n, k)`` against the context and return ``k``."""
    n, k = box
    if n != ctx.n:
        raise ValueError(f"box has n={n} but the context has n={ctx.n}")
    if k < 0:
        raise ValueError("box width must be non-negative")
    return k


def box_index(ctx: WContext, box) -> list:
    return partitions_in_box(ctx.n, _box_k(ctx, box))


def matrix_m_ab(a, b, box, ctx: WContext) -> PartitionMatrix:
    return PartitionMatrix.build(box_index(ctx, box), lambda l, m: m_ab(l, m, a, b, ctx), ctx.alg.zero)


def matrix_s(b, sigma, rho, box, ctx: WContext, inverse: bool = False) -> PartitionMatrix:
    alg = ctx.alg

    def f(lam):
        v = s_diag(lam, b, sigma, rho, ctx)
        return alg.div(alg.one, v) if inverse else v

    return PartitionMatrix.diagonal(box_index(ctx, box), f, alg.zero)


def matrix_m_b(b, box, ctx: WContext) -> PartitionMatrix:
    return PartitionMatrix.build(box_index(ctx, box), lambda l, m: m_b(l, m, b, ctx), ctx.alg.zero)


def matrix_m_b_inv(b, box, ctx: WContext) -> PartitionMatrix:
    return PartitionMatrix.build(box_index(ctx, box), lambda l, m: m_b_inv(l, m, b, ctx), ctx.alg.zero)


def matrix_n_b(b, sigma, rho, box, ctx: WContext) -> PartitionMatrix:
    return PartitionMatrix.build(box_index(ctx, box), lambda l, m: n_b(l, m, b, sigma, rho, ctx), ctx.alg.zero)


def identity_matrix(box, ctx: WContext) -> PartitionMatrix:
    return PartitionMatrix.identity(box_index(ctx, box), ctx.alg.one, ctx.alg.zero)


# -- reports ---------------------------------------------------------------------------


def _order(ctx: WContext):
    return getattr(ctx.alg, "p_order", None)


def _mode(ctx: WContext) -> str:
    if getattr(ctx.alg, "elliptic", False):
        return "p-series"
    return "float" if isinstance(ctx.q, complex) or isinstance(ctx.q, float) else "exact-rational"


def matrix_report(rid: str, lhs: PartitionMatrix, rhs: PartitionMatrix, params: dict, ctx: WContext,
                  wall_ms: float = 0.0, seed=None) -> Report:
    """Entry-wise comparison of two matrices over the same box."""
    bad = lhs.compare(rhs, _order(ctx))
    if bad is None:
        return Report(rid, params, _mode(ctx), _order(ctx), PASS, None, seed, wall_ms)
    lam, mu, v = bad
    w = witness(v.exponent, v.lhs, v.rhs)
    w["entry"] = [list(lam), list(mu)]
    return Report(rid, params, _mode(ctx), _order(ctx), FAIL, w, seed, wall_ms)


def solve_rho(q, a, b, c, sigma):
    """``rho`` from the constraint ``q a b = c sigma rho``."""
    return q * a * b / (c * sigma)


def key_lemma_check(a, b, c, sigma, rho, box, ctx: WContext) -> Report:
    """Compare ``S^-1(a) M(c,a) S(a)`` with ``S^-1(b) M(c,b) S(b) M(b,a)`` over ``box``.

    ``rho`` may be None, in which case it is solved from ``q a b = c sigma rho``;
    an inconsistent explicit value raises ``ValueError``.
    """
    want = solve_rho(ctx.q, a, b, c, sigma)
    if rho is None:
        rho = want
    elif rho != want:
        raise ValueError("key_lemma_check needs q a b = c sigma rho")
    with stopwatch() as sw:
        lhs = matrix_s(a, sigma, rho, box, ctx, True) @ matrix_m_ab(c, a, box, ctx) @ matrix_s(a, sigma, rho, box, ctx)
        rhs = (matrix_s(b, sigma, rho, box, ctx, True) @ matrix_m_ab(c, b, box, ctx)
               @ matrix_s(b, sigma, rho, box, ctx) @ matrix_m_ab(b, a, box, ctx))
    params = {"n": ctx.n, "box": list(box), "a": a, "b": b, "c": c, "sigma": sigma, "rho": rho}
    return matrix_report("key-lemma", lhs, rhs, params, ctx, sw[0])


def cocycle_check(a, b, c, box, ctx: WContext) -> Report:
    """``M(c,a) = M(c,b) M(b,a)`` over ``box``."""
    with stopwatch() as sw:
        lhs = matrix_m_ab(c, a, box, ctx)
        rhs = matrix_m_ab(c, b, box, ctx) @ matrix_m_ab(b, a, box, ctx)
    params = {"n": ctx.n, "box": list(box), "a": a, "b": b, "c": c}
    return matrix_report("cocycle", lhs, rhs, params, ctx, sw[0])


def elliptic_shift_factor(lam, mu, a, b, ctx: WContext, which: str):
    """Prefactor relating ``M(pa, b)`` (``which="a"``) or ``M(pa, pb)`` (``"ab"``) to ``M(a, b)``."""
    alg, q, t = ctx.alg, ctx.q, ctx.t
    wl, wm = weight(lam), weight(mu)
    if which == "a":
        m = b ** (wl - wm) / a ** wl * t ** (n_stat(lam) + 2 * n_stat(mu))
        m = m * q ** (-wm - n_conj(lam) - 2 * n_conj(mu))
        sign = (-1) ** wl
    elif which == "ab":
        p = PMono(1, 1)
        m = b ** wl / a ** wm * p ** (wl - wm) * q ** (wl - wm + n_conj(lam) - n_conj(mu))
        m = m * t ** (n_stat(mu) - n_stat(lam))
        sign = (-1) ** (wl + wm)
    else:
        raise ValueError(f"unknown shift {which!r}")
    v = alg.mono(m)
    return v if sign == 1 else -v


def elliptic_shift_check(a, b, box, ctx: WContext) -> Report:
    """Both p-shift laws of ``M(a, b)`` entry-wise over ``box`` (elliptic algebra)."""
    if not getattr(ctx.alg, "elliptic", False):
        raise ValueError("elliptic shifts need the p-series algebra")
    p = PMono(1, 1)
    order = _order(ctx)
    params = {"n": ctx.n, "box": list(box), "a": a, "b": b}
    with stopwatch() as sw:
        for which, a2, b2 in (("a", a * p, b), ("ab", a * p, b * p)):
            for lam in box_index(ctx, box):
                for mu in subpartitions(lam):
                    lhs = m_ab(lam, mu, a2, b2, ctx)
                    rhs = elliptic_shift_factor(lam, mu, a, b, ctx, which) * m_ab(lam, mu, a, b, ctx)
                    v = same(lhs, rhs, order)
                    if not v:
                        w = witness(v.exponent, v.lhs, v.rhs)
                        w.update(entry=[list(lam), list(mu)], shift=which)
                        return Report("elliptic-shifts-m", params, "p-series", order, FAIL, w, None, sw[0])
    return Report("elliptic-shifts-m", params, "p-series", order, PASS, None, None, sw[0])


# -- Bailey pairs and chains -----------------------------------------------------------


@dataclass
class BaileyPair:
    """Vectors ``alpha`` and ``beta`` over a box with ``beta = M alpha``.

    ``rel_params`` records what the pair is relative to: ``{"b": b}`` for the
    one-parameter matrix ``M(b)``, ``{"b": b1, "a": a1}`` for ``M(b1, a1)``.
    """

    alpha: dict
    beta: dict
    rel_params: dict = field(default_factory=dict)

    def defining_matrix(self, box, ctx: WContext) -> PartitionMatrix:
        rp = self.rel_params
        if "a" in rp:
            return matrix_m_ab(rp["b"], rp["a"], box, ctx)
        return matrix_m_b(rp["b"], box, ctx)

    def check(self, box, ctx: WContext):
        """``(True, None)`` when ``beta = M alpha`` on the box, else the first bad entry."""
        m = self.defining_matrix(box, ctx)
        got = m.apply(self.alpha)
        for lam in m.index:
            v = same(got[lam], self.beta.get(lam, m.zero), _order(ctx))
            if not v:
                return False, (lam, v)
        return True, None


def unit_pair(b, box, ctx: WContext) -> BaileyPair:
    """``beta = delta_{lam,0}`` and its ``alpha`` relative to ``M(b)``."""
    index = box_index(ctx, box)
    alpha = {lam: unit_alpha(lam, b, ctx) for lam in index}
    beta = {lam: (ctx.alg.one if lam == () else ctx.alg.zero) for lam in index}
    return BaileyPair(alpha, beta, {"b": b})


def bailey_step_one(pair: BaileyPair, sigma, rho, b, box, ctx: WContext) -> BaileyPair:
    """One-parameter step: ``alpha' = S(b) alpha``, ``beta' = N(b) beta``."""
    S = matrix_s(b, sigma, rho, box, ctx)
    N = matrix_n_b(b, sigma, rho, box, ctx)
    return BaileyPair(S.apply(pair.alpha), N.apply(pair.beta), {"b": b})


def bailey_step_two(pair: BaileyPair, ab1, ab2, sigma, rho, box, ctx: WContext,
                    form: str = "derived") -> BaileyPair:
    """Two-parameter step from a pair relative to ``(b1, a1)`` to one relative to ``(b2, a2)``.

    ``ab1 = (a1, b1)`` and ``ab2 = (a2, b2)``.  With ``form="derived"`` the
    constraint is ``q a1 b1 = b2 sigma rho`` and the maps are
    ``alpha' = M(a2,a1) S(a1) alpha``, ``beta' = S(a1) S^-1(b1) M(b2,b1) S(b1) beta``.
    ``form="printed"`` uses ``q a1 b1 = a2 sigma rho`` with
    ``alpha' = S(a1) M(a2,a1) alpha`` and ``beta' = S(a2) S^-1(b1) M(b2,b1) S(b1) beta``;
    that variant does not preserve the pair relation and is kept for comparison.
    ``rho=None`` solves the constraint.

    For ``a2 != a1`` the derived step relies on ``M(b2,a2) M(a2,a1) = M(b2,a1)``,
    which holds only at ``p = 0``; in the elliptic tier use ``a2 = a1``.
    """
    (a1, b1), (a2, b2) = ab1, ab2
    q = ctx.q
    if form not in ("derived", "printed"):
        raise ValueError(f"unknown form {form!r}")
    target = b2 if form == "derived" else a2
    want = q * a1 * b1 / (target * sigma)
    if rho is None:
        rho = want
    elif rho != want:
        raise ValueError(f"{form} form constraint violated")
    Sa1 = matrix_s(a1, sigma, rho, box, ctx)
    if form == "derived":
        left = Sa1
        alpha_map = matrix_m_ab(a2, a1, box, ctx) @ Sa1
    else:
        left = matrix_s(a2, sigma, rho, box, ctx)
        alpha_map = Sa1 @ matrix_m_ab(a2, a1, box, ctx)
    beta_map = (left @ matrix_s(b1, sigma, rho, box, ctx, True) @ matrix_m_ab(b2, b1, box, ctx)
                @ matrix_s(b1, sigma, rho, box, ctx))
    return BaileyPair(alpha_map.apply(pair.alpha), beta_map.apply(pair.beta), {"b": b2, "a": a2})


MOVES = ("S", "S-1", "N", "N-1", "M", "M-1")


def chain_walk(pair: BaileyPair, moves: Iterable, box, ctx: WContext, start: str = "alpha",
               b=None) -> BaileyPair:
    """Walk the Bailey chain from one node of ``pair``.

    ``start`` picks the node (``"alpha"`` or ``"beta"``).  Each move is
    ``(name, sigma, rho)`` for the horizontal moves ``S``, ``S-1`` (alpha line)
    and ``N``, ``N-1`` (beta line), or ``name`` alone for the vertical moves
    ``M`` (alpha to beta) and ``M-1`` (beta to alpha).  The node reached is
    completed to a Bailey pair relative to ``M(b)``.
    """
    if start not in ("alpha", "beta"):
        raise ValueError("start must be 'alpha' or 'beta'")
    b = pair.rel_params["b"] if b is None else b
    alg = ctx.alg
    line = start
    vec = dict(pair.alpha if start == "alpha" else pair.beta)
    Mb = matrix_m_b(b, box, ctx)
    Mi = matrix_m_b_inv(b, box, ctx)
    for mv in moves:
        if isinstance(mv, str):
            mv = (mv,)
        name = mv[0]
        if name not in MOVES:
            raise ValueError(f"unknown move {name!r}")
        if name in ("S", "S-1"):
            if line != "alpha":
                raise ValueError(f"{name} acts on the alpha line")
            vec = matrix_s(b, mv[1], mv[2], box, ctx, name == "S-1").apply(vec)
        elif name in ("N", "N-1"):
            if line != "beta":
                raise ValueError(f"{name} acts on the beta line")
            N = matrix_n_b(b, mv[1], mv[2], box, ctx)
            if name == "N-1":
                N = N.inverse(alg.div)
            vec = N.apply(vec)
        elif name == "M":
            if line != "alpha":
                raise ValueError("M maps the alpha line to the beta line")
            vec, line = Mb.apply(vec), "beta"
        else:
            if line != "beta":
                raise ValueError("M-1 maps the beta line to the alpha line")
            vec, line = Mi.apply(vec), "alpha"
    if line == "alpha":
        return BaileyPair(vec, Mb.apply(vec), {"b": b})
    return BaileyPair(Mi.apply(vec), vec, {"b": b})


__all__ = [
    "PartitionMatrix", "BaileyPair", "m_ab", "s_diag", "m_b", "m_b_inv", "n_b", "k_factor", "l_factor",
    "unit_alpha", "unit_pair", "key_lemma_check", "cocycle_check", "elliptic_shift_check",
    "elliptic_shift_factor", "bailey_step_one", "bailey_step_two", "chain_walk", "matrix_m_ab",
    "matrix_s", "matrix_m_b", "matrix_m_b_inv", "matrix_n_b", "identity_matrix", "matrix_report",
    "same", "box_index", "solve_rho",
]
