"""BC_n symmetric functions: H-factors, W-functions and Jackson coefficients.

All functions take a :class:`WContext` holding the evaluation algebra (which
fixes ``q``, ``t`` and, in the elliptic tier, the p-truncation) and the
number of variables ``n``.  Parameters ``a``, ``b``, ``x``, ``r`` are values
of the algebra's parameter type (rationals, complex numbers or
:class:`~bcbailey.qfact.PMono`).

W-function modes
----------------
``"full"``
    the ordinary ``W(x; a, b)``.
``"b0"``
    ``W(x; a, 0)``; the same formula with ``b = 0``.
``"alead"``
    ``lim_{a->0} a^{-(|lam|-|mu|)} W_{lam/mu}(x; a, b)``: the leading
    coefficient as ``a`` tends to zero, computed with the closed-form limit
    rule factor by factor.
``"ratio"``
    ``lim_{d->0} W(x; d a, d b)`` which only depends on ``c = b/a``; pass
    ``c`` in place of ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partitions import (
    contains, horizontal_strip, n_conj, n_stat, normalize, pad, strips_below, subpartitions, weight,
)
from .qfact import Algebra, PoleError

MODES = ("full", "b0", "alead", "ratio")


@dataclass
class WContext:
    """Evaluation algebra plus the number of variables."""

    alg: Algebra
    n: int
    memo: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def q(self):
        return self.alg.q

    @property
    def t(self):
        return self.alg.t


def _lim_poch(ctx: WContext, c, mu: Sequence[int]):
    """``lim_{a->0} a^{|mu|} (c/a)_mu`` as a ring value."""
    alg = ctx.alg
    w = weight(mu)
    val = alg.mono(c ** w * ctx.t ** (-n_stat(mu)) * ctx.q ** n_conj(mu))
    return val if w % 2 == 0 else -val


def h_factor(lam, mu, b, ctx: WContext):
    """The H-factor of the skew shape ``lam/mu`` (a horizontal strip)."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    L = pad(lam, n + 1)
    M = pad(mu, n + 1)
    num = alg.one
    den = alg.one
    for j in range(2, n + 2):
        d = M[j - 2] - L[j - 1]
        if d == 0:
            continue
        if d < 0:
            raise ValueError(f"{lam}/{mu} is not a horizontal strip")
        mj1 = M[j - 2]
        lj = L[j - 1]
        if j <= n:
            for i in range(1, j):
                li, mi = L[i - 1], M[i - 1]
                num = num * alg.poch(q ** (mi - mj1) * t ** (j - i), d)
                num = num * alg.poch(q ** (li + lj) * t ** (3 - j - i) * b, d)
                num = num * alg.poch(q ** (li - mj1 + 1) * t ** (j - i - 1), d)
                den = den * alg.poch(q ** (mi - mj1 + 1) * t ** (j - i - 1), d)
                den = den * alg.poch(q ** (li + lj + 1) * t ** (2 - j - i) * b, d)
                den = den * alg.poch(q ** (li - mj1) * t ** (j - i), d)
        for i in range(1, j - 1):
            mi = M[i - 1]
            num = num * alg.poch(q ** (mi + lj + 1) * t ** (1 - j - i) * b, d)
            den = den * alg.poch(q ** (mi + lj) * t ** (2 - j - i) * b, d)
    return alg.div(num, den)


def w_skew(lam, mu, x, a, b, ctx: WContext, mode: str = "full"):
    """Single-variable skew W-function ``W_{lam/mu}(x; a, b)``; zero off strips."""
    lam = normalize(lam)
    mu = normalize(mu)
    alg = ctx.alg
    if not horizontal_strip(lam, mu):
        return alg.zero
    if mode not in MODES:
        raise ValueError(f"unknown W mode {mode!r}")
    key = ("wskew", lam, mu, x, a, b, mode)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    q, t, n = ctx.q, ctx.t, ctx.n
    if len(lam) > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    L = pad(lam, n + 1)
    M = pad(mu, n + 1)
    xinv = 1 / x
    out = alg.poch_part_ratio(xinv, lam, mu)
    if mode in ("full", "b0"):
        out = out * alg.poch_part_ratio(a * x, lam, mu)
    bb = b if mode in ("full", "alead") else b * 0
    if mode in ("full", "alead"):
        out = alg.div(out * alg.poch_part(q * b * x / t, mu), alg.poch_part(q * b * x, lam))
    if mode == "full":
        out = alg.div(out * alg.poch_part(q * b / (a * x * t), mu), alg.poch_part(q * b / (a * x), lam))
    elif mode == "alead":
        out = alg.div(out * _lim_poch(ctx, q * b / (x * t), mu), _lim_poch(ctx, q * b / x, lam))
    elif mode == "ratio":
        c = b
        out = alg.div(out * alg.poch_part(q * c / (x * t), mu), alg.poch_part(q * c / x, lam))
    tpow = 0
    for i in range(1, n + 1):
        mi, li1 = M[i - 1], L[i]
        tpow += i * (mi - li1)
        if mode in ("full", "alead"):
            s = mi + li1
            num = alg.theta(b * t ** (1 - 2 * i) * q ** (2 * mi)) * alg.poch(b * t ** (1 - 2 * i), s)
            den = alg.theta(b * t ** (1 - 2 * i)) * alg.poch(b * q * t ** (-2 * i), s)
            out = alg.div(out * num, den)
    out = out * alg.mono(t ** tpow)
    out = out * h_factor(lam, mu, bb, ctx)
    ctx.memo[key] = out
    return out


def _shift(ctx: WContext, a, b, mode: str, ell: int):
    """Parameters for the outer skew factor of the recursion with ``ell`` inner variables."""
    t = ctx.t
    if mode == "ratio":
        return a, b * t ** (-ell)
    if mode == "alead":
        return a, b * t ** ell
    return a * t ** (2 * ell), b * t ** ell


def w_multi(lam, mu, xs: Sequence, a, b, ctx: WContext, mode: str = "full"):
    """Multivariable skew W-function by peeling off the first variable."""
    lam = normalize(lam)
    mu = normalize(mu)
    alg = ctx.alg
    xs = tuple(xs)
    if not xs:
        raise ValueError("need at least one variable")
    if not contains(lam, mu):
        # every term of the recursion contains a non-strip factor
        return alg.zero
    if len(xs) == 1:
        return w_skew(lam, mu, xs[0], a, b, ctx, mode)
    key = ("wmulti", lam, mu, xs, a, b, mode)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    ell = len(xs) - 1
    y = xs[0] * ctx.t ** (-ell)
    a2, b2 = _shift(ctx, a, b, mode, ell)
    out = alg.zero
    for nu in strips_below(lam):
        if not contains(nu, mu):
            continue
        inner = w_multi(nu, mu, xs[1:], a, b, ctx, mode)
        if _zero(inner):
            continue
        term = w_skew(lam, nu, y, a2, b2, ctx, mode) * inner
        if mode == "alead":
            term = term * alg.mono(ctx.t ** (2 * ell * (weight(lam) - weight(nu))))
        out = out + term
    ctx.memo[key] = out
    return out


def _zero(v) -> bool:
    z = getattr(v, "is_zero", None)
    return z() if callable(z) else v == 0


def principal_point(lam, ctx: WContext) -> tuple:
    """``q^lam t^delta``: the point ``x_i = q^{lam_i} t^{n-i}``."""
    n = ctx.n
    L = pad(lam, n)
    return tuple(ctx.q ** L[i] * ctx.t ** (n - 1 - i) for i in range(n))


def w_principal(mu, lam, a, b, ctx: WContext, mode: str = "full"):
    """``W_mu(q^lam t^delta; a, b)``; zero when ``mu`` is not inside ``lam``."""
    if not contains(lam, mu):
        return ctx.alg.zero
    return w_multi(mu, (), principal_point(lam, ctx), a, b, ctx, mode)


def w_degenerate(mu, xs: Sequence, ctx: WContext, variant: str, a=None, b=None, ratio=None):
    """The three degenerate W-functions.

    ``b_to_0``
        ``W_mu(x; a, 0)``.
    ``a_to_0_normalized``
        ``lim (b'/a')^{|mu|} W_mu(x; a' t^{2-2n}, b' t^{1-n})`` where the
        given ``b`` is the second W parameter ``b' t^{1-n}``.
    ``ratio``
        ``lim_{d->0} W_mu(x; d v t^{2-2n}, d u t^{1-n})`` with
        ``ratio = (u/v) t^{n-1}``.
    """
    alg = ctx.alg
    if variant == "b_to_0":
        return w_multi(mu, (), xs, a, b if b is not None else a * 0, ctx, "b0") if a is not None else _need("a")
    if variant == "a_to_0_normalized":
        if b is None:
            _need("b")
        lead = w_multi(mu, (), xs, b * 0, b, ctx, "alead")
        w = weight(mu)
        # (b'/a')^{|mu|} = (b/a)^{|mu|} t^{(1-n)|mu|}
        return lead * alg.mono(b ** w * ctx.t ** ((1 - ctx.n) * w))
    if variant == "ratio":
        if ratio is None:
            _need("ratio")
        return w_multi(mu, (), xs, ratio * 0, ratio, ctx, "ratio")
    raise ValueError(f"unknown variant {variant!r}")


def _need(name):
    raise ValueError(f"variant needs parameter {name}")


def _pair_products(ctx: WContext, mu, b, with_b: bool = True):
    """``prod_{i<j} (q t^{j-i})_{mu_i-mu_j}/(q t^{j-i-1})_{...}`` times the b-part."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    M = pad(mu, n)
    num = alg.one
    den = alg.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = M[i - 1] - M[j - 1]
            s = M[i - 1] + M[j - 1]
            num = num * alg.poch(q * t ** (j - i), d)
            den = den * alg.poch(q * t ** (j - i - 1), d)
            if with_b:
                num = num * alg.poch(b * t ** (3 - i - j), s)
                den = den * alg.poch(b * t ** (2 - i - j), s)
    return alg.div(num, den)


def omega(lam, mu, x, r, a, b, ctx: WContext):
    """Jackson coefficient ``omega_{lam/mu}(x; r; a, b)``."""
    lam = normalize(lam)
    mu = normalize(mu)
    alg = ctx.alg
    if not contains(lam, mu):
        return alg.zero
    key = ("omega", lam, mu, x, r, a, b)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    q, t, n = ctx.q, ctx.t, ctx.n
    xinv = 1 / x
    out = alg.poch_part_ratio(xinv, lam, mu) * alg.poch_part_ratio(a * x, lam, mu)
    out = alg.div(out, alg.poch_part(q * b * x, lam) * alg.poch_part(q * b / (a * x), lam))
    out = out * alg.poch_part(q * b * x / r, mu) * alg.poch_part(q * b / (a * x * r), mu)
    out = out * alg.poch_part(r, mu) * alg.poch_part(b * t ** (1 - n) / r, mu)
    out = alg.div(out, alg.poch_part(q * b / r ** 2, mu) * alg.poch_part(q * t ** (n - 1), mu))
    M = pad(mu, n)
    mono = q ** 0
    for i in range(1, n + 1):
        mi = M[i - 1]
        base = b / r * t ** (2 - 2 * i)
        out = alg.div(out * alg.theta(base * q ** (2 * mi)), alg.theta(base))
        mono = mono * (q * t ** (2 * i - 2)) ** mi
    out = out * alg.mono(mono)
    out = out * _pair_products(ctx, mu, b / r)
    out = out * w_principal(mu, lam, b * t ** (2 - 2 * n), b / r * t ** (1 - n), ctx)
    ctx.memo[key] = out
    return out


def omega_multi(lam, tau, zs: Sequence, r, a, b, ctx: WContext):
    """Multivariable Jackson coefficient ``omega_{lam/tau}(z_1, ..., z_k; r; a, b)``."""
    lam = normalize(lam)
    tau = normalize(tau)
    zs = tuple(zs)
    alg = ctx.alg
    if not zs:
        raise ValueError("need at least one variable")
    if len(zs) == 1:
        return omega(lam, tau, zs[0], r, a, b, ctx)
    k = len(zs) - 1
    out = alg.zero
    for mu in subpartitions(lam):
        if not contains(mu, tau):
            continue
        inner = omega_multi(mu, tau, zs[1:], r, a, b, ctx)
        if _zero(inner):
            continue
        outer = omega(lam, mu, zs[0] * r ** (-k), r, a * r ** (2 * k), b * r ** k, ctx)
        out = out + outer * inner
    return out


def degree_formula(mu, x, a, b, ctx: WContext):
    """Closed form of ``W_mu(x t^delta; a, b)`` (p = 0)."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    mu = normalize(mu)
    num = alg.poch_part(1 / x, mu) * alg.poch_part(a * x * t ** (n - 1), mu)
    den = alg.poch_part(q * b * x * t ** (n - 1), mu) * alg.poch_part(q * b / (a * x), mu)
    out = alg.div(num, den)
    M = pad(mu, n)
    pn = alg.one
    pd = alg.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = M[i - 1] - M[j - 1]
            s = M[i - 1] + M[j - 1]
            pn = pn * alg.poch(t ** (j - i + 1), d) * alg.poch(q * b * t ** (n - i - j + 1), s)
            pd = pd * alg.poch(t ** (j - i), d) * alg.poch(q * b * t ** (n - i - j), s)
    return out * alg.div(pn, pd)


__all__ = [
    "WContext", "PoleError", "h_factor", "w_skew", "w_multi", "w_principal", "w_degenerate",
    "omega", "omega_multi", "degree_formula", "principal_point",
]
