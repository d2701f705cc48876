"""Checkers for the W-function, Jackson-coefficient and Bailey-matrix identities.

Random parameter points are drawn per call from the supplied generator.  In
the elliptic tier parameters are :class:`~bcbailey.qfact.PMono` values and
both sides are compared as p-series to ``p_order``.
"""
from __future__ import annotations

from fractions import Fraction

from ..bailey import (
    _theta_ratio, identity_matrix, matrix_m_ab, matrix_m_b, matrix_m_b_inv, matrix_s, m_ab,
    elliptic_shift_factor, same, solve_rho,
)
from ..bcw import (
    WContext, _pair_products, degree_formula, omega, principal_point, w_degenerate, w_multi,
)
from ..partitions import contains, n_conj, n_stat, pad, partitions_in_box, subpartitions, weight
from ..qfact import EllipticAlg, PMono, RationalAlg, sign
from ..scalar import EqVerdict
from .common import Outcome, compare, passed, rand_rat


def make_ctx(n: int, rng, elliptic: bool = False, p_order: int = 2):
    """A context at a random ``(q, t)`` and a parameter constructor for its algebra."""
    q, t = rand_rat(rng), rand_rat(rng)
    while abs(q) == 1 or abs(t) == 1:
        q, t = rand_rat(rng), rand_rat(rng)
    if elliptic:
        return WContext(EllipticAlg(q, t, p_order), n), PMono, {"q": q, "t": t, "p_order": p_order}
    return WContext(RationalAlg(q, t), n), Fraction, {"q": q, "t": t}


def _draw(rng, mk, names):
    vals = {k: rand_rat(rng) for k in names}
    return {k: mk(v) for k, v in vals.items()}, vals


def _order(p):
    return p.get("p_order", 2) if p.get("mode") == "p-series" else None


def matrix_outcome(label, lhs, rhs, order, point) -> Outcome:
    bad = lhs.compare(rhs, order)
    if bad is None:
        return passed(point)
    lam, mu, v = bad
    out = Outcome(v, label, point)
    out.extra["entry"] = [list(lam), list(mu)]
    return out


# -- omega, W and the matrices ----------------------------------------------------------


def check_omega_cocycle(p, order, rng) -> Outcome:
    """Cocycle identity of the Jackson coefficients over ``nu ⊆ k^n``."""
    n, k = p["n"], p.get("k", 2)
    ell = p.get("mode") == "p-series"
    ctx, mk, point = make_ctx(n, rng, ell, p.get("p_order", 2))
    prm, raw = _draw(rng, mk, ("a", "b", "u", "v"))
    point.update(raw)
    a, b, u, v = prm["a"], prm["b"], prm["u"], prm["v"]
    alg = ctx.alg
    o = _order(p)
    uv = u * v
    for nu in partitions_in_box(n, k):
        for mu in subpartitions(nu):
            lhs = omega(nu, mu, 1 / uv, uv, a * uv ** 2, b * uv, ctx)
            rhs = alg.zero
            for lam in subpartitions(nu):
                if contains(lam, mu):
                    rhs = rhs + omega(nu, lam, 1 / v, v, a * uv ** 2, b * uv, ctx) * omega(lam, mu, 1 / u, u, a * u ** 2, b * u, ctx)
            res = same(lhs, rhs, o)
            if not res:
                out = Outcome(res, "omega-cocycle", point)
                out.extra["entry"] = [list(nu), list(mu)]
                return out
    return passed(point)


def check_key_lemma(p, order, rng) -> Outcome:
    n, k = p["n"], p.get("k", 2)
    ell = p.get("mode") == "p-series"
    ctx, mk, point = make_ctx(n, rng, ell, p.get("p_order", 2))
    prm, raw = _draw(rng, mk, ("a", "b", "c", "sigma"))
    point.update(raw)
    a, b, c, sigma = prm["a"], prm["b"], prm["c"], prm["sigma"]
    rho = solve_rho(ctx.q, a, b, c, sigma)
    box = (n, k)
    lhs = matrix_s(a, sigma, rho, box, ctx, True) @ matrix_m_ab(c, a, box, ctx) @ matrix_s(a, sigma, rho, box, ctx)
    rhs = (matrix_s(b, sigma, rho, box, ctx, True) @ matrix_m_ab(c, b, box, ctx)
           @ matrix_s(b, sigma, rho, box, ctx) @ matrix_m_ab(b, a, box, ctx))
    return matrix_outcome("key-lemma", lhs, rhs, _order(p), point)


def check_m_inverse(p, order, rng) -> Outcome:
    """``M(b) M^-1(b) = I``, ``M(a,b) M(b,a) = I`` and the p = 0 cocycle ``M(c,a) = M(c,b) M(b,a)``."""
    n, k = p["n"], p.get("k", 2)
    ctx, mk, point = make_ctx(n, rng)
    prm, raw = _draw(rng, mk, ("a", "b", "c"))
    point.update(raw)
    a, b, c = prm["a"], prm["b"], prm["c"]
    box = (n, k)
    I = identity_matrix(box, ctx)
    for label, lhs, rhs in (
        ("M(b)M^-1(b)", matrix_m_b(b, box, ctx) @ matrix_m_b_inv(b, box, ctx), I),
        ("M(a,b)M(b,a)", matrix_m_ab(a, b, box, ctx) @ matrix_m_ab(b, a, box, ctx), I),
        ("cocycle p=0", matrix_m_ab(c, a, box, ctx), matrix_m_ab(c, b, box, ctx) @ matrix_m_ab(b, a, box, ctx)),
    ):
        out = matrix_outcome(label, lhs, rhs, None, point)
        if not out.passed:
            return out
    return passed(point)


def omega_shift_factor(which, lam, mu, x, r, a, b, ctx):
    """Prefactor ``F`` with ``omega(shifted) = F * omega(x; r; a, b)`` for a shift by ``p``."""
    q, t = ctx.q, ctx.t
    pp = PMono(1, 1)
    dl = weight(lam) - weight(mu)
    dn = n_stat(lam) - n_stat(mu)
    dc = n_conj(lam) - n_conj(mu)
    if which == "b":
        return (q * q * b * b / a) ** dl * t ** (-2 * dn) * q ** (2 * dc)
    if which == "a":
        return (q * b) ** (-dl) * pp ** dl * r ** (-weight(mu)) * t ** (2 * dn) * q ** (-2 * dc)
    if which == "r":
        wm = weight(mu)
        return (a / r ** 2) ** (-wm) * pp ** (2 * wm) * t ** (2 * n_stat(mu)) * q ** (-2 * n_conj(mu))
    raise ValueError(which)


def check_elliptic_shifts_omega(p, order, rng) -> Outcome:
    """``omega`` at ``(a, pb)``, ``(pa, b)`` and ``(x; pr)`` against its prefactor laws."""
    n, k = p["n"], p.get("k", 2)
    ctx, mk, point = make_ctx(n, rng, True, p.get("p_order", 2))
    prm, raw = _draw(rng, mk, ("x", "r", "a", "b"))
    point.update(raw)
    x, r, a, b = prm["x"], prm["r"], prm["a"], prm["b"]
    pp = PMono(1, 1)
    o = p.get("p_order", 2)
    for which, args in (("b", (x, r, a, b * pp)), ("a", (x, r, a * pp, b)), ("r", (x, r * pp, a, b))):
        for lam in partitions_in_box(n, k):
            for mu in subpartitions(lam):
                lhs = omega(lam, mu, *args, ctx)
                rhs = ctx.alg.mono(omega_shift_factor(which, lam, mu, x, r, a, b, ctx)) * omega(lam, mu, x, r, a, b, ctx)
                res = same(lhs, rhs, o)
                if not res:
                    out = Outcome(res, f"shift-{which}", point)
                    out.extra["entry"] = [list(lam), list(mu)]
                    return out
    return passed(point)


def check_elliptic_shifts_m(p, order, rng) -> Outcome:
    """``M(pa, b)`` and ``M(pa, pb)`` against ``M(a, b)`` times their prefactors."""
    n, k = p["n"], p.get("k", 2)
    ctx, mk, point = make_ctx(n, rng, True, p.get("p_order", 2))
    prm, raw = _draw(rng, mk, ("a", "b"))
    point.update(raw)
    a, b = prm["a"], prm["b"]
    pp = PMono(1, 1)
    o = p.get("p_order", 2)
    for which, a2, b2 in (("a", a * pp, b), ("ab", a * pp, b * pp)):
        for lam in partitions_in_box(n, k):
            for mu in subpartitions(lam):
                lhs = m_ab(lam, mu, a2, b2, ctx)
                rhs = elliptic_shift_factor(lam, mu, a, b, ctx, which) * m_ab(lam, mu, a, b, ctx)
                res = same(lhs, rhs, o)
                if not res:
                    out = Outcome(res, f"M-shift-{which}", point)
                    out.extra["entry"] = [list(lam), list(mu)]
                    return out
    return passed(point)


def w_jackson_sides(lam, xs, a, b, s, ctx):
    """Both sides of the W-Jackson sum for ``W_lam(x/s; a t^-2n s^2, b t^-n s)``."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    L = pad(lam, n)
    lhs = w_multi(lam, (), [x / s for x in xs], a * t ** (-2 * n) * s * s, b * t ** (-n) * s, ctx)
    pre = alg.div(alg.poch_part(s, lam) * alg.poch_part(a * s * t ** (-n - 1), lam),
                  alg.poch_part(q * b / t, lam) * alg.poch_part(q * b * t ** n / a, lam))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, e = L[i - 1] - L[j - 1], L[i - 1] + L[j - 1]
            pre = pre * alg.div(alg.poch(t ** (j - i + 1), d) * alg.poch(q * b * s * t ** (1 - i - j), e),
                                alg.poch(t ** (j - i), d) * alg.poch(q * b * s * t ** (-i - j), e))
    tot = alg.zero
    for mu in subpartitions(lam):
        M = pad(mu, n)
        term = alg.div(alg.poch_part(b * t ** (-n), mu) * alg.poch_part(q * b * t ** n / (a * s), mu),
                       alg.poch_part(q * t ** (n - 1), mu) * alg.poch_part(a * s * t ** (-n - 1), mu))
        for i in range(1, n + 1):
            m = M[i - 1]
            if m:
                base = b * t ** (1 - 2 * i)
                term = alg.div(term * alg.theta(base * q ** (2 * m)), alg.theta(base))
                term = term * alg.mono((q * t ** (2 * i - 2)) ** m)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d, e = M[i - 1] - M[j - 1], M[i - 1] + M[j - 1]
                term = term * alg.div(alg.poch(t ** (j - i), d) * alg.poch(q * t ** (j - i), d),
                                      alg.poch(q * t ** (j - i - 1), d) * alg.poch(t ** (j - i + 1), d))
                term = term * alg.div(alg.poch(b * q * t ** (-i - j), e) * alg.poch(b * t ** (2 - i - j), e),
                                      alg.poch(b * t ** (1 - i - j), e) * alg.poch(q * b * t ** (1 - i - j), e))
        term = term * w_multi(mu, (), principal_point(lam, ctx), b * s * t ** (1 - 2 * n), b * t ** (-n), ctx)
        term = term * w_multi(mu, (), xs, a * t ** (-2 * n), b * t ** (-n), ctx)
        tot = tot + term
    return lhs, pre * tot


def check_w_jackson(p, order, rng) -> Outcome:
    n, k = p["n"], p.get("k", 2)
    ell = p.get("mode", "p-series") == "p-series"
    ctx, mk, point = make_ctx(n, rng, ell, p.get("p_order", 2))
    prm, raw = _draw(rng, mk, ["a", "b", "s"] + [f"x{i}" for i in range(1, n + 1)])
    point.update(raw)
    xs = [prm[f"x{i}"] for i in range(1, n + 1)]
    o = p.get("p_order", 2) if ell else None
    pairs = []
    for lam in partitions_in_box(n, k):
        lhs, rhs = w_jackson_sides(lam, xs, prm["a"], prm["b"], prm["s"], ctx)
        pairs.append((f"lam={list(lam)}", lhs, rhs))
    return compare(pairs, point, o)


def check_degree_formula(p, order, rng) -> Outcome:
    """``W_mu(x t^delta; a, b)`` from the recursion against the closed product."""
    n, k = p["n"], p.get("k", 2)
    ctx, mk, point = make_ctx(n, rng)
    prm, raw = _draw(rng, mk, ("x", "a", "b"))
    point.update(raw)
    x, a, b = prm["x"], prm["a"], prm["b"]
    xs = [x * ctx.t ** (n - i) for i in range(1, n + 1)]
    pairs = []
    for mu in partitions_in_box(n, k):
        pairs.append((f"mu={list(mu)}", w_multi(mu, (), xs, a, b, ctx), degree_formula(mu, x, a, b, ctx)))
        # W_mu(t^delta) vanishes off the empty partition
        base = [ctx.t ** (n - i) for i in range(1, n + 1)]
        pairs.append((f"delta0 mu={list(mu)}", w_multi(mu, (), base, a, b, ctx), ctx.alg.one if not mu else ctx.alg.zero))
    return compare(pairs, point)


# -- iterated Bailey lemma: 6phi5, Watson, generalized Watson ---------------------------


def _w0(mu, lam, b, ctx):
    """``W_mu(q^lam t^delta; 0, b t^{1-n})`` read as the normalized a -> 0 limit."""
    return w_degenerate(mu, principal_point(lam, ctx), ctx, "a_to_0_normalized", b=b * ctx.t ** (1 - ctx.n))


def _wratio(mu, lam, b, sigma, rho, ctx):
    """Single-parameter W with displayed argument ``q b t^{n-1}/(rho sigma)``."""
    c = rho * sigma * ctx.t ** (ctx.n - 1) / (ctx.q * b)
    return w_degenerate(mu, principal_point(lam, ctx), ctx, "ratio", ratio=c)


def _pair_q(mu, ctx):
    return _pair_products(ctx, mu, None, with_b=False)


def _pochs(alg, xs, lam):
    out = alg.one
    for x in xs:
        out = out * alg.poch_part(x, lam)
    return out


def _well_poised_term(mu, lam, b, ctx):
    """``q^{n(mu')} t^{n(mu)} (-1)^|mu| (b t^{1-n})_mu/(q t^{n-1})_mu`` times the theta and pair factors and ``W(.;0,.)``."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    out = alg.mono(q ** n_conj(mu) * t ** n_stat(mu)) * sign(weight(mu))
    out = out * alg.div(alg.poch_part(b * t ** (1 - n), mu), alg.poch_part(q * t ** (n - 1), mu))
    out = out * _theta_ratio(ctx, b, mu) * _pair_products(ctx, mu, b)
    return out * _w0(mu, lam, b, ctx)


def sfs_sides(lam, b, s1, r1, ctx):
    """Product and sum sides of the terminating 6phi5 summation."""
    alg, q = ctx.alg, ctx.q
    lhs = alg.div(_pochs(alg, (q * b, q * b / (r1 * s1)), lam), _pochs(alg, (q * b / s1, q * b / r1), lam))
    rhs = alg.zero
    for mu in subpartitions(lam):
        term = _well_poised_term(mu, lam, b, ctx) * alg.mono((q * q * b / (s1 * r1)) ** weight(mu))
        term = term * alg.div(_pochs(alg, (s1, r1), mu), _pochs(alg, (q * b / s1, q * b / r1), mu))
        rhs = rhs + term
    return lhs, rhs


def watson_sides(lam, b, s1, r1, s2, r2, ctx):
    """``(prefactor, balanced sum, well-poised sum)`` of the BC_n Watson transformation."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    pre = alg.div(_pochs(alg, (q * b, q * b / (r2 * s2)), lam), _pochs(alg, (q * b / s2, q * b / r2), lam))
    bal = alg.zero
    for mu in subpartitions(lam):
        term = alg.mono(q ** weight(mu) * t ** (2 * n_stat(mu)))
        term = term * alg.div(_pochs(alg, (s2, r2, q * b / (r1 * s1)), mu),
                              _pochs(alg, (q * t ** (n - 1), q * b / s1, q * b / r1), mu))
        bal = bal + term * _pair_q(mu, ctx) * _wratio(mu, lam, b, s2, r2, ctx)
    wp = alg.zero
    for mu in subpartitions(lam):
        term = _well_poised_term(mu, lam, b, ctx) * alg.mono((q ** 3 * b * b / (s1 * r1 * s2 * r2)) ** weight(mu))
        term = term * alg.div(_pochs(alg, (s2, r2, s1, r1), mu),
                              _pochs(alg, (q * b / s1, q * b / r1, q * b / s2, q * b / r2), mu))
        wp = wp + term
    return pre, bal, wp


def gen_watson_sides(lam, b, sigmas, rhos, ctx):
    """``(nested sum, prefactor, well-poised sum)`` of the N-fold generalized Watson transformation.

    ``sigmas[k-1]``, ``rhos[k-1]`` are ``sigma_k``, ``rho_k`` for ``k = 1..N``.
    """
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    N = len(sigmas)
    S = lambda k: sigmas[k - 1]  # noqa: E731
    R = lambda k: rhos[k - 1]  # noqa: E731
    memo: dict = {}

    def g(k, nu):
        # sum over mu^k ⊆ nu = mu^{k-1} of the k-th factor times the deeper sums
        if k == N:
            return alg.one
        key = (k, nu)
        if key in memo:
            return memo[key]
        j, i = N - k, N - k + 1
        acc = alg.zero
        for mu in subpartitions(nu):
            f = alg.mono(q ** weight(mu) * t ** (2 * n_stat(mu)))
            f = f * alg.div(_pochs(alg, (q * b / (R(j) * S(j)), S(i), R(i)), mu),
                            _pochs(alg, (q * b / S(j), q * b / R(j), q * t ** (n - 1)), mu))
            f = f * _pair_q(mu, ctx) * _wratio(mu, nu, b, S(i), R(i), ctx)
            acc = acc + f * g(k + 1, mu)
        memo[key] = acc
        return acc

    nested = g(1, tuple(lam))
    pre = alg.div(_pochs(alg, (q * b / S(N), q * b / R(N)), lam), _pochs(alg, (q * b, q * b / (R(N) * S(N))), lam))
    wp = alg.zero
    for mu in subpartitions(lam):
        term = _well_poised_term(mu, lam, b, ctx) * alg.mono(q ** weight(mu))
        for k in range(1, N + 1):
            term = term * alg.div(_pochs(alg, (S(k), R(k)), mu), _pochs(alg, (q * b / S(k), q * b / R(k)), mu))
            term = term * alg.mono((q * b / (S(k) * R(k))) ** weight(mu))
        wp = wp + term
    return nested, pre, wp


def _lams(n, k, p):
    return [tuple(p["lam"])] if "lam" in p else partitions_in_box(n, k)


def check_6phi5(p, order, rng) -> Outcome:
    n, k = p["n"], p["k"]
    ctx, mk, point = make_ctx(n, rng)
    prm, raw = _draw(rng, mk, ("b", "sigma", "rho"))
    point.update(raw)
    pairs = []
    for lam in _lams(n, k, p):
        lhs, rhs = sfs_sides(lam, prm["b"], prm["sigma"], prm["rho"], ctx)
        pairs.append((f"lam={list(lam)}", lhs, rhs))
    return compare(pairs, point)


def check_watson_bc(p, order, rng) -> Outcome:
    n, k = p["n"], p["k"]
    ctx, mk, point = make_ctx(n, rng)
    prm, raw = _draw(rng, mk, ("b", "sigma1", "rho1", "sigma2", "rho2"))
    point.update(raw)
    pairs = []
    for lam in _lams(n, k, p):
        pre, bal, wp = watson_sides(lam, prm["b"], prm["sigma1"], prm["rho1"], prm["sigma2"], prm["rho2"], ctx)
        pairs.append((f"lam={list(lam)}", pre * bal, wp))
    return compare(pairs, point)


def check_gen_watson(p, order, rng) -> Outcome:
    """The N-fold transformation, plus value-for-value agreement with 6phi5 (N=1) and Watson (N=2)."""
    n, k, N = p["n"], p["k"], p["N"]
    ctx, mk, point = make_ctx(n, rng)
    names = ["b"] + [f"sigma{i}" for i in range(1, N + 1)] + [f"rho{i}" for i in range(1, N + 1)]
    prm, raw = _draw(rng, mk, names)
    point.update(raw)
    b = prm["b"]
    sig = [prm[f"sigma{i}"] for i in range(1, N + 1)]
    rho = [prm[f"rho{i}"] for i in range(1, N + 1)]
    alg = ctx.alg
    pairs = []
    for lam in _lams(n, k, p):
        nested, pre, wp = gen_watson_sides(lam, b, sig, rho, ctx)
        pairs.append((f"lam={list(lam)}", nested, pre * wp))
        if N == 1:
            lhs, rhs = sfs_sides(lam, b, sig[0], rho[0], ctx)
            pairs.append((f"N=1 sum lam={list(lam)}", wp, rhs))
            pairs.append((f"N=1 product lam={list(lam)}", alg.div(alg.one, pre), lhs))
        elif N == 2:
            wpre, bal, wwp = watson_sides(lam, b, sig[0], rho[0], sig[1], rho[1], ctx)
            pairs.append((f"N=2 nested lam={list(lam)}", nested, bal))
            pairs.append((f"N=2 sum lam={list(lam)}", wp, wwp))
            pairs.append((f"N=2 product lam={list(lam)}", alg.div(alg.one, pre), wpre))
    return compare(pairs, point)


def watson_1dim_sides(N, b, s1, r1, s2, r2, q):
    """Terminating 8phi7 and the 4phi3 side of the one-variable Watson transformation (exact)."""
    def poch(x, m):
        out = Fraction(1)
        for i in range(m):
            out *= 1 - x * q ** i
        return out

    z = b * b * q ** (2 + N) / (s1 * s2 * r1 * r2)
    lhs = Fraction(0)
    for k in range(N + 1):
        num = poch(b, k) * (1 - b * q ** (2 * k)) / (1 - b)
        for x in (s1, r1, s2, r2, q ** (-N)):
            num *= poch(x, k)
        den = poch(q, k)
        for x in (b * q / s1, b * q / r1, b * q / s2, b * q / r2, b * q ** (N + 1)):
            den *= poch(x, k)
        lhs += num / den * z ** k
    pre = poch(b * q, N) * poch(b * q / (s2 * r2), N) / (poch(b * q / s2, N) * poch(b * q / r2, N))
    rhs = Fraction(0)
    for k in range(N + 1):
        num = poch(b * q / (s1 * r1), k) * poch(s2, k) * poch(r2, k) * poch(q ** (-N), k)
        den = poch(q, k) * poch(b * q / s1, k) * poch(b * q / r1, k) * poch(s2 * r2 * q ** (-N) / b, k)
        rhs += num / den * q ** k
    return lhs, pre * rhs


def check_watson_1dim(p, order, rng) -> Outcome:
    """8phi7 = prefactor * 4phi3, and both against the n = 1 case of the BC_n Watson transformation."""
    N = p["N"]
    ctx, mk, point = make_ctx(1, rng)
    prm, raw = _draw(rng, mk, ("b", "sigma1", "rho1", "sigma2", "rho2"))
    point.update(raw)
    b, s1, r1, s2, r2 = (prm[k] for k in ("b", "sigma1", "rho1", "sigma2", "rho2"))
    lhs, rhs = watson_1dim_sides(N, b, s1, r1, s2, r2, ctx.q)
    pre, bal, wp = watson_sides((N,) if N else (), b, s1, r1, s2, r2, ctx)
    return compare([("8phi7=4phi3", lhs, rhs), ("8phi7=well-poised", lhs, wp), ("4phi3=balanced", rhs, pre * bal)],
                   point)
