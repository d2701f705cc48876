"""Signed-permutation symmetry of the rectangular M(b) entries and of S(b).

At ``q^{z_i} = b^{1/2} t^{1-i}`` the entry ``M_{k^n mu}(b)`` is a ratio
``F(q^mu q^z) / F(q^z)`` of infinite products that is visibly symmetric
under permutations and inversions of the coordinates ``q^{mu_i + z_i}``.
The checks here do two things: compare that product form against the
matrix entry built from W-functions at a generic rational point, and
evaluate the product form as a q-series at the specialization
``t = q^k``, ``b = q^{m + 2k(n-1)}`` (regularized by the limit variable
``T``) at every signed permutation of the index vector.
"""
from __future__ import annotations

from itertools import permutations, product

from ..bailey import m_b, s_diag
from ..bcw import WContext
from ..partitions import pad, partitions_in_box
from ..qfact import QMono, QTerm, RationalAlg
from .common import Outcome, compare, passed, rand_rat


def _inf(m: QMono) -> QTerm:
    return QTerm.poch_inf(m, 2)


def _coord_factor(Y, q, t, bh, width, n):
    """``(q b^{-1/2} t^{n-1} Y^{+-1})_oo / (q^{-k} b^{-1/2} Y^{+-1})_oo``."""
    up = q * t ** (n - 1) / bh
    down = q ** (-width) / bh
    return _inf(up * Y) * _inf(up / Y) / (_inf(down * Y) * _inf(down / Y))


def _pair_factor(X, q, t):
    """``(qX/t, q/(Xt))_oo / (qX, q/X)_oo``."""
    return _inf(q * X / t) * _inf(q / (X * t)) / (_inf(q * X) * _inf(q / X))


def m_box_F(ys, q, t, bh, width) -> QTerm:
    """The symmetric product ``F(y)`` whose ratio ``F(q^mu q^z)/F(q^z)`` is ``M_{k^n mu}(b)``."""
    n = len(ys)
    out = QTerm()
    for Y in ys:
        out = out * _coord_factor(Y, q, t, bh, width, n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * _pair_factor(ys[i] / ys[j], q, t) * _pair_factor(ys[i] * ys[j], q, t)
    return out


def s_G(ys, q, bh, sigma, rho) -> QTerm:
    """The symmetric product ``G(y)`` with ``S_lam(b) = G(q^lam q^z) / G(q^z)``."""
    out = QTerm()
    for Y in ys:
        out = out * _inf(q * bh / rho * Y) * _inf(q * bh / (rho * Y))
        out = out / (_inf(sigma / bh * Y) * _inf(sigma / (bh * Y)))
    return out


def _shifted(zs, mu, q):
    return [Z * q ** m for Z, m in zip(zs, pad(mu, len(zs)))]


def signed_permutations(n: int):
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield perm, signs


def _act(ys, perm, signs):
    return [ys[p] if s == 1 else 1 / ys[p] for p, s in zip(perm, signs)]


def check_m_box_rational(p, order, rng) -> Outcome:
    """Product form of ``M_{k^n mu}(b)`` against the W-function entry at a rational point.

    ``q = s^2`` so the product form, written in ``sqrtq``, has a numeric value.
    """
    n, width = p["n"], p.get("width", 2)
    s, tc, bh = rand_rat(rng), rand_rat(rng), rand_rat(rng)
    while abs(s) == 1 or abs(tc) == 1:
        s, tc = rand_rat(rng), rand_rat(rng)
    point = {"sqrtq": s, "t": tc, "b_half": bh, "width": width}
    ctx = WContext(RationalAlg(s * s, tc), n)
    q, t, B = QMono(1, 2), QMono(tc), QMono(bh)
    zs = [B * t ** (-i) for i in range(n)]
    lam = (width,) * n
    base = m_box_F(zs, q, t, B, width)
    pairs = []
    for mu in partitions_in_box(n, width):
        prod_form = (m_box_F(_shifted(zs, mu, q), q, t, B, width) / base).value(s)
        pairs.append((f"mu={list(mu)}", m_b(lam, mu, bh * bh, ctx), prod_form))
    return compare(pairs, point)


def check_s_rational(p, order, rng) -> Outcome:
    """Product form of ``S_lam(b)`` against the diagonal entry, and padding invariance."""
    n, width = p["n"], p.get("width", 2)
    s, tc, bh, sg, rh = (rand_rat(rng) for _ in range(5))
    while abs(s) == 1 or abs(tc) == 1:
        s, tc = rand_rat(rng), rand_rat(rng)
    point = {"sqrtq": s, "t": tc, "b_half": bh, "sigma": sg, "rho": rh}
    ctx = WContext(RationalAlg(s * s, tc), n)
    ctx1 = WContext(RationalAlg(s * s, tc), n + 1)
    q, t, B = QMono(1, 2), QMono(tc), QMono(bh)
    zs = [B * t ** (-i) for i in range(n)]
    base = s_G(zs, q, B, QMono(sg), QMono(rh))
    pairs = []
    for lam in partitions_in_box(n, width):
        prod_form = (s_G(_shifted(zs, lam, q), q, B, QMono(sg), QMono(rh)) / base).value(s)
        b = bh * bh
        pairs.append((f"lam={list(lam)}", s_diag(lam, b, sg, rh, ctx), prod_form))
        pairs.append((f"pad lam={list(lam)}", s_diag(lam, b, sg, rh, ctx), s_diag(lam, b, sg, rh, ctx1)))
    return compare(pairs, point)


def _special(n, k, m):
    """``q``, ``t = q^k T^2``, ``b^{1/2} = q^{m/2 + k(n-1)} T^{2n-1}`` and ``q^{z_i}``."""
    q = QMono(1, 2)
    t = QMono(1, 2 * k, 2)
    bh = QMono(1, m + 2 * k * (n - 1), 2 * n - 1)
    zs = [bh * t ** (-i) for i in range(n)]
    return q, t, bh, zs


def check_m_box_symmetry(p, order, rng) -> Outcome:
    """``F(w(q^{mu+z})) / F(q^z)`` agrees for every signed permutation ``w`` as a q-series."""
    n, k, m, width = p["n"], p["k"], p["m"], p.get("width", 2)
    q, t, bh, zs = _special(n, k, m)
    base = m_box_F(zs, q, t, bh, width)
    point = {"n": n, "k": k, "m": m, "width": width}
    pairs = []
    for mu in partitions_in_box(n, width):
        ys = _shifted(zs, mu, q)
        ref = (m_box_F(ys, q, t, bh, width) / base).evaluate(order)
        for perm, signs in signed_permutations(n):
            img = (m_box_F(_act(ys, perm, signs), q, t, bh, width) / base).evaluate(order)
            pairs.append((f"mu={list(mu)} w={perm},{signs}", ref, img))
    return compare(pairs, point, order)


def check_s_symmetry(p, order, rng) -> Outcome:
    """``S_lam(b)`` product form under a sign flip of each coordinate, as a q-series."""
    n, k, m, width = p["n"], p["k"], p["m"], p.get("width", 2)
    q, t, bh, zs = _special(n, k, m)
    sg, rh = QMono(rand_rat(rng), 1), QMono(rand_rat(rng), 3)
    base = s_G(zs, q, bh, sg, rh)
    point = {"n": n, "k": k, "m": m, "sigma": sg, "rho": rh}
    pairs = []
    for lam in partitions_in_box(n, width):
        ys = _shifted(zs, lam, q)
        ref = (s_G(ys, q, bh, sg, rh) / base).evaluate(order)
        for i in range(n):
            flipped = [1 / Y if j == i else Y for j, Y in enumerate(ys)]
            pairs.append((f"lam={list(lam)} flip {i + 1}", ref, (s_G(flipped, q, bh, sg, rh) / base).evaluate(order)))
    return compare(pairs, point, order)


def check_hyperoctahedral(p, order, rng) -> Outcome:
    """All four parts: product forms at a rational point, then the q-series symmetry."""
    o = order if order is not None else 40
    for fn in (check_m_box_rational, check_s_rational):
        out = fn(p, None, rng)
        if not out.passed:
            out.label = f"{fn.__name__}: {out.label}"
            return out
    for fn in (check_m_box_symmetry, check_s_symmetry):
        out = fn(p, o, rng)
        if not out.passed:
            out.label = f"{fn.__name__}: {out.label}"
            return out
    return passed({"n": p["n"], "k": p["k"], "m": p["m"]})
