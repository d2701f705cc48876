"""Multivariable Rogers-Selberg, Rogers-Ramanujan and pentagonal-number identities.

The rank-``n`` sums are evaluated as q-series in ``sqrtq``.  Specializing
``t = q^k`` directly puts ``0/0`` into individual terms, so the checks in the
BC-type Rogers-Selberg family carry ``t = q^k T^2`` and ``b = q^{m+2k(n-1)}
T^{2n-1}`` through the factor calculus and take ``T -> 1`` term by term.

Every multilateral sum is truncated through a growth certificate; passing
``radius`` to a check widens the box, which is how the radius-doubling
tests confirm that the truncation drops nothing.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product

from ..bailey import _theta_ratio
from ..bcw import WContext, _pair_products
from ..partitions import distinct_permutations, n_conj, n_stat, pad, weight
from ..qfact import FloatAlg, PoleError, QMono, QTerm, QTermAlg, sign
from ..scalar import SQRTQ, Series, det
from .common import Outcome, compare, float_compare, passed, rand_rat, rand_unit
from .qseries import (
    Certificate, euler, gis_lhs, multilateral_sum, orthant_sum, partition_sum, pi_k, qinf, rr_product,
    theta,
)


def _q(e2: int, c=1) -> QTerm:
    """The monomial ``c q^{e2/2}``."""
    return QTerm.mono(QMono(c, e2))


def _inf_ratio(a2: int, b2: int) -> QTerm:
    """``(q^{a2/2})_oo / (q^{b2/2})_oo``; for ``a2 - b2`` even this is a finite product."""
    return QTerm.poch_inf(QMono(1, a2), 2) / QTerm.poch_inf(QMono(1, b2), 2)


def _qpoch(e2: int, m: int) -> QTerm:
    """``(q^{e2/2}; q)_m`` for ``m >= 0``."""
    return QTerm.poch(QMono(1, e2), m, 2)


# ---------------------------------------------------------------------------
# BC-type Rogers-Selberg


def _t_pairs(ctx, lam, b):
    """``prod_{i<j} (t^{j-i+1})_d / (t^{j-i})_d``, times the ``b``-pair block when ``b`` is given."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    L = pad(lam, n)
    out = alg.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, s = L[i - 1] - L[j - 1], L[i - 1] + L[j - 1]
            out = out * alg.div(alg.poch(t ** (j - i + 1), d), alg.poch(t ** (j - i), d))
            if b is not None:
                out = out * alg.div(alg.poch(q * b * t ** (2 - i - j), s), alg.poch(q * b * t ** (1 - i - j), s))
    return out


def rs_bc_lhs_term(lam, b, ctx):
    """Well-poised term: the terminating side of the Bailey pair, summed over ``l(lam) <= n``."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    w = weight(lam)
    out = alg.mono(b ** (2 * w) * t ** ((1 - n) * w - 3 * n_stat(lam)) * q ** (2 * w + 5 * n_conj(lam)))
    if w % 2:
        out = -out
    out = out * alg.div(alg.poch_part(b * t ** (1 - n), lam), alg.poch_part(q * t ** (n - 1), lam))
    return out * _theta_ratio(ctx, b, lam) * _pair_products(ctx, lam, b) * _t_pairs(ctx, lam, b)


def rs_bc_rhs_term(lam, b, ctx):
    """Term of the Rogers-Selberg side, before the prefactor ``(qb)_{oo^n}``."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    w = weight(lam)
    out = alg.mono(b ** w * q ** (w + 2 * n_conj(lam)) * t ** ((1 - n) * w))
    out = alg.div(out, alg.poch_part(q * t ** (n - 1), lam))
    return out * _pair_products(ctx, lam, None, with_b=False) * _t_pairs(ctx, lam, None)


def rs_bc_certificates(n: int, k: int):
    """Growth certificates for the two sides at ``t = q^k``, ``b = q^{m+2k(n-1)}`` with ``m >= 0``."""
    return Certificate(5, 5 + 8 * k * (n - 1), 2), Certificate(2, 2 + 2 * k * (n - 1), 2)


def rs_bc_sides(n: int, k: int, m: int, order: int, radius: int | None = None):
    """Both sides as q-series at ``t = q^k``, ``b = q^{m+2k(n-1)}``."""
    ctx = WContext(QTermAlg(QMono(1, 2), QMono(1, 2 * k, 2)), n)
    b = QMono(1, 2 * (m + 2 * k * (n - 1)), 2 * n - 1)
    cl, cr = rs_bc_certificates(n, k)
    lhs = partition_sum(lambda lam: rs_bc_lhs_term(lam, b, ctx), n, order, cl, radius)
    rhs = partition_sum(lambda lam: rs_bc_rhs_term(lam, b, ctx), n, order, cr, radius)
    pre = QTerm()
    for i in range(n):
        pre = pre * QTerm.poch_inf(ctx.q * b * ctx.t ** (-i), 2)
    return lhs, (rhs * pre.evaluate(order)).truncate(order)


def _float_partitions(n: int, max_weight: int):
    def rec(prefix, hi, left, budget):
        if left == 0:
            yield tuple(p for p in prefix if p)
            return
        for p in range(min(hi, budget), -1, -1):
            yield from rec(prefix + (p,), p, left - 1, budget - p)

    yield from rec((), max_weight, n, max_weight)


def rs_bc_float(n: int, q: complex, t: complex, b: complex, max_weight: int = 60):
    """Both sides in complex floating point, summing partitions up to ``max_weight``."""
    if abs(q) > 0.3:
        raise ValueError("float mode needs |q| <= 0.3")
    ctx = WContext(FloatAlg(q, t), n)
    lhs = rhs = 0
    for lam in _float_partitions(n, max_weight):
        lhs += rs_bc_lhs_term(lam, b, ctx)
        rhs += rs_bc_rhs_term(lam, b, ctx)
    pre = 1
    for i in range(n):
        pre *= ctx.alg.poch_inf(q * b * t ** (-i))
    return lhs, rhs * pre


def check_rs_bc(p, order, rng) -> Outcome:
    n, k, m = p["n"], p.get("k", 0), p.get("m", 0)
    if p.get("mode") == "float":
        q = complex(p.get("q", 0.2))
        t = complex(p["t"]) if "t" in p else complex(rand_unit(rng, 0.1, 0.5))
        b = complex(p["b"]) if "b" in p else complex(rand_unit(rng, 0.1, 0.5))
        lhs, rhs = rs_bc_float(n, q, t, b)
        return float_compare([("rs-bc", lhs, rhs)], {"n": n, "q": q, "t": t, "b": b})
    lhs, rhs = rs_bc_sides(n, k, m, order, p.get("radius"))
    return compare([("rs-bc", lhs, rhs)], {"n": n, "k": k, "m": m}, order)


# ---------------------------------------------------------------------------
# Specialized Rogers-Selberg: t = q^k, b = q^{m + 2k(n-1)}


def _pi_pair(k: int, factor: QTerm, k_zero) -> QTerm:
    """``prod^{k, s}``: the factor itself for ``k > 0``, otherwise the collapse value."""
    return factor if k else k_zero


def rs_spec_unilateral_term(lam, n: int, k: int, m: int) -> QTerm:
    """Term of the partition sum with the prefactor ``prod_i (q^{1+k(n-i)})_oo`` pulled inside."""
    L = pad(lam, n)
    out = QTerm()
    for i in range(1, n + 1):
        li = L[i - 1]
        out = out * _q(2 * ((m + k * (n - 1)) * li + li * li))
        out = out * QTerm.poch_inf(QMono(1, 2 * (1 + k * (n - i) + li)), 2)
    if k == 0:
        return out * QTerm(distinct_permutations(lam, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = L[i - 1] - L[j - 1]
            out = out * _inf_ratio(2 * (1 + k * (j - i - 1) + d), 2 * (1 + k * (j - i) + d))
            out = out * _inf_ratio(2 * (k * (j - i) + d), 2 * (k * (j - i + 1) + d))
    return out


def rs_spec_bilateral_term(lam, n: int, k: int, m: int) -> QTerm:
    """Term of the multilateral theta-type sum at the lattice point ``lam``."""
    out = QTerm()
    for i in range(1, n + 1):
        li = lam[i - 1]
        # q^{(-1/2 + 2m + 3k(n-i)) l + 5 l^2 / 2} in sqrtq
        out = out * _q((-1 + 4 * m + 6 * k * (n - i)) * li + 5 * li * li, sign(li))
        if m:
            out = out * _inf_ratio(2 * (1 + k * (n - i) + li), 2 * (m + k * (n - i) + li))
    if k:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d, s = lam[i - 1] - lam[j - 1], lam[i - 1] + lam[j - 1]
                out = out * _inf_ratio(2 * (1 + k * (j - i - 1) + d), 2 * (m + k * (1 + 2 * n - i - j) + s))
                out = out * _inf_ratio(2 * (1 + m + k * (2 * n - i - j - 1) + s), 2 * (k * (j - i + 1) + d))
    return out


def _spec_bilateral_cert(n: int, k: int, m: int) -> Certificate:
    # 5 l^2 in sqrtq, the linear exponent, the m - 1 single factors and a
    # linear allowance for the pair products
    return Certificate(5, abs(4 * m - 1 + 6 * k * (n - 1)) + 2 * max(m - 1, 0) + 6 * k * (n - 1))


def _spec_unilateral_cert(n: int, k: int, m: int) -> Certificate:
    return Certificate(2, 2 * (2 * k + 1) * (n - 1), 4 * k * k * n * n)


def rs_spec_sides(n: int, k: int, m: int, order: int, radius: int | None = None):
    """The partition side and the multilateral side, both as q-series."""
    lhs = partition_sum(lambda lam: rs_spec_unilateral_term(lam, n, k, m), n, order,
                        _spec_unilateral_cert(n, k, m), radius)
    rhs = multilateral_sum(lambda lam: rs_spec_bilateral_term(lam, n, k, m), n, order,
                           _spec_bilateral_cert(n, k, m), radius)
    return lhs, rhs


def rs_orthant_term(lam, n: int, k: int, m: int) -> QTerm:
    """Term of the sum over ``Z_{>=0}^n`` with the shifted quadratic exponents."""
    out = QTerm()
    for i in range(1, n + 1):
        u = lam[i - 1] - k * (n - i)
        out = out * _q(2 * ((m + k * (n - 1)) * u + u * u)) / _qpoch(2, lam[i - 1])
    if k:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d = lam[i - 1] - lam[j - 1]
                out = out * _inf_ratio(2 * (1 - k + d), 2 * (k + d))
    return out


def _orthant_cert(n: int, k: int, m: int) -> Certificate:
    return Certificate(2, 4 * k * (n - 1))


def rs_orthant_sides(n: int, k: int, m: int, order: int, radius: int | None = None):
    """The orthant sum against ``1/(q)_oo^n`` times the multilateral sum."""
    lhs = orthant_sum(lambda lam: rs_orthant_term(lam, n, k, m), n, order,
                      _orthant_cert(n, k, m), radius)
    rhs = multilateral_sum(lambda lam: rs_spec_bilateral_term(lam, n, k, m), n, order,
                           _spec_bilateral_cert(n, k, m), radius)
    return lhs, (rhs / euler(order) ** n).truncate(order)


def check_rs_specialized(p, order, rng) -> Outcome:
    n, k, m = p["n"], p["k"], p["m"]
    r = p.get("radius")
    a, b = rs_spec_sides(n, k, m, order, r)
    c, d = rs_orthant_sides(n, k, m, order, r)
    return compare([("partition-vs-multilateral", a, b), ("orthant-vs-multilateral", c, d)],
                   {"n": n, "k": k, "m": m}, order)


# ---------------------------------------------------------------------------
# Weyl denominator and Macdonald-type finite sums


def positive_roots(kind: str, n: int):
    """Positive roots as integer vectors; ``kind`` is one of A, B, C, D (A means ``A_{n-1}``)."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            out.append(tuple(v))
            if kind != "A":
                v = [0] * n
                v[i] = v[j] = 1
                out.append(tuple(v))
    if kind in ("B", "C"):
        for i in range(n):
            v = [0] * n
            v[i] = 1 if kind == "B" else 2
            out.append(tuple(v))
    return out


def weyl_group(kind: str, n: int):
    """Group elements as ``(perm, signs)``; ``w(v)[perm[i]] = signs[i] * v[i]``."""
    for perm in permutations(range(n)):
        if kind == "A":
            yield perm, (1,) * n
            continue
        for signs in product((1, -1), repeat=n):
            if kind == "D" and signs.count(-1) % 2:
                continue
            yield perm, signs


def act(w, v):
    perm, signs = w
    out = [0] * len(v)
    for i, (p, s) in enumerate(zip(perm, signs)):
        out[p] = s * v[i]
    return tuple(out)


def _root_length(v) -> int:
    return sum(x * x for x in v)


def _exp_mono(v, xs) -> QMono:
    """``e^{v}`` at ``e^{e_i} = xs[i]`` (QMono)."""
    out = QMono(1)
    for a, x in zip(v, xs):
        if a:
            out = out * x ** a
    return out


def weyl_term(kind: str, w, xs, eps=None, u=None) -> QTerm:
    """``prod_{a>0} (1 - u_a e^{-wa}) / (1 - eps_a e^{-wa})``.

    ``eps`` and ``u`` map a root length (1, 2 or 4) to a coefficient; missing
    lengths use ``eps = 1`` and ``u = 0``.
    """
    out = QTerm()
    for a in positive_roots(kind, len(xs)):
        ln = _root_length(a)
        y = _exp_mono(tuple(-c for c in act(w, a)), xs)
        e = (eps or {}).get(ln, 1)
        out = out / QTerm.factor(y * e)
        uu = (u or {}).get(ln, 0)
        if uu:
            out = out * QTerm.factor(y * uu)
    return out


def inversion_weight(kind: str, n: int, u) -> Fraction:
    """``sum_w prod_{a in R(w)} u_a`` over the Weyl group, ``R(w)`` the positive roots sent negative."""
    roots = positive_roots(kind, n)
    rootset = set(roots)
    total = Fraction(0)
    for w in weyl_group(kind, n):
        term = Fraction(1)
        for a in roots:
            if act(w, a) not in rootset:
                term *= u.get(_root_length(a), 0)
        total += term
    return total


def weyl_sum_value(kind: str, xs, x_value, eps=None, u=None) -> Fraction:
    """The Weyl sum as an exact rational at ``sqrtq = x_value``."""
    return sum((weyl_term(kind, w, xs, eps, u).value(x_value) for w in weyl_group(kind, len(xs))), Fraction(0))


def weyl_sum_series(kind: str, xs, order: int, eps=None, u=None) -> Series:
    out = Series.zero(SQRTQ, order)
    for w in weyl_group(kind, len(xs)):
        out = out + weyl_term(kind, w, xs, eps, u).evaluate(order)
    return out


def _generic_point(n: int, rng):
    """``x_i = c_i q^{y_i}`` with random rational ``c_i`` and small integer ``y_i``."""
    return [QMono(rand_rat(rng), 2 * rng.randint(-2, 2)) for _ in range(n)]


def check_weyl_denominator(p, order, rng) -> Outcome:
    """``sum_w prod_{a>0} 1/(1 - e^{-wa}) = 1`` for the types in ``p["types"]``.

    Each type is checked as a q-series at a generic point and, with generic
    ``u_a`` per root length, the Macdonald form against the inversion sum
    in exact rationals.
    """
    n = p.get("n", 2)
    kinds = p.get("types", ("A", "B", "C", "D"))
    one = Series.one(SQRTQ, order)
    pairs = []
    point = {"n": n}
    for kind in kinds:
        if kind == "D" and n < 2:
            continue
        xs = _generic_point(n, rng)
        point[f"x_{kind}"] = [str(x) for x in xs]
        pairs.append((f"{kind} q-series", weyl_sum_series(kind, xs, order), one))
        u = {1: rand_rat(rng), 2: rand_rat(rng), 4: rand_rat(rng)}
        s = rand_rat(rng)
        while abs(s) == 1:
            s = rand_rat(rng)
        try:
            val = weyl_sum_value(kind, xs, s, u=u)
        except PoleError:
            continue
        pairs.append((f"{kind} macdonald", val, inversion_weight(kind, n, u)))
    return compare(pairs, point, order)


def macd_point(n: int, k: int, m: int, lam, half_m: bool = True):
    """``x_i = q^{m/2 + k(n-i) + lam_i}`` as QMono (``m`` enters unhalved when ``half_m`` is false)."""
    L = pad(lam, n)
    base = m if half_m else 2 * m
    return [QMono(1, base + 2 * (k * (n - i) + L[i - 1])) for i in range(1, n + 1)]


def _macd_check(p, order, kind, eps, label) -> Outcome:
    n, k, m = p.get("n", 2), p["k"], p["m"]
    lams = [tuple(p["lam"])] if "lam" in p else [(), (1,), (2,), (1, 1), (2, 1), (3, 1)]
    pairs, skipped = [], []
    for lam in lams:
        xs = macd_point(n, k, m, lam)
        try:
            total = weyl_sum_series(kind, xs, order, eps)
        except PoleError:
            skipped.append(list(lam))
            continue
        pairs.append((f"{label} lam={list(lam)}", total, Series.one(SQRTQ, order)))
    out = compare(pairs, {"n": n, "k": k, "m": m}, order)
    if skipped:
        out.extra["skipped"] = skipped
    return out


def check_macd_cn_spec(p, order, rng) -> Outcome:
    """Type C sum at ``x_i = q^{m/2 + k(n-i) + lam_i}``; degenerate points (a vanishing denominator) are skipped."""
    return _macd_check(p, order, "C", None, "macd-cn")


def check_macd_bn_minus(p, order, rng) -> Outcome:
    """Type B sum with short-root denominators ``1 + w(x_i^{-1})`` at the same points."""
    return _macd_check(p, order, "B", {1: -1}, "macd-bn-minus")


# ---------------------------------------------------------------------------
# Rogers-Ramanujan identities of types B_n and D_n


def _widened(build, order: int) -> Series:
    """Run ``build(work)`` at growing working orders until the result is known through ``order``."""
    work = order
    while True:
        out = build(work)
        if out.prec is None or out.prec >= order:
            return out.truncate(order)
        work += max(order - out.prec, 2)


def _theta5(a: int, shift2: int, work: int) -> Series:
    """``q^{shift2/2} theta(q^a; q^5)``."""
    return theta(a, 5, work + max(0, -shift2)).shift(shift2)


def theta_det_matrix(variant: str, n: int, d: int, work: int):
    """Entries of the theta-function determinant for ``variant`` in {dn, bn, epnt-k1}."""
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if variant == "dn":
                e2 = (j - 1) * (2 * (n - i) + d)
                row.append(_theta5(4 * n + 2 * d + 1 - 4 * i + j, e2, work)
                           + _theta5(4 * n + 2 * d + 3 - 4 * i - j, -e2, work))
            elif variant == "bn":
                e2 = (2 * j - 1) * (n - i + 1)
                row.append(_theta5(6 + 4 * n - 4 * i + j, e2, work)
                           - _theta5(7 + 4 * n - 4 * i - j, -e2, work))
            elif variant == "epnt-k1":
                e2 = 2 * (n - i) * (j - 1)
                row.append(theta(2 * n - 2 * i + j, 3, work + e2).shift(e2)
                           + theta(2 * n - 2 * i - j + 2, 3, work + e2).shift(-e2))
            else:
                raise ValueError(f"unknown determinant variant {variant!r}")
        rows.append(row)
    return rows


def theta_det(variant: str, n: int, d: int, order: int) -> Series:
    """The bare theta-function determinant, known through ``order`` (sqrtq)."""
    return _widened(lambda w: det(theta_det_matrix(variant, n, d, w)), order)


def _rr_ratio(work: int) -> Series:
    """``(q^5; q^5)_oo / (q)_oo``."""
    return qinf(5, 5, work) / euler(work)


def theta_det_rhs(variant: str, n: int, d: int, order: int) -> Series:
    """Product side written with a theta-function determinant.

    ``dn``: the D_n Rogers-Ramanujan side with ``d = delta``.  ``bn``: the
    B_n side (``d`` is ignored; the identity lives at ``m = 2``).
    ``epnt-k1``: the determinant divided by its prefactor, so that it equals
    ``theta(q;q^3)^n prod_{i<j} (1 - q^{j-i})``.
    """
    c2 = n * (n - 1) // 2
    if variant == "dn":
        lead = sum((n - i) * (2 * (n - i) + d) for i in range(1, n + 1))

        def build(w):
            body = det(theta_det_matrix("dn", n, d, w + lead)) * _rr_ratio(w + lead) ** n
            return body.shift(lead).scale(Fraction(sign(c2), 2))
    elif variant == "bn":
        lead = sum((2 * (n - i) + 1) * (n - i + 1) for i in range(1, n + 1))

        def build(w):
            body = det(theta_det_matrix("bn", n, 2, w + lead)) * _rr_ratio(w + lead) ** n
            return body.shift(lead).scale(sign(c2 + n))
    elif variant == "epnt-k1":
        pref = epnt_det_prefactor(n)

        def build(w):
            return det(theta_det_matrix("epnt-k1", n, 1, w + 2 * pref)).shift(-pref).scale(Fraction(sign(c2), 2))
    else:
        raise ValueError(f"unknown determinant variant {variant!r}")
    return _widened(build, order)


def rr_orthant_sum(n: int, m: int, order: int, radius: int | None = None) -> Series:
    """``sum_{lam >= 0} prod q^{(m+n-1)u_i + u_i^2}/(q)_{lam_i} prod_{i<j} (1 - q^{lam_i - lam_j})``, ``u_i = lam_i - n + i``."""
    return orthant_sum(lambda lam: rs_orthant_term(lam, n, 1, m), n, order, _orthant_cert(n, 1, m), radius)


def rr_multilateral(n: int, m: int, order: int, radius: int | None = None) -> Series:
    """``1/(q)_oo^n`` times the multilateral sum at ``k = 1``."""
    s = multilateral_sum(lambda lam: rs_spec_bilateral_term(lam, n, 1, m), n, order,
                         _spec_bilateral_cert(n, 1, m), radius)
    return (s / euler(order) ** n).truncate(order)


def rr_intro_dn(n: int, d: int, order: int) -> Series:
    """The D_n product side with the theta-quotient prefactor ``1/(2 theta(q;q^5)^n theta(q^2;q^5)^n)``."""
    c2 = n * (n - 1) // 2
    lead = c2 * (4 * n + 3 * d - 2) // 3  # sqrtq exponent of q^{C(n,2)(4n+3d-2)/6}

    def build(w):
        den = (theta(1, 5, w) * theta(2, 5, w)) ** n
        return (det(theta_det_matrix("dn", n, d, w)) / den).shift(lead).scale(Fraction(sign(c2), 2))
    return _widened(build, order)


def rr_intro_bn(n: int, order: int) -> Series:
    c2 = n * (n - 1) // 2
    lead = n * (n + 1) * (4 * n - 1) // 6

    def build(w):
        den = (theta(1, 5, w) * theta(2, 5, w)) ** n
        return (det(theta_det_matrix("bn", n, 2, w)) / den).shift(lead).scale(sign(c2 + n))
    return _widened(build, order)


def check_rr_trivial_k0(p, order, rng) -> Outcome:
    """The ``k = 0`` collapse: every form is the n-th power of a one-variable sum."""
    n, m = p["n"], p["m"]
    r = p.get("radius")
    orth = orthant_sum(lambda lam: rs_orthant_term(lam, n, 0, m), n, order, _orthant_cert(n, 0, m), r)
    part, bil = rs_spec_sides(n, 0, m, order, r)
    bil = (bil / euler(order) ** n).truncate(order)
    part = (part / euler(order) ** n).truncate(order)
    pairs = [("orthant-vs-power", orth, gis_lhs(m, order) ** n),
             ("partition-vs-orthant", part, orth),
             ("multilateral-vs-orthant", bil, orth)]
    if m in (0, 1):
        pairs.append(("product", orth, rr_product(m, order) ** n))
    return compare(pairs, {"n": n, "m": m}, order)


def check_rr_dn(p, order, rng) -> Outcome:
    n, d = p["n"], p["delta"]
    r = p.get("radius")
    lhs = rr_orthant_sum(n, d, order, r)
    pairs = [("sum-vs-multilateral", lhs, rr_multilateral(n, d, order, r)),
             ("sum-vs-theta-det", lhs, theta_det_rhs("dn", n, d, order)),
             ("theta-quotient-form", lhs, rr_intro_dn(n, d, order))]
    if n == 1:
        pairs.append(("classical", lhs, rr_product(d, order)))
    return compare(pairs, {"n": n, "delta": d}, order)


def check_rr_bn(p, order, rng) -> Outcome:
    n = p["n"]
    r = p.get("radius")
    lhs = rr_orthant_sum(n, 2, order, r)
    pairs = [("sum-vs-multilateral", lhs, rr_multilateral(n, 2, order, r)),
             ("sum-vs-theta-det", lhs, theta_det_rhs("bn", n, 2, order)),
             ("theta-quotient-form", lhs, rr_intro_bn(n, order))]
    if n == 1:
        pairs.append(("one-variable", lhs, gis_lhs(2, order)))
    return compare(pairs, {"n": n}, order)


def pi_toeplitz_det(n: int, m: int, order: int) -> Series:
    """``det(pi_{m+i-j})``."""
    return _widened(lambda w: det([[pi_k(m + i - j, w) for j in range(n)] for i in range(n)]), order)


def rr_det_sides(variant: str, n: int, d: int, order: int, form: str = "derived"):
    """Toeplitz determinant of ``pi`` values (with its prefactor) against the theta determinant.

    For ``bn`` the derived sign is ``(-1)^n``; ``form="printed"`` uses
    ``(-1)^C(n,2)``, which agrees only for ``n = 0, 3 mod 4``.
    """
    c2 = n * (n - 1) // 2
    if variant == "dn":
        e2 = c2 * (2 - 2 * n - 3 * d)  # sqrtq exponent of q^{C(n,2)(1-n-3d/2)}
        lhs = _widened(lambda w: pi_toeplitz_det(n, d, w - e2).shift(e2).scale(2), order)
    elif variant == "bn":
        d = 2
        e2 = -n * (2 * n * n + 3 * n - 3) // 2
        sgn = sign(c2) if form == "printed" else sign(n)
        lhs = _widened(lambda w: pi_toeplitz_det(n, 2, w - e2).shift(e2).scale(sgn), order)
    else:
        raise ValueError(f"unknown determinant variant {variant!r}")
    return lhs, theta_det(variant, n, d, order)


def gis_toeplitz_form(n: int, m: int, order: int, use_pi: bool = False) -> Series:
    """``(-1)^C(n,2) prod_i q^{(m-1+i)(i-n)} det(g_{m+i-j})``.

    ``g_k`` is the one-variable sum ``sum_l q^{kl + l^2}/(q)_l``, or with
    ``use_pi`` its product form ``(q^5;q^5)_oo/(q)_oo pi_k``.
    """
    c2 = n * (n - 1) // 2
    e2 = sum(2 * (m - 1 + i) * (i - n) for i in range(1, n + 1))

    def build(w):
        if use_pi:
            body = pi_toeplitz_det(n, m, w) * _rr_ratio(w) ** n
        else:
            body = det([[gis_lhs(m + i - j, w) for j in range(n)] for i in range(n)])
        return body.shift(e2).scale(sign(c2))
    return _widened(lambda w: build(w - e2), order)


def check_rr_det(p, order, rng) -> Outcome:
    variant = p["variant"]
    n = p["n"]
    d = p.get("delta", 0) if variant == "dn" else 2
    lhs, rhs = rr_det_sides(variant, n, d, order)
    # the Toeplitz form of the sum side, through the one-variable identity
    orth = rr_orthant_sum(n, d, order, p.get("radius"))
    return compare([("toeplitz-vs-theta-det", lhs, rhs),
                    ("sum-vs-gis-toeplitz", orth, gis_toeplitz_form(n, d, order)),
                    ("gis-vs-pi-toeplitz", orth, gis_toeplitz_form(n, d, order, use_pi=True))],
                   {"variant": variant, "n": n, "delta": d}, order)


# ---------------------------------------------------------------------------
# Pentagonal number theorems


def _n_vec(mu) -> int:
    """``n(mu) = sum (i-1) mu_i`` for any integer vector."""
    return sum(i * x for i, x in enumerate(mu))


def _n_conj_vec(mu) -> int:
    """``n(mu') = sum C(mu_i, 2)``, extended to negative entries."""
    return sum(x * (x - 1) // 2 for x in mu)


def epnt_lhs(n: int, k: int, order: int) -> Series:
    """``(q)_oo^n prod_{i<j} (q^{k(j-i)})_oo/(q^{k(j-i+1)})_oo``; at ``k = 0`` the ratio is taken as 1."""
    out = QTerm.poch_inf(QMono(1, 2), 2, n)
    if k:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _inf_ratio(2 * k * (j - i), 2 * k * (j - i + 1))
    return out.evaluate(order)


def epnt_lhs_finite(n: int, k: int, order: int) -> Series:
    """``(q)_oo^n prod_{d=1}^{n-1} prod_{r=kd}^{kd+k-1} (1 - q^r)^{n-d}``."""
    out = QTerm.poch_inf(QMono(1, 2), 2, n)
    for d in range(1, n):
        for r in range(k * d, k * d + k):
            out = out * QTerm.factor(QMono(1, 2 * r), n - d)
    return out.evaluate(order)


def epnt_lhs_printed_alt(n: int, k: int, order: int) -> Series:
    """``prod_i (q)_oo (1 - q^{ki})^{n-ki}``; equal to the product side only for ``k <= 1``."""
    out = QTerm.poch_inf(QMono(1, 2), 2, n)
    for i in range(1, n + 1):
        if k * i:
            out = out * QTerm.factor(QMono(1, 2 * k * i), n - k * i)
    return out.evaluate(order)


def epnt_term(mu, n: int, k: int, m: int = 0) -> QTerm:
    """Term of the multilateral pentagonal sum at ``mu`` (``m = 0`` is the headline identity)."""
    w = sum(mu)
    e2 = 2 * (-k * _n_vec(mu) + 3 * _n_conj_vec(mu) + w * (m + k * (n - 1) + 1))
    out = _q(e2, sign(w))
    if m:
        for i in range(1, n + 1):
            out = out * _inf_ratio(2 * (1 + k * (n - i) + mu[i - 1]), 2 * (m + k * (n - i) + mu[i - 1]))
    if k:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d, s = mu[i - 1] - mu[j - 1], mu[i - 1] + mu[j - 1]
                out = out * _inf_ratio(2 * (1 + k * (j - i - 1) + d), 2 * (m + k * (1 + 2 * n - i - j) + s))
                out = out * _inf_ratio(2 * (1 + m + k * (2 * n - i - j - 1) + s), 2 * (k * (j - i + 1) + d))
    return out


def epnt_term_finite(mu, n: int, k: int) -> QTerm:
    """The ``m = 0`` term with the pair ratios written as products of ``2k - 1`` factors."""
    w = sum(mu)
    out = _q(2 * (-k * _n_vec(mu) + 3 * _n_conj_vec(mu) + w * (k * (n - 1) + 1)), sign(w))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, s = mu[i - 1] - mu[j - 1], mu[i - 1] + mu[j - 1]
            for r in range(2 * k - 1):
                out = out * QTerm.factor(QMono(1, 2 * (r + 1 + k * (j - i - 1) + d)))
                out = out * QTerm.factor(QMono(1, 2 * (r + 1 + k * (2 * n - i - j - 1) + s)))
    return out


def epnt_cert(n: int, k: int, m: int = 0) -> Certificate:
    # 3 mu^2 in sqrtq from n(mu'); the linear part collects the |mu| and n(mu)
    # coefficients, the m - 1 single factors and 2k - 1 factors per pair
    lin = 1 + 2 * (m + 2 * k * (n - 1)) + 2 * max(m - 1, 0) + 2 * (2 * k - 1 if k else 0) * (n - 1)
    return Certificate(3, lin)


def epnt_rhs(n: int, k: int, order: int, m: int = 0, radius: int | None = None, finite: bool = False) -> Series:
    if finite:
        term = lambda mu: epnt_term_finite(mu, n, k)  # noqa: E731
    else:
        term = lambda mu: epnt_term(mu, n, k, m)  # noqa: E731
    return multilateral_sum(term, n, order, epnt_cert(n, k, m), radius)


def check_epnt_family(p, order, rng) -> Outcome:
    """Product side against the multilateral sum, plus the finite-product forms.

    ``p["m"]`` (default 0) selects the family member with the extra single
    factors; the product side does not depend on it.
    """
    n, k, m = p["n"], p["k"], p.get("m", 0)
    r = p.get("radius")
    lhs = epnt_lhs(n, k, order)
    pairs = [("product-vs-multilateral", lhs, epnt_rhs(n, k, order, m, r)),
             ("finite-product-form", lhs, epnt_lhs_finite(n, k, order))]
    if m == 0 and k:
        pairs.append(("finite-factor-sum", lhs, epnt_rhs(n, k, order, 0, r, finite=True)))
    if n == 1:
        pairs.append(("euler", lhs, euler(order)))
    out = compare(pairs, {"n": n, "k": k, "m": m}, order)
    alt = epnt_lhs_printed_alt(n, k, order)
    out.extra["printed_alt_form_holds"] = (alt - lhs).truncate(order).is_zero()
    if n == 1:
        out.extra["unilateral_sum_holds"] = (epnt_unilateral(order) - lhs).truncate(order).is_zero()
    return out


def epnt_unilateral(order: int) -> Series:
    """``sum_{m >= 0} (-1)^m q^{m + 3C(m,2)}``: only the non-negative half of the pentagonal sum.

    It misses the exponents ``m(3m+1)/2`` (2, 7, 15, ...), so it is not equal
    to ``(q)_oo``; kept to record that mismatch.
    """
    out = Series.zero(SQRTQ, order)
    m = 0
    while 2 * (m + 3 * m * (m - 1) // 2) <= order:
        out = out + Series.monomial(sign(m), 2 * (m + 3 * m * (m - 1) // 2))
        m += 1
    return out.truncate(order)


def epnt_det_prefactor(n: int, form: str = "derived") -> int:
    """sqrtq exponent of the power of q in front of the k = 1 determinant identity.

    Derived: ``-(n-1)n(2n-1)/6``; ``form="printed"`` gives ``-n(n+1)(2n+1)/6``.
    """
    if form == "printed":
        return -n * (n + 1) * (2 * n + 1) // 3
    return -(n - 1) * n * (2 * n - 1) // 3


def epnt_det_sides(n: int, order: int, form: str = "derived"):
    """``2 (-1)^C(n,2) q^PREF theta(q;q^3)^n prod_{i<j} (1 - q^{j-i})`` against the theta determinant."""
    pref = epnt_det_prefactor(n, form)
    c2 = n * (n - 1) // 2

    def build(w):
        body = theta(1, 3, w) ** n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                body = body.mul_binomial(1, 2 * (j - i))
        return body.shift(pref).scale(2 * sign(c2))
    return _widened(lambda w: build(w - pref), order), theta_det("epnt-k1", n, 1, order)


def check_epnt_det_k1(p, order, rng) -> Outcome:
    n = p["n"]
    lhs, rhs = epnt_det_sides(n, order)
    # tie the theta-product side back to the k = 1 product with (q)_oo = theta(q;q^3)(q^3;q^3)_oo
    prod_side = (theta_det_rhs("epnt-k1", n, 1, order) * qinf(3, 3, order) ** n).truncate(order)
    out = compare([("prefactor-form", lhs, rhs), ("product-form", prod_side, epnt_lhs(n, 1, order))],
                  {"n": n}, order)
    pl, pr = epnt_det_sides(n, order, "printed")
    out.extra["printed_prefactor_holds"] = (pl - pr).truncate(order).is_zero()
    return out


def epnt_limit_term(mu, b, ctx):
    """Term of the ``(qb)_{oo^n}`` expansion left when the 6phi5 parameters run to infinity."""
    alg, q, t, n = ctx.alg, ctx.q, ctx.t, ctx.n
    w = weight(mu)
    out = alg.mono(b ** w * t ** ((1 - n) * w - n_stat(mu)) * q ** (w + 3 * n_conj(mu)))
    if w % 2:
        out = -out
    out = out * alg.div(alg.poch_part(b * t ** (1 - n), mu), alg.poch_part(q * t ** (n - 1), mu))
    return out * _theta_ratio(ctx, b, mu) * _pair_products(ctx, mu, b) * _t_pairs(ctx, mu, b)


def epnt_terminating_sides(n: int, width: int, q, t, b, sigma, rho):
    """The 6phi5 sum over ``mu`` inside the box ``width^n`` in the form used for the limit."""
    from ..partitions import partitions_in_box
    from ..qfact import RationalAlg
    ctx = WContext(RationalAlg(q, t), n)
    alg = ctx.alg
    lam = (width,) * n
    lhs = alg.div(alg.poch_part(q * b, lam) * alg.poch_part(q * b / (rho * sigma), lam),
                  alg.poch_part(q * b / sigma, lam) * alg.poch_part(q * b / rho, lam))
    rhs = 0
    z = q ** (1 + width) * b / (sigma * rho)
    for mu in partitions_in_box(n, width):
        w = weight(mu)
        term = t ** (2 * n_stat(mu) + (1 - n) * w) * z ** w
        num = (alg.poch_part(b * t ** (1 - n), mu) * alg.poch_part(sigma, mu) * alg.poch_part(rho, mu)
               * alg.poch_part(q ** (-width), mu))
        den = (alg.poch_part(q * t ** (n - 1), mu) * alg.poch_part(q * b / sigma, mu)
               * alg.poch_part(q * b / rho, mu) * alg.poch_part(q ** (1 + width) * b, mu))
        term = term * alg.div(num, den) * _theta_ratio(ctx, b, mu) * _pair_products(ctx, mu, b)
        rhs = rhs + term * _t_pairs(ctx, mu, b)
    return lhs, rhs


def epnt_limit_sides(n: int, k: int, m: int, order: int, radius: int | None = None):
    """Both sides at ``t = q^k``, ``b = q^{m+2k(n-1)}`` through the ``T -> 1`` limit."""
    ctx = WContext(QTermAlg(QMono(1, 2), QMono(1, 2 * k, 2)), n)
    b = QMono(1, 2 * (m + 2 * k * (n - 1)), 2 * n - 1)
    cert = Certificate(3, 3 + 4 * k * (n - 1), 2)
    rhs = partition_sum(lambda mu: epnt_limit_term(mu, b, ctx), n, order, cert, radius)
    lhs = QTerm()
    for i in range(n):
        lhs = lhs * QTerm.poch_inf(ctx.q * b * ctx.t ** (-i), 2)
    return lhs.evaluate(order), rhs


def epnt_limit_float(n: int, q: complex, t: complex, b: complex, max_weight: int = 60):
    ctx = WContext(FloatAlg(q, t), n)
    rhs = sum(epnt_limit_term(mu, b, ctx) for mu in _float_partitions(n, max_weight))
    lhs = 1
    for i in range(n):
        lhs *= ctx.alg.poch_inf(q * b * t ** (-i))
    return lhs, rhs


def check_epnt_6phi5_limit(p, order, rng) -> Outcome:
    """The limiting expansion of ``(qb)_{oo^n}``, with the terminating sum it comes from."""
    n = p["n"]
    if p.get("mode") == "float":
        q = complex(p.get("q", 0.2))
        t = complex(p["t"]) if "t" in p else complex(rand_unit(rng, 0.1, 0.5))
        b = complex(p["b"]) if "b" in p else complex(rand_unit(rng, 0.1, 0.5))
        lhs, rhs = epnt_limit_float(n, q, t, b)
        return float_compare([("limit", lhs, rhs)], {"n": n, "q": q, "t": t, "b": b})
    k, m = p.get("k", 1), p.get("m", 0)
    point = {"n": n, "k": k, "m": m}
    q, t, b, s, r = (rand_rat(rng) for _ in range(5))
    while abs(q) == 1 or abs(t) == 1:
        q, t = rand_rat(rng), rand_rat(rng)
    point.update({"q": q, "t": t, "b": b, "sigma": s, "rho": r})
    pairs = []
    for width in (1, 2):
        try:
            pairs.append((f"terminating width={width}",) + epnt_terminating_sides(n, width, q, t, b, s, r))
        except PoleError:
            pass
    lhs, rhs = epnt_limit_sides(n, k, m, order, p.get("radius"))
    pairs.append(("limit", lhs, rhs))
    return compare(pairs, point, order)
