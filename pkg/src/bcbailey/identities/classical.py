"""One-variable identities: Jacobi triple product, Rogers-Ramanujan and relatives."""
from __future__ import annotations

from fractions import Fraction

from ..qfact import QMono, QTerm, sign
from ..scalar import SQRTQ, Series
from .common import Outcome, compare, float_compare, passed, rand_rat, rand_unit
from .qseries import (
    Certificate, euler, finite_poch, gis_lhs, gis_rhs, inf_prod, multilateral_sum, qbinom, qbinom_theorem,
    rr_product, schur_D, schur_D_alt, schur_E, schur_E_alt, theta,
)


def jtp_sum(c, e2: int, order: int) -> Series:
    """``sum_m (-1)^m q^C(m,2) z^m`` with ``z = c sqrtq^e2``."""
    # valuation m^2 - m + e2*m in sqrtq
    cert = Certificate(1, abs(e2 - 1))
    c = Fraction(c)
    return multilateral_sum(lambda m: Series.monomial(sign(m[0]) * c ** m[0], m[0] * m[0] - m[0] + e2 * m[0]),
                            1, order, cert)


def check_jtp(p, order, rng) -> Outcome:
    """``theta(z; q) (q; q)_oo`` against the bilateral sum for ``z = c q^(e/2)``."""
    e2 = p.get("e2", 1)
    c = p.get("c")
    if c is None:
        c = rand_rat(rng) if e2 in (0, 2) else 1
    c = Fraction(c)
    if not 0 <= e2 <= 2:
        raise ValueError("jtp takes z = c q^(e2/2) with 0 <= e2 <= 2")
    # theta(z; q) = (z; q)_oo (q/z; q)_oo
    lhs = inf_prod([(c, e2, 2, 1), (1 / c, 2 - e2, 2, 1)], order + 4) * euler(order + 4)
    rhs = jtp_sum(c, e2, order)
    return compare([("jtp", lhs.truncate(order), rhs)], {"c": c, "e2": e2}, order)


def check_rr_classical(p, order, rng) -> Outcome:
    d = p["delta"]
    lhs = gis_lhs(d, order)
    rhs = rr_product(d, order)
    out = compare([("rr", lhs, rhs)], {"delta": d}, order)
    if out.passed and order >= 8:
        out.extra["q4"] = lhs.coeff(8)
    return out


def check_gis(p, order, rng) -> Outcome:
    d = p["delta"]
    return compare([("gis", gis_lhs(d, order), gis_rhs(d, order))], {"delta": d}, order)


def rs1_lhs(b_coeff, b_e2: int, order: int) -> Series:
    """``sum_m b^m q^{m^2} / (q)_m`` with ``b = c sqrtq^e2`` (``e2 >= 0``)."""
    out = Series.zero(SQRTQ, order)
    m = 0
    while 2 * m * m + b_e2 * m <= order:
        e = 2 * m * m + b_e2 * m
        out = out + finite_poch(1, m).truncate(order - e).inverse().shift(e).scale(Fraction(b_coeff) ** m)
        m += 1
    return out


def rs1_rhs(b_coeff, b_e2: int, order: int) -> Series:
    """Well-poised side ``1/(qb)_oo sum_m (-1)^m b^2m q^{m(5m-1)/2} (1-bq^2m)/(1-b) (b)_m/(q)_m``."""
    c = Fraction(b_coeff)
    s = Series.zero(SQRTQ, order)
    m = 0
    while True:
        e = m * (5 * m - 1) + 2 * m * b_e2
        if e > order:
            break
        # (1 - b q^{2m}) (b)_m / (1 - b) = (1 - b q^{2m}) (bq)_{m-1} for m >= 1
        if m == 0:
            num = Series.one()
        else:
            num = QTerm.poch(QMono(c, b_e2 + 2), m - 1).evaluate(order - e).mul_binomial(c, b_e2 + 4 * m)
        term = (num.truncate(order - e) / finite_poch(1, m).truncate(order - e)).shift(e).scale(sign(m) * c ** (2 * m))
        s = s + term
        m += 1
    return s * inf_prod([(c, b_e2 + 2, 2, -1)], order)


def _rs1_float(b: complex, q: complex, tol=1e-18):
    lhs = 0
    m = 0
    pq = 1
    while True:
        t = b ** m * q ** (m * m) / pq
        lhs += t
        if m > 3 and abs(t) < tol:
            break
        m += 1
        pq *= 1 - q ** m
    s = 0
    m = 0
    pb = 1  # (b)_m
    pq = 1
    while True:
        t = sign(m) * b ** (2 * m) * q ** (m * (5 * m - 1) / 2) * (1 - b * q ** (2 * m)) / (1 - b) * pb / pq
        s += t
        if m > 3 and abs(t) < tol:
            break
        pb *= 1 - b * q ** m
        m += 1
        pq *= 1 - q ** m
    prod = 1
    x = b * q
    while abs(x) > tol:
        prod *= 1 - x
        x *= q
    return lhs, s / prod


def check_rs_1dim(p, order, rng) -> Outcome:
    mode = p.get("mode", "q-series")
    if mode == "float":
        q = complex(p.get("q", 0.2))
        b = complex(p["b"]) if "b" in p else complex(rand_unit(rng, 0.2, 1.5))
        lhs, rhs = _rs1_float(b, q)
        return float_compare([("rs-1dim", lhs, rhs)], {"q": q, "b": b})
    d = p["delta"]
    c = Fraction(p.get("c", 1))
    lhs = rs1_lhs(c, 2 * d, order)
    rhs = rs1_rhs(c, 2 * d, order)
    return compare([("rs-1dim", lhs, rhs)], {"delta": d, "c": c}, order)


def check_rs_bilateral(p, order, rng) -> Outcome:
    d = p["delta"]
    # sqrtq exponent 5m(m-1) + 4(d+1)m
    cert = Certificate(5, abs(4 * d - 1))
    pad = 2
    s = multilateral_sum(lambda m: Series.monomial(sign(m[0]), 5 * m[0] * (m[0] - 1) + 4 * (d + 1) * m[0]),
                         1, order + pad, cert)
    rhs = (s / euler(order + pad)).truncate(order)
    return compare([("rs-bilateral", gis_lhs(d, order), rhs)], {"delta": d}, order)


def _inf_ratio(c, e2: int, order: int) -> Series:
    """``(c q^{1+e}; q)_oo / (c q^e; q)_oo`` with ``e = e2/2``, reduced through the factor calculus."""
    t = QTerm.poch_inf(QMono(c, e2 + 2), 2) / QTerm.poch_inf(QMono(c, e2), 2)
    return t.evaluate(order)


def check_macd_c1(p, order, rng) -> Outcome:
    """``1 = (q^{1+2z+2m})_oo/(q^{2z+2m})_oo + (q^{1-2z-2m})_oo/(q^{-2z-2m})_oo`` at ``z = delta/2 + mu``."""
    d, mu, m = p["delta"], p.get("mu", 0), p["m"]
    e2 = 2 * (d + 2 * mu + 2 * m)
    point = {"delta": d, "mu": mu, "m": m}
    if e2 == 0:
        out = passed(point)
        out.extra["skipped"] = "pole of both terms"
        return out
    # a negative exponent leaves a Laurent tail; give it room
    work = order + abs(e2) + 2
    total = _inf_ratio(1, e2, work) + _inf_ratio(1, -e2, work)
    return compare([("macd-c1", total.truncate(order), Series.one(SQRTQ, order))], point, order)


def check_macd_bc1(p, order, rng) -> Outcome:
    """``(-q^{1+z+m})_oo/(-q^{z+m})_oo + (-q^{1-z-m})_oo/(-q^{-z-m})_oo = 1`` at ``z = delta/2``."""
    d, m = p["delta"], p["m"]
    e2 = d + 2 * m
    work = order + abs(e2) + 2
    total = _inf_ratio(-1, e2, work) + _inf_ratio(-1, -e2, work)
    return compare([("macd-bc1", total.truncate(order), Series.one(SQRTQ, order))], {"delta": d, "m": m}, order)


def check_qbinom_theorem(p, order, rng) -> Outcome:
    """``(x; q)_delta`` multiplied out against the q-binomial expansion, coefficient by coefficient."""
    d = p["delta"]
    poly = [Series.one()]
    for i in range(d):
        nxt = [Series.zero() for _ in range(len(poly) + 1)]
        for k, c in enumerate(poly):
            nxt[k] = nxt[k] + c
            nxt[k + 1] = nxt[k + 1] - c.shift(2 * i)
        poly = nxt
    rhs = qbinom_theorem(d)
    return compare([(f"x^{k}", a, b) for k, (a, b) in enumerate(zip(poly, rhs))], {"delta": d})


def check_schur_alt(p, order, rng) -> Outcome:
    d = p["delta"]
    return compare([("E", schur_E(d - 2), schur_E_alt(d)), ("D", schur_D(d - 2), schur_D_alt(d))], {"delta": d})

