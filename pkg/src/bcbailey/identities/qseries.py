"""One-variable q-series building blocks shared by the identity checkers.

Everything here returns :class:`~bcbailey.scalar.Series` in ``sqrtq``, so an
exponent ``e`` stands for ``q**(e/2)``.  Exact polynomials (``prec is None``)
are used for the Schur polynomials and q-binomial coefficients; products and
theta functions are truncated at a caller-supplied order, also in sqrtq units.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from ..partitions import bounded_vectors
from ..qfact import QMono, QPow, QTerm, sign, theta_q
from ..scalar import SQRTQ, Series


def qpoly(coeffs: Sequence, shift: int = 0) -> Series:
    """Exact polynomial ``sum coeffs[i] q^(i + shift)``."""
    return Series.from_dict({2 * (i + shift): c for i, c in enumerate(coeffs) if c}, SQRTQ)


def qcoeffs(s: Series) -> list:
    """Coefficients in powers of ``q`` of an exact polynomial with even exponents."""
    d = s.to_dict()
    if any(e % 2 for e in d):
        raise ValueError("series has half-integer powers of q")
    if not d:
        return []
    lo, hi = min(d), max(d)
    if lo < 0:
        raise ValueError("negative powers of q")
    return [d.get(e, 0) for e in range(0, hi + 1, 2)]


def qmono(c=1, e_q: Fraction | int = 0) -> Series:
    """Exact monomial ``c q^e_q`` with ``e_q`` a half-integer."""
    e2 = Fraction(e_q) * 2
    if e2.denominator != 1:
        raise ValueError(f"exponent {e_q} is not a half-integer")
    return Series.monomial(c, int(e2))


def finite_poch(e_q: int, m: int) -> Series:
    """Exact ``(q^e_q; q)_m`` for ``m >= 0``."""
    out = Series.one()
    for i in range(m):
        out = out.mul_binomial(1, 2 * (e_q + i))
    return out


def inf_prod(terms: Iterable[tuple], order: int) -> Series:
    """``prod (c q^e; q^s)_oo^mult`` for ``terms = [(c, e_sqrtq, s_sqrtq, mult), ...]``."""
    t = QTerm()
    for c, e, s, mult in terms:
        t = t * QTerm.poch_inf(QMono(c, e), s, mult)
    return t.evaluate(order)


def qinf(e_q: int, base_q: int, order: int, c=1) -> Series:
    """``(c q^e; q^base)_oo`` truncated at sqrtq ``order``."""
    return inf_prod([(c, 2 * e_q, 2 * base_q, 1)], order)


def theta(z_q: Fraction | int, base_q: int, order: int) -> Series:
    """``theta(q^z; q^base) = (q^z, q^base/q^z; q^base)_oo``; ``z`` may be a half-integer."""
    e2 = Fraction(z_q) * 2
    if e2.denominator != 1:
        raise ValueError(f"theta argument exponent {z_q} is not a half-integer")
    return theta_q(QPow(1, int(e2)), QPow(1, 2 * base_q), order)


def euler(order: int) -> Series:
    """``(q; q)_oo``."""
    return qinf(1, 1, order)


# -- q-binomials and Schur polynomials ------------------------------------------------


@lru_cache(maxsize=None)
def qbinom(n: int, m: int) -> Series:
    """Gaussian binomial ``[n, m]_q`` as an exact polynomial (zero outside ``0 <= m <= n``)."""
    if m < 0 or n < 0 or m > n:
        return Series.zero()
    num = finite_poch(1, n)
    den = finite_poch(1, m) * finite_poch(1, n - m)
    deg = 2 * m * (n - m)
    quo = num.truncate(deg) / den.truncate(deg)
    return Series(quo.coeffs, quo.val, None, SQRTQ)


def qbinom_theorem(delta: int, x_coeff_q: int = 0) -> list:
    """Coefficients of ``(q^c x; q)_delta`` in ``x`` by the terminating q-binomial theorem."""
    return [qbinom(delta, m).scale(sign(m)).shift(2 * (m * (m - 1) // 2 + m * x_coeff_q))
            for m in range(delta + 1)]


@lru_cache(maxsize=None)
def _schur(kind: str, delta: int) -> Series:
    if kind not in ("D", "E"):
        raise ValueError(kind)
    base = {0: qpoly([1]), 1: qpoly([1, 1]) if kind == "D" else qpoly([1])}
    if delta in base:
        return base[delta]
    if delta > 1:
        return _schur(kind, delta - 1) + _schur(kind, delta - 2).shift(2 * delta)
    # run the recursion backwards: X_{d-2} = (X_d - X_{d-1}) q^{-d}
    return (_schur(kind, delta + 2) - _schur(kind, delta + 1)).shift(-2 * (delta + 2))


def schur_D(delta: int) -> Series:
    """``D_delta(q)``; negative indices continue the recursion backwards."""
    return _schur("D", delta)


def schur_E(delta: int) -> Series:
    """``E_delta(q)``; negative indices continue the recursion backwards."""
    return _schur("E", delta)


def _floor_binom(top: int, expr_num: int) -> Series:
    return qbinom(top, math.floor(Fraction(expr_num, 2)))


def schur_E_alt(delta: int) -> Series:
    """``E_{delta-2}`` from its alternating q-binomial sum (``delta >= 2``)."""
    out = Series.zero()
    for k in range(-delta, delta + 1):
        b = _floor_binom(delta - 1, delta + 1 - 5 * k)
        if not b.is_zero():
            out = out + b.scale(sign(k)).shift(k * (5 * k - 3))
    return out


def schur_D_alt(delta: int) -> Series:
    """``D_{delta-2}`` from its alternating q-binomial sum (``delta >= 2``)."""
    out = Series.zero()
    for k in range(-delta, delta + 1):
        b = _floor_binom(delta - 1, delta - 1 - 5 * k)
        if not b.is_zero():
            out = out + b.scale(sign(k)).shift(k * (5 * k + 1))
    return out


def f_delta(delta: int) -> list:
    """Coefficients (in ``x``) of ``f_delta(x) = (1 - x^2 q^delta)(qx; q)_{delta-1}``; ``f_0 = 1 + x``."""
    if delta < 0:
        raise ValueError("f_delta needs delta >= 0")
    if delta == 0:
        return [qpoly([1]), qpoly([1])]
    inner = qbinom_theorem(delta - 1, 1)
    out = [Series.zero() for _ in range(delta + 2)]
    for m, c in enumerate(inner):
        out[m] = out[m] + c
        out[m + 2] = out[m + 2] - c.shift(2 * delta)
    return out


def f_delta_expanded(delta: int) -> list:
    """The same coefficients by multiplying out the factors one at a time."""
    if delta == 0:
        return [qpoly([1]), qpoly([1])]
    poly = [Series.one()]
    for i in range(1, delta):
        # multiply by (1 - q^i x)
        nxt = [Series.zero() for _ in range(len(poly) + 1)]
        for k, c in enumerate(poly):
            nxt[k] = nxt[k] + c
            nxt[k + 1] = nxt[k + 1] - c.shift(2 * i)
        poly = nxt
    out = [Series.zero() for _ in range(len(poly) + 2)]
    for k, c in enumerate(poly):
        out[k] = out[k] + c
        out[k + 2] = out[k + 2] - c.shift(2 * delta)
    return out


def pi_k(k: int, order: int) -> Series:
    """``(-1)^k q^{-C(k,2)} [theta(q^2;q^5) E_{k-2} - theta(q;q^5) D_{k-2}]``."""
    lead = k * (k - 1)  # sqrtq exponent of q^{C(k,2)}
    o = order + lead
    inner = theta(2, 5, o) * schur_E(k - 2) - theta(1, 5, o) * schur_D(k - 2)
    return inner.shift(-lead).scale(sign(k))


def gis_rhs(delta: int, order: int) -> Series:
    """Product side of the generalized Rogers-Ramanujan identity with shift ``delta``."""
    work = order
    while True:
        out = (qinf(5, 5, work) / euler(work)) * pi_k(delta, work)
        if out.prec >= order:
            return out.truncate(order)
        # negative powers in pi_delta eat precision; widen and retry
        work += order - out.prec


def gis_lhs(delta: int, order: int) -> Series:
    """``sum_m q^{m(m+delta)} / (q)_m`` truncated at sqrtq ``order``."""
    out = Series.zero(SQRTQ, order)
    m = 0
    while True:
        e = 2 * m * (m + delta)
        if m > 0 and e > order and m + delta > 0:
            break
        if e <= order:
            out = out + finite_poch(1, m).truncate(order - e).inverse().shift(e)
        m += 1
    return out


def rr_product(delta: int, order: int) -> Series:
    """``1 / ((q^{1+delta}; q^5)_oo (q^{4-delta}; q^5)_oo)``."""
    return inf_prod([(1, 2 * (1 + delta), 10, -1), (1, 2 * (4 - delta), 10, -1)], order)


# -- truncation certificates and lattice sums ------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Lower bound ``val(term(mu)) >= c sum mu_i^2 - d sum |mu_i| - e`` in sqrtq units."""

    c: Fraction
    d: Fraction = Fraction(0)
    e: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c", "d", "e"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c <= 0:
            raise ValueError("a growth certificate needs c > 0")
        if self.d < 0:
            raise ValueError("a growth certificate needs d >= 0")

    def bound(self, mu: Sequence[int]) -> Fraction:
        return self.c * sum(m * m for m in mu) - self.d * sum(abs(m) for m in mu) - self.e

    def radius(self, n: int, order: int) -> int:
        """Smallest ``T`` such that every vector with some ``|mu_i| > T`` has valuation above ``order``."""
        c, d, e = self.c, self.d, self.e
        slack = (n - 1) * d * d / (4 * c)
        T = 0
        while True:
            s = T + 1
            if s >= d / (2 * c) and c * s * s - d * s - slack - e > order:
                return T
            T += 1


class CertificateError(ValueError):
    """A term fell below the valuation promised by its growth certificate."""


def _checked(term_val, mu, cert: Certificate, order: int):
    """Validate a term against the certificate and return it as a truncated Series.

    A :class:`QTerm` is checked through its exact valuation before it is
    expanded, so terms that start above ``order`` cost almost nothing.
    """
    if isinstance(term_val, QTerm):
        nz = term_val.normalized()
        if nz is None:
            return None
        v = nz[1]
    else:
        v = term_val.val if not term_val.is_zero() else None
    if v is not None and v < cert.bound(mu):
        raise CertificateError(f"term at {tuple(mu)} has valuation {v} below the certified {cert.bound(mu)}")
    if isinstance(term_val, QTerm):
        return None if v > order else term_val.evaluate(order, nz)
    return term_val.truncate(order)


def multilateral_sum(term: Callable, n: int, order: int, cert: Certificate | None,
                     radius: int | None = None) -> Series:
    """``sum_{mu in Z^n} term(mu)`` truncated at ``order`` using the certificate's radius.

    ``term`` returns a Series or a QTerm (or None for a vanishing term).  ``radius``
    overrides the certified radius; it may only enlarge it, and then every
    point of the box is evaluated rather than pruned by the certificate, so
    that a wider box is an independent check on the truncation.
    """
    if cert is None:
        raise ValueError("multilateral_sum refuses to run without a growth certificate")
    T = cert.radius(n, order)
    if radius is not None:
        if radius < T:
            raise ValueError(f"radius {radius} is below the certified {T}")
        T = radius
    out = Series.zero(SQRTQ, order)
    for mu in bounded_vectors(n, T):
        if radius is None and cert.bound(mu) > order:
            continue
        v = term(mu)
        if v is None:
            continue
        v = _checked(v, mu, cert, order)
        if v is not None:
            out = out + v
    return out


def partition_sum(term: Callable, n: int, order: int, cert: Certificate,
                  radius: int | None = None) -> Series:
    """``sum`` over partitions with at most ``n`` parts, truncated with the same certificate."""
    T = cert.radius(n, order)
    if radius is not None:
        if radius < T:
            raise ValueError(f"radius {radius} is below the certified {T}")
        T = radius
    out = Series.zero(SQRTQ, order)
    for lam in _partitions_bounded(n, T):
        if radius is None and cert.bound(lam) > order:
            continue
        v = term(lam)
        if v is None:
            continue
        v = _checked(v, lam, cert, order)
        if v is not None:
            out = out + v
    return out


def orthant_sum(term: Callable, n: int, order: int, cert: Certificate,
                radius: int | None = None) -> Series:
    """``sum`` over vectors in ``Z_{>=0}^n``, truncated with the certificate's radius."""
    T = cert.radius(n, order)
    if radius is not None:
        if radius < T:
            raise ValueError(f"radius {radius} is below the certified {T}")
        T = radius
    out = Series.zero(SQRTQ, order)
    for mu in product(range(T + 1), repeat=n):
        if radius is None and cert.bound(mu) > order:
            continue
        v = term(mu)
        if v is None:
            continue
        v = _checked(v, mu, cert, order)
        if v is not None:
            out = out + v
    return out


def _partitions_bounded(n: int, T: int):
    """Partitions with at most ``n`` parts, every part at most ``T``."""
    def rec(prefix, hi, left):
        if left == 0:
            yield prefix
            return
        for p in range(hi, -1, -1):
            yield from rec(prefix + (p,), p, left - 1)

    for lam in rec((), T, n):
        yield tuple(p for p in lam if p)


__all__ = [
    "qpoly", "qcoeffs", "qmono", "finite_poch", "inf_prod", "qinf", "theta", "euler", "qbinom",
    "qbinom_theorem", "schur_D", "schur_E", "schur_D_alt", "schur_E_alt", "f_delta", "f_delta_expanded",
    "pi_k", "gis_rhs", "gis_lhs", "rr_product", "Certificate", "CertificateError", "multilateral_sum",
    "partition_sum", "orthant_sum",
]
