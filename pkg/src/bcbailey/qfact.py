"""Pochhammer symbols, theta functions and the evaluation back ends.

Scalar helpers (:func:`qpoch`, :func:`epoch`, :func:`theta_p`, ...) work on
plain values.  The summand formulas of the BC_n layer are written once against
an *algebra*, which decides what a parameter is and how ``theta`` and
monomials turn into ring values:

``RationalAlg``
    parameters and values are exact rationals, ``theta(x) = 1 - x``.
``FloatAlg``
    complex doubles.
``EllipticAlg``
    parameters are :class:`PMono` (``c * p**j``) and values are truncated
    series in ``p``; ``theta`` is the modified Jacobi theta function.
``QTermAlg``
    parameters are :class:`QMono` (``c * sqrtq**e * T**j``) and values are
    :class:`QTerm` factor products.  ``T`` is an auxiliary variable tending
    to 1; it resolves the 0/0 factors that appear when ``t`` and ``b`` are
    specialized to powers of ``q``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .partitions import n_conj, n_stat, weight
from .scalar import P, SQRTQ, Series


class PoleError(ZeroDivisionError):
    """A denominator factor vanishes at the requested parameter point."""


def _is_zero(x) -> bool:
    if isinstance(x, Series):
        return x.is_zero()
    return x == 0


# -- scalar Pochhammers --------------------------------------------------------------


def qpoch(a, q, m: int):
    """``(a; q)_m`` with the reciprocal convention for negative ``m``."""
    out = 1
    if m >= 0:
        x = a
        for _ in range(m):
            out = out * (1 - x)
            x = x * q
        return out
    x = a
    for _ in range(-m):
        x = x / q
        f = 1 - x
        if _is_zero(f):
            raise PoleError(f"factor 1 - {x} vanishes in (a;q)_{m}")
        out = out * f
    return 1 / out if not isinstance(out, Series) else out.inverse()


def flip_poch(v, q, m: int):
    """Right-hand side of ``(v)_m = (-v)^m q^C(m,2) / (q/v)_{-m}``."""
    return (-v) ** m * q ** (m * (m - 1) // 2) / qpoch(q / v, q, -m)


@dataclass(frozen=True)
class QPow:
    """``c * q**(e/2)``: a q-power with half-integer exponent, in sqrtq units."""

    c: Fraction
    e: int

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


def qpoch_inf(a_spec: QPow, order: int, base: int = 2) -> Series:
    """``(c x^e; x^base)_oo`` in ``x = sqrtq`` truncated at ``order``."""
    if base <= 0:
        raise ValueError("base exponent must be positive")
    if a_spec.e <= 0 and abs(a_spec.c) >= 1:
        raise ValueError(f"non-convergent formal product (a;q)_oo with a = {a_spec}")
    t = QTerm.poch_inf(QMono(a_spec.c, a_spec.e), base)
    return t.evaluate(order)


def theta_p(x, p_order: int) -> Series:
    """``theta(x; p) = (x; p)_oo (p/x; p)_oo`` to ``p**p_order``."""
    if _is_zero(x):
        raise ValueError("theta(x; p) needs x != 0")
    out = Series.one(P, p_order)
    for i in range(p_order + 1):
        out = out.mul_binomial(x, i)
        if i + 1 <= p_order:
            out = out.mul_binomial(1 / x if isinstance(x, complex) else 1 / Fraction(x), i + 1)
    return out


def theta_q(z_spec: QPow, base_spec: QPow, order: int) -> Series:
    """``theta(z; Q) = (z, Q/z; Q)_oo`` with ``z`` and ``Q`` given as q-powers."""
    if base_spec.c != 1 or base_spec.e <= 0:
        raise ValueError("theta base must be a positive power of q")
    z = QMono(z_spec.c, z_spec.e)
    Q = QMono(1, base_spec.e)
    t = QTerm.poch_inf(z, base_spec.e) * QTerm.poch_inf(Q / z, base_spec.e)
    return t.evaluate(order)


def epoch(a, q, m: int, p_order: int) -> Series:
    """Elliptic shifted factorial ``prod_{k<m} theta(a q^k; p)``."""
    out = Series.one(P, p_order)
    if m >= 0:
        for k in range(m):
            out = out * theta_p(a * q ** k, p_order)
        return out
    for k in range(1, -m + 1):
        out = out * theta_p(a * q ** (-k), p_order)
    if out.is_zero():
        raise PoleError(f"vanishing theta factor in elliptic factorial of index {m}")
    return out.inverse()


def poch_partition(a, lam: Sequence[int], q, t, p_order: int | None = None):
    """``(a; q, p, t)_lam = prod_i (a t^{1-i}; q, p)_{lam_i}``.

    With ``p_order`` None the basic (p = 0) symbol is returned as a scalar.
    Entries of ``lam`` may be negative (signed vectors).
    """
    out = 1 if p_order is None else Series.one(P, p_order)
    for i, m in enumerate(lam):
        x = a * t ** (-i)
        out = out * (qpoch(x, q, m) if p_order is None else epoch(x, q, m, p_order))
    return out


def limit_rule(x, mu: Sequence[int], q, t):
    """Closed form of ``lim_{a->0} a^{|mu|} (x/a; q, t)_mu``."""
    w = weight(mu)
    return sign(w) * x ** w * t ** (-n_stat(mu)) * q ** n_conj(mu)


def reversal_flip(v, mu: Sequence[int], q, t, n: int):
    """Right-hand side of the partition-reversal flip of ``(v; q, t)_mu``."""
    mu = tuple(mu) + (0,) * (n - len(mu))
    rev = tuple(-m for m in reversed(mu))
    w = weight(mu)
    num = sign(w) * v ** w * q ** n_conj(mu) * t ** (-n_stat(mu))
    return num / poch_partition(q * t ** (n - 1) / v, rev, q, t)


# -- monomial parameters ---------------------------------------------------------------


class PMono:
    """An elliptic-tier parameter ``c * p**j`` with rational ``c``."""

    __slots__ = ("c", "j")

    def __init__(self, c, j: int = 0):
        self.c = Fraction(c)
        self.j = j

    @staticmethod
    def _lift(o):
        return o if isinstance(o, PMono) else PMono(o)

    def __mul__(self, o):
        o = self._lift(o)
        return PMono(self.c * o.c, self.j + o.j)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return PMono(self.c / o.c, self.j - o.j)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, k: int):
        return PMono(self.c ** k, self.j * k)

    def __eq__(self, o):
        o = self._lift(o)
        return self.c == o.c and self.j == o.j

    def __hash__(self):
        return hash(("P", self.c, self.j))

    def __repr__(self):
        return f"{self.c}*p^{self.j}" if self.j else f"{self.c}"


class QMono:
    """A q-series-tier parameter ``c * sqrtq**e * T**j``."""

    __slots__ = ("c", "e", "j")

    def __init__(self, c=1, e: int = 0, j: int = 0):
        self.c = Fraction(c)
        self.e = e
        self.j = j

    @staticmethod
    def _lift(o):
        return o if isinstance(o, QMono) else QMono(o)

    def __mul__(self, o):
        o = self._lift(o)
        return QMono(self.c * o.c, self.e + o.e, self.j + o.j)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return QMono(self.c / o.c, self.e - o.e, self.j - o.j)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, k: int):
        return QMono(self.c ** k, self.e * k, self.j * k)

    def __neg__(self):
        return QMono(-self.c, self.e, self.j)

    def __eq__(self, o):
        o = self._lift(o)
        return (self.c, self.e, self.j) == (o.c, o.e, o.j)

    def __hash__(self):
        return hash(("Q", self.c, self.e, self.j))

    def __repr__(self):
        return f"{self.c}*x^{self.e}*T^{self.j}"


# -- factor products -------------------------------------------------------------------


class QTerm:
    """``coef * x**xexp * prod (1 - c x^e T^j)^m * prod (c x^e T^j; x^s)_oo^m``.

    ``x`` is ``sqrtq``.  Evaluation takes the limit ``T -> 1``: a factor
    ``1 - T^j`` behaves like ``-j * eps``, and the net power of ``eps`` must
    vanish (a positive power gives zero, a negative one is a pole).
    """

    __slots__ = ("coef", "xexp", "fin", "inf")

    def __init__(self, coef=1, xexp: int = 0, fin=None, inf=None):
        self.coef = Fraction(coef)
        self.xexp = xexp
        self.fin = fin or {}
        self.inf = inf or {}

    @classmethod
    def factor(cls, m: QMono, mult: int = 1) -> "QTerm":
        if m.c == 0:
            return cls()
        return cls(fin={(m.c, m.e, m.j): mult})

    @classmethod
    def poch(cls, m: QMono, n: int, step: int = 2) -> "QTerm":
        """``(m; x^step)_n`` including the negative-index reciprocal."""
        fin = {}
        if n >= 0:
            for i in range(n):
                k = (m.c, m.e + step * i, m.j)
                fin[k] = fin.get(k, 0) + 1
        else:
            for i in range(1, -n + 1):
                k = (m.c, m.e - step * i, m.j)
                fin[k] = fin.get(k, 0) - 1
        return cls(fin={k: v for k, v in fin.items() if v})

    @classmethod
    def poch_inf(cls, m: QMono, step: int = 2, mult: int = 1) -> "QTerm":
        if step <= 0:
            raise ValueError("step must be positive")
        return cls(inf={(m.c, m.e, m.j, step): mult})

    @classmethod
    def mono(cls, m: QMono) -> "QTerm":
        return cls(coef=m.c, xexp=m.e)

    @staticmethod
    def _merge(a: dict, b: dict, sign: int) -> dict:
        out = dict(a)
        for k, v in b.items():
            nv = out.get(k, 0) + sign * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return out

    def __mul__(self, o):
        if isinstance(o, QTerm):
            return QTerm(self.coef * o.coef, self.xexp + o.xexp,
                         self._merge(self.fin, o.fin, 1), self._merge(self.inf, o.inf, 1))
        if isinstance(o, (int, Fraction)):
            return QTerm(self.coef * o, self.xexp, self.fin, self.inf)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, QTerm):
            if o.coef == 0:
                raise PoleError("division by a zero factor product")
            return QTerm(self.coef / o.coef, self.xexp - o.xexp,
                         self._merge(self.fin, o.fin, -1), self._merge(self.inf, o.inf, -1))
        if isinstance(o, (int, Fraction)):
            return QTerm(self.coef / o, self.xexp, self.fin, self.inf)
        return NotImplemented

    def __rtruediv__(self, o):
        return QTerm(o) / self

    def __pow__(self, k: int):
        return QTerm(self.coef ** k, self.xexp * k,
                     {key: v * k for key, v in self.fin.items()} if k else {},
                     {key: v * k for key, v in self.inf.items()} if k else {})

    def __neg__(self):
        return self * -1

    def normalized(self):
        """Return ``None`` for an exact zero, else ``(coef, xexp, factors)``.

        ``factors`` maps ``(c, e)`` with ``e > 0`` to a multiplicity, or
        ``(c, e, step)`` to the multiplicity of a residual infinite product.
        """
        coef = self.coef
        if coef == 0:
            return None
        xexp = self.xexp
        fin: dict = {}
        # coefficients are interned to small ints; hashing Fractions in the
        # inner loops below dominated the cost of long products
        ids: dict = {}
        cs: list = []

        def cid(c):
            i = ids.get(c)
            if i is None:
                i = ids[c] = len(cs)
                cs.append(c)
            return i

        def add(key, m):
            fin[key] = fin.get(key, 0) + m

        classes: dict = {}
        for (c, e, j, s), m in self.inf.items():
            if c == 0:
                continue
            i = cid(c)
            while e <= 0:
                add((i, e, j), m)
                e += s
            classes.setdefault((i, s, e % s), []).append((e, m))
        resid = {}
        for (i, s, _), lst in classes.items():
            top = max(e for e, _ in lst)
            total = 0
            for e, m in lst:
                for ee in range(e, top, s):
                    add((i, ee, 0), m)
                total += m
            if total:
                resid[(cs[i], top, s)] = total
        for (c, e, j), m in self.fin.items():
            add((cid(c), e, j), m)

        eps = 0
        out: dict = {}
        for (i, e, j), m in fin.items():
            c = cs[i]
            if m == 0 or c == 0:
                continue
            if e < 0:
                coef *= (-c) ** m
                xexp += e * m
                key = (1 / c, -e)
                out[key] = out.get(key, 0) + m
            elif e == 0:
                if c != 1:
                    coef *= (1 - c) ** m
                elif j == 0:
                    if m > 0:
                        return None
                    raise PoleError("vanishing factor (1 - 1) in a denominator")
                else:
                    eps += m
                    coef *= Fraction(-j) ** m
            else:
                key = (c, e)
                out[key] = out.get(key, 0) + m
        if eps > 0:
            return None
        if eps < 0:
            raise PoleError("factor product has a pole in the T -> 1 limit")
        out = {k: v for k, v in out.items() if v}
        for k, v in resid.items():
            out[k] = v
        return coef, xexp, out

    def valuation(self):
        """Lowest sqrtq exponent, or ``None`` for an exact zero."""
        n = self.normalized()
        return None if n is None else n[1]

    def evaluate(self, order: int, normalized=None) -> Series:
        """Expand to a series known through ``sqrtq**order``."""
        n = self.normalized() if normalized is None else normalized
        if n is None:
            return Series.zero(SQRTQ, order)
        coef, xexp, facs = n
        rel = order - xexp
        if rel < 0:
            return Series.zero(SQRTQ, order)
        a = [0] * (rel + 1)
        a[0] = 1
        for key, m in facs.items():
            if len(key) == 2:
                _expand_factor(a, key[0], key[1], m, rel)
            else:
                c, e, s = key
                while e <= rel:
                    _expand_factor(a, c, e, m, rel)
                    e += s
        if coef != 1:
            a = [coef * v for v in a]
        return Series(a, xexp, order, SQRTQ)

    def value(self, x):
        """Numeric value at ``sqrtq = x``; every infinite product must have cancelled."""
        n = self.normalized()
        if n is None:
            return Fraction(0)
        coef, xexp, facs = n
        out = coef * Fraction(x) ** xexp
        for key, m in facs.items():
            if len(key) == 3:
                raise ValueError("residual infinite product has no finite value")
            c, e = key
            f = 1 - c * Fraction(x) ** e
            if f == 0 and m < 0:
                raise PoleError("factor vanishes in a denominator")
            out *= f ** m
        return out

    def __repr__(self):
        return f"QTerm({self.coef}, x^{self.xexp}, fin={self.fin}, inf={self.inf})"


def _expand_factor(a: list, c, e: int, m: int, rel: int):
    """Multiply the coefficient list ``a`` in place by ``(1 - c x^e)^m``."""
    if e > rel:
        return
    if c == 1:
        if m > 0:
            for _ in range(m):
                for i in range(rel, e - 1, -1):
                    a[i] -= a[i - e]
        else:
            for _ in range(-m):
                for i in range(e, rel + 1):
                    a[i] += a[i - e]
        return
    if c == -1:
        if m > 0:
            for _ in range(m):
                for i in range(rel, e - 1, -1):
                    a[i] += a[i - e]
        else:
            for _ in range(-m):
                for i in range(e, rel + 1):
                    a[i] -= a[i - e]
        return
    if m > 0:
        for _ in range(m):
            for i in range(rel, e - 1, -1):
                a[i] -= c * a[i - e]
    else:
        for _ in range(-m):
            for i in range(e, rel + 1):
                a[i] += c * a[i - e]


# -- algebras --------------------------------------------------------------------------


class Algebra:
    """Shared Pochhammer logic; subclasses supply ``theta``, ``mono`` and ``one``."""

    elliptic = False

    def __init__(self, q, t):
        self.q = q
        self.t = t
        self.memo: dict = {}

    def theta(self, x):
        raise NotImplementedError

    def mono(self, x):
        raise NotImplementedError

    @property
    def one(self):
        return 1

    @property
    def zero(self):
        return 0

    def div(self, a, b):
        if _is_zero(b):
            raise PoleError("division by zero")
        if isinstance(a, int) and isinstance(b, int):
            return Fraction(a, b)
        return a / b

    def poch(self, x, m: int):
        """``(x; q, p)_m`` in this algebra."""
        q = self.q
        out = self.one
        if m >= 0:
            for k in range(m):
                out = out * self.theta(x * q ** k)
            return out
        den = self.one
        for k in range(1, -m + 1):
            den = den * self.theta(x * q ** (-k))
        return self.div(out, den)

    def poch_ratio(self, x, hi: int, lo: int):
        """``(x)_hi / (x)_lo`` for ``hi >= lo >= 0`` without forming 0/0."""
        return self.poch(x * self.q ** lo, hi - lo)

    def poch_part(self, x, lam: Sequence[int]):
        out = self.one
        t = self.t
        for i, m in enumerate(lam):
            if m:
                out = out * self.poch(x * t ** (-i), m)
        return out

    def poch_part_ratio(self, x, lam, mu):
        """``(x)_lam / (x)_mu`` for ``mu ⊆ lam`` as a single product."""
        out = self.one
        t = self.t
        for i in range(max(len(lam), len(mu))):
            hi = lam[i] if i < len(lam) else 0
            lo = mu[i] if i < len(mu) else 0
            if hi != lo:
                out = out * self.poch_ratio(x * t ** (-i), hi, lo)
        return out

    def pow(self, x, k: int):
        return self.mono(x ** k)


class RationalAlg(Algebra):
    """Exact rational evaluation at p = 0."""

    def __init__(self, q, t):
        super().__init__(Fraction(q), Fraction(t))

    @property
    def one(self):
        return Fraction(1)

    @property
    def zero(self):
        return Fraction(0)

    def theta(self, x):
        return 1 - x

    def mono(self, x):
        return x

    def poch(self, x, m: int):
        q = self.q
        out = Fraction(1)
        if m >= 0:
            for _ in range(m):
                out *= 1 - x
                x *= q
            return out
        for _ in range(-m):
            x /= q
            f = 1 - x
            if f == 0:
                raise PoleError("vanishing factor in a negative-index Pochhammer")
            out *= f
        return 1 / out


class FloatAlg(Algebra):
    """Complex floating point evaluation at p = 0."""

    def __init__(self, q, t):
        super().__init__(complex(q), complex(t))

    def theta(self, x):
        return 1 - x

    def mono(self, x):
        return x

    def div(self, a, b):
        if b == 0:
            raise PoleError("division by zero")
        return a / b

    def poch_inf(self, x, base=None, tol: float = 1e-18):
        """``(x; base)_oo`` by direct multiplication until factors are 1 to ``tol``."""
        base = self.q if base is None else base
        if abs(base) >= 1:
            raise ValueError("|base| must be < 1")
        out = 1
        y = complex(x)
        while True:
            out *= 1 - y
            if abs(y) < tol:
                return out
            y *= base


class EllipticAlg(Algebra):
    """Truncated p-series with :class:`PMono` parameters."""

    elliptic = True

    def __init__(self, q, t, p_order: int):
        super().__init__(PMono(q), PMono(t))
        self.p_order = p_order
        self._theta_cache: dict = {}

    @property
    def one(self):
        return Series.one(P, None)

    @property
    def zero(self):
        return Series.zero(P, None)

    def _theta_c(self, c: Fraction) -> Series:
        s = self._theta_cache.get(c)
        if s is None:
            s = theta_p(c, self.p_order) if c != 0 else Series.one(P, self.p_order)
            self._theta_cache[c] = s
        return s

    def theta(self, x: PMono):
        # theta(p^j c) = (-1)^j c^{-j} p^{-j(j-1)/2} theta(c)
        j = x.j
        base = self._theta_c(x.c)
        if j == 0:
            return base
        return base.scale((1 if j % 2 == 0 else -1) * x.c ** (-j)).shift(-j * (j - 1) // 2)

    def mono(self, x: PMono):
        return Series.monomial(x.c, x.j, P)

    def div(self, a, b):
        if b.is_zero():
            raise PoleError("division by a vanishing theta product")
        return a / b


class QTermAlg(Algebra):
    """Factor products in ``sqrtq`` with the auxiliary limit variable ``T``."""

    def __init__(self, q: QMono | None = None, t: QMono | None = None):
        super().__init__(q if q is not None else QMono(1, 2), t if t is not None else QMono(1, 0, 1))

    @property
    def one(self):
        return QTerm()

    @property
    def zero(self):
        return QTerm(0)

    def theta(self, x: QMono):
        return QTerm.factor(x)

    def mono(self, x: QMono):
        return QTerm.mono(x)

    def div(self, a, b):
        return a / b

    def poch(self, x: QMono, m: int):
        return QTerm.poch(x, m, self.q.e)

    def poch_inf(self, x: QMono, mult: int = 1):
        return QTerm.poch_inf(x, self.q.e, mult)


def from_int(alg: Algebra, k) -> object:
    """Embed an integer constant in the algebra's ring."""
    if isinstance(alg, EllipticAlg):
        return Series.monomial(k, 0, P)
    if isinstance(alg, QTermAlg):
        return QTerm(k)
    return k


def sign(k: int) -> int:
    """``(-1)**k`` as an int for any integer ``k`` (Python gives a float for negative ``k``)."""
    return -1 if k % 2 else 1


def binom2(n: int) -> int:
    return n * (n - 1) // 2


def comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0
