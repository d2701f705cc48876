"""Coefficient rings: exact rationals, truncated Laurent series, complex floats.

Every identity in the package is evaluated in one of three rings:

* exact rationals (:class:`fractions.Fraction`, with plain ``int`` allowed),
* truncated Laurent series in a single formal variable (:class:`Series`),
  either ``sqrtq`` (so that ``q = sqrtq**2`` and half-integer powers of ``q``
  are ordinary integer exponents) or the elliptic nome ``p``,
* complex doubles, compared with a relative tolerance.

A :class:`Series` remembers how far its coefficients are known.  Exponents
above ``prec`` are *unknown*, not zero, and every operation propagates the
smallest precision it can guarantee.  ``prec is None`` marks an exact Laurent
polynomial.
"""
from __future__ import annotations

import cmath
import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Sequence, Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, complex, float, "Series"]

SQRTQ = "sqrtq"
P = "p"

DEFAULT_RTOL = 1e-9


class RingError(TypeError):
    """Operands live in incompatible rings (different series variables, ...)."""


class PrecisionError(ValueError):
    """A coefficient was requested beyond the known precision of a series."""


class NonUnitError(ZeroDivisionError):
    """Attempt to invert a series whose known coefficients are all zero."""


def _q(c):
    """Normalize a coefficient: Fractions with unit denominator become ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _inv(c):
    if c == 1 or c == -1:
        return int(c)
    return Fraction(1) / c


class Series:
    """Truncated Laurent series ``sum_k coeffs[k] * var**(val + k) + O(var**(prec+1))``.

    The list ``coeffs`` never starts with a zero; for truncated series it runs
    up to ``prec`` inclusive, for exact polynomials (``prec is None``) it never
    ends with a zero.  The zero series has ``coeffs == []``.
    """

    __slots__ = ("var", "val", "coeffs", "prec")

    def __init__(self, coeffs: Sequence, val: int = 0, prec: int | None = None, var: str = SQRTQ):
        coeffs = [_q(c) for c in coeffs]
        if prec is not None:
            coeffs = coeffs[: max(0, prec - val + 1)]
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        val += i
        if prec is None:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if not coeffs:
                val = 0
        else:
            if not coeffs:
                val = prec + 1
            else:
                coeffs.extend([0] * (prec - val + 1 - len(coeffs)))
        self.var = var
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors ---------------------------------------------------------------
    @classmethod
    def monomial(cls, c: Rational = 1, e: int = 0, var: str = SQRTQ, prec: int | None = None) -> "Series":
        return cls([c], e, prec, var)

    @classmethod
    def one(cls, var: str = SQRTQ, prec: int | None = None) -> "Series":
        return cls([1], 0, prec, var)

    @classmethod
    def zero(cls, var: str = SQRTQ, prec: int | None = None) -> "Series":
        return cls([], 0, prec, var)

    @classmethod
    def from_dict(cls, d: dict, var: str = SQRTQ, prec: int | None = None) -> "Series":
        if not d:
            return cls.zero(var, prec)
        lo = min(d)
        hi = max(d) if prec is None else max(prec, lo)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo, prec, var)

    # -- inspection -------------------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Largest stored exponent (exact polynomials only meaningful)."""
        return self.val + len(self.coeffs) - 1

    def coeff(self, k: int):
        if self.prec is not None and k > self.prec:
            raise PrecisionError(f"coefficient of {self.var}^{k} unknown (precision {self.prec})")
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __getitem__(self, k: int):
        return self.coeff(k)

    def items(self) -> Iterator[tuple[int, Rational]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def to_dict(self) -> dict:
        return dict(self.items())

    # -- arithmetic -------------------------------------------------------------------
    def _check(self, other: "Series"):
        if other.var != self.var:
            raise RingError(f"series variables differ: {self.var} vs {other.var}")

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.val, self.prec, self.var)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, (int, Fraction)):
                other = Series([other], 0, None, self.var)
            else:
                return NotImplemented
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return Series([], 0, prec, self.var)
        vals = [s.val for s in (self, other) if s.coeffs]
        lo = min(vals)
        hi = max(s.degree for s in (self, other) if s.coeffs)
        if prec is not None:
            hi = min(hi, prec)
        if hi < lo:
            return Series([], 0, prec, self.var)
        out = [0] * (hi - lo + 1)
        for s in (self, other):
            off = s.val - lo
            for i, c in enumerate(s.coeffs):
                j = off + i
                if j > hi - lo:
                    break
                out[j] += c
        return Series(out, lo, prec, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = _q(c)
        if c == 0:
            return Series([], 0, None, self.var)
        return Series([c * x for x in self.coeffs], self.val, self.prec, self.var)

    def shift(self, e: int) -> "Series":
        """Multiply by ``var**e`` (exact monomial, keeps relative precision)."""
        return Series(self.coeffs, self.val + e, None if self.prec is None else self.prec + e, self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        a, b = self, other
        prec = _mul_prec(a, b)
        if not a.coeffs or not b.coeffs:
            return Series([], 0, prec, self.var)
        if len(a.coeffs) == 1 and a.prec is None:
            return b.scale(a.coeffs[0]).shift(a.val) if prec is None else _shift_trunc(b, a.coeffs[0], a.val, prec)
        if len(b.coeffs) == 1 and b.prec is None:
            return a.scale(b.coeffs[0]).shift(b.val) if prec is None else _shift_trunc(a, b.coeffs[0], b.val, prec)
        lo = a.val + b.val
        n = a.degree + b.degree - lo + 1
        if prec is not None:
            n = min(n, prec - lo + 1)
        if n <= 0:
            return Series([], 0, prec, self.var)
        out = [0] * n
        ac, bc = a.coeffs, b.coeffs
        # iterate over the sparser operand
        if sum(1 for c in ac if c) > sum(1 for c in bc if c):
            ac, bc = bc, ac
        lb = len(bc)
        for i, x in enumerate(ac):
            if not x or i >= n:
                continue
            m = min(lb, n - i)
            for j in range(m):
                y = bc[j]
                if y:
                    out[i + j] += x * y
        return Series(out, lo, prec, self.var)

    __rmul__ = __mul__

    def mul_binomial(self, c, e: int) -> "Series":
        """Multiply by ``1 - c*var**e`` in O(len) time."""
        c = _q(c)
        if c == 0:
            return self
        if e == 0:
            return self.scale(1 - c)
        b = Series([1], 0, None, self.var) - Series([c], e, None, self.var)
        if e < 0 or self.prec is None:
            return self * b
        prec = self.prec
        if not self.coeffs:
            return Series([], 0, prec, self.var)
        out = list(self.coeffs)
        for i in range(len(out) - 1, e - 1, -1):
            out[i] -= c * self.coeffs[i - e]
        return Series(out, self.val, prec, self.var)

    def div_binomial(self, c, e: int) -> "Series":
        """Divide by ``1 - c*var**e``; needs a truncated numerator when ``e != 0``."""
        c = _q(c)
        if c == 0:
            return self
        if e == 0:
            if c == 1:
                raise ZeroDivisionError("division by the zero factor (1 - 1)")
            return self.scale(_inv(1 - c))
        if e < 0:
            # 1/(1 - c x^e) = -x^{-e}/c * 1/(1 - x^{-e}/c)
            return self.div_binomial(_inv(c), -e).shift(-e).scale(-_inv(c))
        if self.prec is None:
            raise PrecisionError("dividing an exact polynomial by a binomial needs a truncation order")
        out = list(self.coeffs)
        for i in range(e, len(out)):
            out[i] += c * out[i - e]
        return Series(out, self.val, self.prec, self.var)

    def inverse(self, prec: int | None = None) -> "Series":
        """Multiplicative inverse.  Exact non-monomial input needs ``prec``."""
        if not self.coeffs:
            raise NonUnitError("series has no known nonzero coefficient")
        lead = self.coeffs[0]
        if len(self.coeffs) == 1 and self.prec is None:
            return Series([_inv(lead)], -self.val, None, self.var)
        if self.prec is None:
            if prec is None:
                raise PrecisionError("inverting an exact polynomial needs a truncation order")
            rel = prec + self.val
        else:
            rel = self.prec - self.val
            if prec is not None:
                rel = min(rel, prec + self.val)
        if rel < 0:
            return Series([], 0, rel - self.val, self.var)
        a = self.coeffs
        la = len(a)
        il = _inv(lead)
        out = [0] * (rel + 1)
        out[0] = il
        for k in range(1, rel + 1):
            s = 0
            for j in range(1, min(k, la - 1) + 1):
                if a[j]:
                    s += a[j] * out[k - j]
            out[k] = _q(-s * il)
        return Series(out, -self.val, rel - self.val, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(_inv(Fraction(other)))
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        if other.prec is None and len(other.coeffs) == 1:
            return self * other.inverse()
        if other.prec is None:
            if self.prec is None:
                raise PrecisionError("exact division of polynomials is not supported; truncate first")
            if not self.coeffs:
                return Series([], 0, self.prec - other.val, self.var)
            inv = other.inverse(prec=self.prec - self.val - other.val)
        else:
            inv = other.inverse()
        return self * inv

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Series([1], 0, None, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def truncate(self, prec: int) -> "Series":
        return Series(self.coeffs, self.val, _min_prec(self.prec, prec), self.var)

    def subs_power(self, k: int) -> "Series":
        """Return ``f(var**k)`` for a positive integer ``k``."""
        if k <= 0:
            raise ValueError("k must be positive")
        d = {e * k: c for e, c in self.items()}
        prec = None if self.prec is None else self.prec * k + (k - 1)
        return Series.from_dict(d, self.var, prec)

    # -- comparison -------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], 0, None, self.var)
        if not isinstance(other, Series):
            return NotImplemented
        return series_eq(self, other).passed

    def __hash__(self):  # pragma: no cover - series are not dict keys
        raise TypeError("Series is unhashable")

    def __repr__(self):
        terms = []
        for e, c in self.items():
            terms.append(f"{c}*{self.var}^{e}" if e else f"{c}")
        body = " + ".join(terms) if terms else "0"
        if self.prec is not None:
            body += f" + O({self.var}^{self.prec + 1})"
        return body


def _shift_trunc(s: Series, c, e: int, prec) -> Series:
    return Series([c * x for x in s.coeffs], s.val + e, prec, s.var)


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _mul_prec(a: Series, b: Series):
    if a.prec is None and b.prec is None:
        return None
    if (a.prec is None and not a.coeffs) or (b.prec is None and not b.coeffs):
        return None
    cands = []
    if b.prec is not None:
        cands.append(a.val + b.prec)
    if a.prec is not None:
        cands.append(b.val + a.prec)
    return min(cands)


@dataclass(frozen=True)
class EqVerdict:
    """Outcome of a coefficient-wise comparison."""

    passed: bool
    exponent: int | None = None
    lhs: object = None
    rhs: object = None

    def __bool__(self):
        return self.passed


def series_eq(a: Series, b: Series, order: int | None = None) -> EqVerdict:
    """Compare two series up to ``order`` (default: the common precision).

    Raises :class:`PrecisionError` when ``order`` exceeds what either side knows.
    """
    if a.var != b.var:
        raise RingError(f"series variables differ: {a.var} vs {b.var}")
    common = _min_prec(a.prec, b.prec)
    if order is None:
        order = common
    elif common is not None and order > common:
        raise PrecisionError(f"requested order {order} exceeds known precision {common}")
    keys = set(a.to_dict()) | set(b.to_dict())
    if order is not None:
        keys = {k for k in keys if k <= order}
    for k in sorted(keys):
        x, y = a.coeff(k), b.coeff(k)
        if x != y:
            return EqVerdict(False, k, x, y)
    return EqVerdict(True)


def close(a: complex, b: complex, rtol: float = DEFAULT_RTOL, atol: float = 1e-300) -> bool:
    """Relative comparison used for the complex-float ring."""
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), atol)


def product_trunc(factors: Iterable[tuple], order: int, var: str = SQRTQ) -> Series:
    """Expand ``prod (1 - c*var**e)`` to ``order``.

    ``factors`` yields pairs ``(c, e)`` with non-decreasing ``e >= 0``; the
    first factor with ``e > order`` stops the expansion since it and all later
    factors leave the coefficients up to ``order`` untouched.
    """
    out = Series.one(var, order)
    last = -1
    for c, e in factors:
        if e < 0:
            raise ValueError(f"factor exponent {e} is negative")
        if e < last:
            raise ValueError("factor exponents must be non-decreasing")
        last = e
        if e > order:
            break
        out = out.mul_binomial(c, e)
    return out


def det(m: Sequence[Sequence], n: int | None = None):
    """Exact determinant over any commutative ring by Laplace expansion with
    memoized minors (``O(n 2^n)`` ring operations, no division)."""
    if n is None:
        n = len(m)
    if n == 0:
        return 1
    if n > 8:
        raise ValueError("det is limited to n <= 8")
    rows = [list(r[:n]) for r in m[:n]]
    # minors over the last rows, keyed by the set of columns still available
    memo: dict[int, object] = {}
    full = (1 << n) - 1

    def minor(r: int, mask: int):
        if r == n:
            return 1
        key = mask
        if key in memo:
            return memo[key]
        acc = None
        sign = 1
        for c in range(n):
            if mask & (1 << c):
                x = rows[r][c]
                if not _is_zero(x):
                    term = x * minor(r + 1, mask & ~(1 << c))
                    if sign < 0:
                        term = -term
                    acc = term if acc is None else acc + term
                sign = -sign
        if acc is None:
            acc = 0
        memo[key] = acc
        return acc

    return minor(0, full)


def det_leibniz(m: Sequence[Sequence]):
    """Permutation-expansion determinant; a slow, independent reference."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + (-term if inv % 2 else term)
    return total


def _is_zero(x) -> bool:
    if isinstance(x, Series):
        return x.is_zero() and x.prec is None
    return x == 0


def dump_csv(s: Series, order: int | None = None, stride: int = 1) -> str:
    """Coefficient table ``exponent_in_sqrtq,numerator,denominator`` (ascending).

    ``stride=2`` writes only even exponents, i.e. whole powers of ``q``; the
    omitted rows are read back as zero by :func:`load_csv`.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    hi = s.prec if order is None else order
    if hi is None:
        hi = s.degree
    lo = min(s.val, 0) if s.coeffs else 0
    for k in range(lo, hi + 1):
        if k % stride:
            continue
        c = Fraction(s.coeff(k))
        w.writerow([k, c.numerator, c.denominator])
    return buf.getvalue()


def load_csv(text: str, var: str = SQRTQ) -> Series:
    d = {}
    hi = None
    for row in csv.reader(io.StringIO(text)):
        if not row:
            continue
        e, num, den = (int(x) for x in row)
        d[e] = Fraction(num, den)
        hi = e if hi is None else max(hi, e)
    return Series.from_dict({k: v for k, v in d.items() if v}, var, hi)


def cexp_q(q: complex, e: float) -> complex:
    """``q**e`` for real exponents on the principal branch."""
    if e == int(e):
        return q ** int(e)
    return cmath.exp(e * cmath.log(q))
