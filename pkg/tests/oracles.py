"""Brute-force reference computations, independent of the package internals.

Everything here works on plain Python lists of coefficients in powers of q
(index i holds the coefficient of q^i) so it shares no code with
``bcbailey.scalar.Series``.
"""
from fractions import Fraction
from itertools import permutations


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def product_oracle(factors, order):
    """Coefficients of prod (1 - c q^e) over ``factors`` up to ``q^order``."""
    out = [1] + [0] * order
    for c, e in factors:
        if e > order:
            continue
        f = [0] * (order + 1)
        f[0] = 1
        f[e] -= c
        out = poly_mul(out, f, order)
    return out


def inf_poch_oracle(a, step, order):
    """``(q^a; q^step)_oo`` up to ``q^order`` (needs a > 0)."""
    return product_oracle([(1, a + step * i) for i in range(order // step + 2)], order)


def partition_count(order, allowed):
    """Number of partitions of each m <= order into parts from ``allowed``."""
    out = [1] + [0] * order
    for p in allowed:
        if p < 1 or p > order:
            continue
        for m in range(p, order + 1):
            out[m] += out[m - p]
    return out


def parts_mod(order, mod, residues):
    return partition_count(order, [p for p in range(1, order + 1) if p % mod in residues])


def det_permutations(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * m[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def qpoch_direct(a, q, m):
    out = Fraction(1)
    for i in range(m):
        out *= 1 - a * q ** i
    return out


def bilateral_pentagonal(order):
    """sum_{m in Z} (-1)^m q^{m(3m-1)/2}, the full pentagonal-number series."""
    out = [0] * (order + 1)
    m = -order - 1
    while m <= order + 1:
        e = m * (3 * m - 1) // 2
        if 0 <= e <= order:
            out[e] += (-1) ** (m % 2)
        m += 1
    return out


def as_q_list(series, order):
    """Coefficients of q^0..q^order of a sqrtq series with only integer powers of q."""
    for e, _ in series.items():
        if e % 2 and e <= 2 * order:
            raise AssertionError(f"half-integer power q^({e}/2) present")
    return [series.coeff(2 * i) for i in range(order + 1)]
