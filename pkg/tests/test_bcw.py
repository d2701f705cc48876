import random
from fractions import Fraction

import pytest

from bcbailey.bailey import m_ab
from bcbailey.bcw import (
    WContext, degree_formula, h_factor, omega, omega_multi, principal_point, w_degenerate, w_multi,
    w_principal, w_skew,
)
from bcbailey.identities.common import rand_rat
from bcbailey.partitions import contains, horizontal_strip, pad, partitions_in_box, weight
from bcbailey.qfact import EllipticAlg, FloatAlg, PMono, PoleError, RationalAlg, poch_partition
from oracles import qpoch_direct

F = Fraction


def generic_points(count, names, seed=1):
    rng = random.Random(seed)
    for _ in range(count):
        q, t = rand_rat(rng), rand_rat(rng)
        while abs(q) == 1 or abs(t) == 1:
            q, t = rand_rat(rng), rand_rat(rng)
        yield q, t, {k: rand_rat(rng) for k in names}


# -- independent p = 0 transcription of the H-factor and the skew W-function ---------


def pp(x, lam, q, t):
    out = F(1)
    for i, m in enumerate(lam):
        out *= qpoch_direct(x * t ** (-i), q, m)
    return out


def h_oracle(lam, mu, b, q, t, n):
    L = [0] + list(pad(lam, n + 1))  # 1-based, L[n+1] = 0
    M = [0] + list(pad(mu, n + 1))
    out = F(1)
    for j in range(2, n + 1):
        d = M[j - 1] - L[j]
        for i in range(1, j):
            out *= qpoch_direct(q ** (M[i] - M[j - 1]) * t ** (j - i), q, d)
            out *= qpoch_direct(q ** (L[i] + L[j]) * t ** (3 - j - i) * b, q, d)
            out /= qpoch_direct(q ** (M[i] - M[j - 1] + 1) * t ** (j - i - 1), q, d)
            out /= qpoch_direct(q ** (L[i] + L[j] + 1) * t ** (2 - j - i) * b, q, d)
            out *= qpoch_direct(q ** (L[i] - M[j - 1] + 1) * t ** (j - i - 1), q, d)
            out /= qpoch_direct(q ** (L[i] - M[j - 1]) * t ** (j - i), q, d)
    for j in range(3, n + 2):
        d = M[j - 1] - L[j]
        for i in range(1, j - 1):
            out *= qpoch_direct(q ** (M[i] + L[j] + 1) * t ** (1 - j - i) * b, q, d)
            out /= qpoch_direct(q ** (M[i] + L[j]) * t ** (2 - j - i) * b, q, d)
    return out


def w_oracle(lam, mu, x, a, b, q, t, n):
    L = [0] + list(pad(lam, n + 1))
    M = [0] + list(pad(mu, n + 1))
    out = h_oracle(lam, mu, b, q, t, n)
    out *= pp(1 / x, lam, q, t) * pp(a * x, lam, q, t) * pp(q * b * x / t, mu, q, t) * pp(q * b / (a * x * t), mu, q, t)
    out /= pp(1 / x, mu, q, t) * pp(a * x, mu, q, t) * pp(q * b * x, lam, q, t) * pp(q * b / (a * x), lam, q, t)
    for i in range(1, n + 1):
        c = b * t ** (1 - 2 * i)
        out *= (1 - c * q ** (2 * M[i])) / (1 - c)
        s = M[i] + L[i + 1]
        out *= qpoch_direct(c, q, s) / qpoch_direct(b * q * t ** (-2 * i), q, s)
        out *= t ** (i * (M[i] - L[i + 1]))
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h_and_w_match_transcription(n):
    box = partitions_in_box(n, 2)
    for q, t, p in generic_points(3, ("x", "a", "b")):
        ctx = WContext(RationalAlg(q, t), n)
        for lam in box:
            for mu in box:
                if not horizontal_strip(lam, mu):
                    continue
                try:
                    want = w_oracle(lam, mu, p["x"], p["a"], p["b"], q, t, n)
                except ZeroDivisionError:
                    continue
                assert h_factor(lam, mu, p["b"], ctx) == h_oracle(lam, mu, p["b"], q, t, n)
                assert w_skew(lam, mu, p["x"], p["a"], p["b"], ctx) == want


def test_h_factor_trivial_strip():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 1)
    for lam in [(), (1,), (3,)]:
        assert h_factor(lam, lam, F(4, 9), ctx) == 1


def test_h_factor_in_p_series():
    q, t = F(2, 7), F(3, 5)
    ctx = WContext(EllipticAlg(q, t, 2), 2)
    v = h_factor((2, 1), (1, 1), PMono(F(4, 9)), ctx)
    assert v.prec == 2
    flat = WContext(RationalAlg(q, t), 2)
    assert v.coeff(0) == h_factor((2, 1), (1, 1), F(4, 9), flat)


def test_w_skew_vanishes_exactly_off_strips():
    q, t = F(2, 7), F(3, 5)
    ctx = WContext(RationalAlg(q, t), 2)
    x, a, b = F(7, 4), F(5, 3), F(-4, 9)
    box = partitions_in_box(2, 3)
    for lam in box:
        for mu in box:
            v = w_skew(lam, mu, x, a, b, ctx)
            assert (v != 0) == horizontal_strip(lam, mu), (lam, mu)
    assert w_skew((3, 3), (1,), x, a, b, ctx) == 0
    assert w_skew((), (), x, a, b, ctx) == 1


def test_w_multi_single_variable_is_skew():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    for lam in partitions_in_box(2, 2):
        assert w_multi(lam, (), (F(7, 4),), F(5, 3), F(-4, 9), ctx) == w_skew(lam, (), F(7, 4), F(5, 3), F(-4, 9), ctx)


def test_w_at_staircase_is_delta():
    for q, t, p in generic_points(3, ("a", "b")):
        ctx = WContext(RationalAlg(q, t), 2)
        pt = principal_point((), ctx)
        for mu in partitions_in_box(2, 2):
            assert w_multi(mu, (), pt, p["a"], p["b"], ctx) == (1 if mu == () else 0)


def test_degree_formula_matches_recursion():
    for q, t, p in generic_points(4, ("x", "a", "b")):
        ctx = WContext(RationalAlg(q, t), 2)
        x = p["x"]
        for mu in partitions_in_box(2, 2):
            assert w_multi(mu, (), (x * t, x), p["a"], p["b"], ctx) == degree_formula(mu, x, p["a"], p["b"], ctx)
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    assert degree_formula((), F(3), F(5), F(7), ctx) == 1


def test_degree_formula_one_variable_is_principal():
    q, t = F(2, 7), F(3, 5)
    ctx = WContext(RationalAlg(q, t), 1)
    for lam in range(2, 5):
        assert degree_formula((2,), q ** lam, F(5, 3), F(-4, 9), ctx) == w_principal((2,), (lam,), F(5, 3), F(-4, 9), ctx)


def test_principal_vanishing_on_2_cubed_box():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 3)
    box = partitions_in_box(3, 2)
    for lam in box:
        for mu in box:
            v = w_principal(mu, lam, F(5, 3), F(-4, 9), ctx)
            if not contains(lam, mu):
                assert v == 0
            elif mu == ():
                assert v == 1


def test_degenerate_variants_at_empty_partition():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    xs = (F(7, 4), F(2, 9))
    assert w_degenerate((), xs, ctx, "b_to_0", a=F(5, 3)) == 1
    assert w_degenerate((), xs, ctx, "a_to_0_normalized", b=F(5, 3)) == 1
    assert w_degenerate((), xs, ctx, "ratio", ratio=F(5, 3)) == 1
    with pytest.raises(ValueError):
        w_degenerate((1,), xs, ctx, "nonsense")


def _richardson(f, h):
    return 2 * f(h / 2) - f(h)


def test_b_to_zero_limit_numerically():
    ctx = WContext(FloatAlg(0.3, 0.6), 2)
    xs, a = (1.7, 0.4), 0.8
    closed = w_degenerate((1,), xs, ctx, "b_to_0", a=a)
    for h in (1e-6, 1e-8):
        approx = _richardson(lambda b: w_multi((1,), (), xs, a, b, ctx), h)
        assert abs(approx - closed) <= 1e-6 * abs(closed)


def test_a_to_zero_limit_numerically():
    q, t, n = 0.3, 0.6, 2
    ctx = WContext(FloatAlg(q, t), n)
    xs, bp = (1.7, 0.4), 0.8  # bp = b' t^{1-n}
    closed = w_degenerate((1,), xs, ctx, "a_to_0_normalized", b=bp)

    def f(ap):
        return (bp * t ** (n - 1) / ap) ** 1 * w_multi((1,), (), xs, ap * t ** (2 - 2 * n), bp, ctx)

    for h in (1e-6, 1e-8):
        assert abs(_richardson(f, h) - closed) <= 1e-6 * abs(closed)


def test_ratio_limit_numerically():
    q, t, n = 0.3, 0.6, 2
    ctx = WContext(FloatAlg(q, t), n)
    xs, u, v = (1.7, 0.4), 0.9, 1.3
    closed = w_degenerate((1, 1), xs, ctx, "ratio", ratio=u / v * t ** (n - 1))

    def f(d):
        return w_multi((1, 1), (), xs, d * v * t ** (2 - 2 * n), d * u * t ** (1 - n), ctx)

    for h in (1e-6, 1e-8):
        assert abs(_richardson(f, h) - closed) <= 1e-6 * abs(closed)


def test_omega_at_unit_point_is_delta():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    a, b = F(5, 3), F(-4, 9)
    r = 1 + F(1, 10 ** 9)
    box = partitions_in_box(2, 2)
    for lam in box:
        for mu in box:
            v = float(omega(lam, mu, F(1), r, a, b, ctx))
            assert abs(v - (lam == mu)) < 1e-6


def test_omega_empty():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    assert omega((), (), F(7, 4), F(5, 11), F(5, 3), F(-4, 9), ctx) == 1


def test_omega_relation_to_m_entries():
    for q, t, p in generic_points(3, ("a", "b", "r"), seed=5):
        ctx = WContext(RationalAlg(q, t), 2)
        a, b, r = p["a"], p["b"], p["r"]
        for lam in partitions_in_box(2, 2):
            for mu in partitions_in_box(2, 2):
                if not contains(lam, mu):
                    continue
                try:
                    lhs = omega(lam, mu, 1 / r, r, a * r * r, b * r, ctx)
                    pre = (poch_partition(a * r, lam, q, t) * poch_partition(q * b / (a * r), mu, q, t)
                           / (poch_partition(q * b / a, lam, q, t) * poch_partition(a * r, mu, q, t)))
                    rhs = pre * b ** (weight(mu) - weight(lam)) * r ** weight(mu) * m_ab(lam, mu, b * r, b, ctx)
                except ZeroDivisionError:
                    continue
                assert lhs == rhs


def test_omega_multi_reduces_and_is_symmetric():
    ctx = WContext(RationalAlg(F(2, 7), F(3, 5)), 2)
    a, b, r = F(5, 3), F(-4, 9), F(5, 11)
    z1, z2, z3 = F(7, 4), F(3, 2), F(-2, 5)
    for lam in partitions_in_box(2, 2):
        assert omega_multi(lam, (), (z1,), r, a, b, ctx) == omega(lam, (), z1, r, a, b, ctx)
        assert omega_multi(lam, (), (z1, z2), r, a, b, ctx) == omega_multi(lam, (), (z2, z1), r, a, b, ctx)
    lam = (2, 1)
    ref = omega_multi(lam, (), (z1, z2, z3), r, a, b, ctx)
    assert omega_multi(lam, (), (z3, z1, z2), r, a, b, ctx) == ref
    assert omega_multi(lam, (), (z2, z3, z1), r, a, b, ctx) == ref


def test_context_requires_positive_n():
    with pytest.raises(ValueError):
        WContext(RationalAlg(F(1, 2), F(1, 3)), 0)
