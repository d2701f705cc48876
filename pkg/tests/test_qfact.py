from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcbailey.partitions import partitions_in_box, weight
from bcbailey.qfact import (
    FloatAlg, PoleError, QMono, QPow, QTerm, RationalAlg, epoch, flip_poch, limit_rule, poch_partition,
    qpoch, qpoch_inf, reversal_flip, theta_p, theta_q,
)
from bcbailey.scalar import P, SQRTQ, Series, product_trunc
from oracles import inf_poch_oracle, product_oracle, qpoch_direct

F = Fraction
nonunit = st.fractions(min_value=-3, max_value=3, max_denominator=9).filter(lambda x: x not in (0, 1, -1))


def q_series(coeffs, prec_q):
    return Series.from_dict({2 * i: c for i, c in enumerate(coeffs) if c}, SQRTQ, 2 * prec_q)


def test_qpoch_examples():
    assert qpoch(F(3, 7), F(1, 2), 0) == 1
    assert qpoch(F(1, 2), F(1, 2), 2) == F(3, 8)


def test_qpoch_negative_index_pole():
    q = F(1, 3)
    with pytest.raises(PoleError):
        qpoch(q, q, -1)


def test_qpoch_matches_direct_product():
    for m in range(6):
        assert qpoch(F(2, 5), F(-1, 3), m) == qpoch_direct(F(2, 5), F(-1, 3), m)


def test_qpoch_negative_index_is_reciprocal():
    a, q = F(2, 5), F(-1, 3)
    for m in range(1, 5):
        assert qpoch(a, q, -m) * qpoch(a * q ** -m, q, m) == 1


def test_qpoch_inf_examples():
    assert qpoch_inf(QPow(1, 2), 30) == q_series([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1], 15)
    assert qpoch_inf(QPow(1, 32), 30) == Series.one(SQRTQ, 30)
    assert qpoch_inf(QPow(1, 4), 40, base=10) == q_series(inf_poch_oracle(2, 5, 20), 20)


def test_qpoch_inf_rejects_divergent_products():
    with pytest.raises(ValueError):
        qpoch_inf(QPow(2, 0), 10)


def test_theta_p_examples():
    assert theta_p(F(3), 0) == Series([-2], 0, 0, P)
    assert theta_p(F(1), 3).is_zero()
    x = F(2)
    ref = Series.one(P, 2)
    for c, e in [(x, 0), (1 / x, 1), (x, 1), (1 / x, 2), (x, 2)]:
        ref = ref * Series.from_dict({0: 1, e: -c} if e else {0: 1 - c}, P, 2)
    assert theta_p(x, 2) == ref


def test_theta_q_examples():
    got = theta_q(QPow(1, 2), QPow(1, 10), 40)
    ref = product_oracle(sorted([(1, 1 + 5 * i) for i in range(5)] + [(1, 4 + 5 * i) for i in range(5)],
                                key=lambda f: f[1]), 20)
    assert got == q_series(ref, 20)
    assert theta_q(QPow(1, 4), QPow(1, 10), 40) == theta_q(QPow(1, 6), QPow(1, 10), 40)
    assert theta_q(QPow(1, 2), QPow(1, 2), 20).is_zero()


def test_epoch_examples():
    assert epoch(F(3), F(1, 2), 0, 2) == Series.one(P, 2)
    assert epoch(F(2), F(1, 2), 2, 2).is_zero()
    for m in range(6):
        assert epoch(F(2, 7), F(-1, 3), m, 0) == Series([qpoch(F(2, 7), F(-1, 3), m)], 0, 0, P)


def test_epoch_negative_index_inverts():
    a, q = F(2, 7), F(-1, 3)
    assert epoch(a, q, -2, 3) * epoch(a * q ** -2, q, 2, 3) == Series.one(P, 3)


def test_poch_partition_examples():
    q, t = F(1, 2), F(1, 3)
    assert poch_partition(F(5), (), q, t) == 1
    assert poch_partition(q, (2, 1), q, t) == qpoch(q, q, 2) * qpoch(q / t, q, 1)
    assert poch_partition(F(2, 7), (3,), q, t, 2) == epoch(F(2, 7), q, 3, 2)


@settings(max_examples=60, deadline=None)
@given(nonunit, nonunit, st.integers(-4, 4))
def test_flip_identity(v, q, m):
    try:
        rhs = flip_poch(v, q, m)
    except ZeroDivisionError:  # the identity has a pole here
        return
    assert qpoch(v, q, m) == rhs


@settings(max_examples=40, deadline=None)
@given(nonunit, nonunit, nonunit, st.sampled_from([lam for lam in partitions_in_box(2, 2)]))
def test_reversal_flip(v, q, t, mu):
    try:
        rhs = reversal_flip(v, mu, q, t, 2)
    except (PoleError, ZeroDivisionError):
        return
    assert poch_partition(v, mu, q, t) == rhs


@pytest.mark.parametrize("mu", [(1,), (2, 1), (3, 1, 1)])
def test_limit_rule_against_small_a(mu):
    q, t, x = 0.4, 0.7, 1.3
    closed = limit_rule(x, mu, q, t)
    for a in (1e-6, 1e-8):
        approx = a ** weight(mu) * poch_partition(x / a, mu, q, t)
        assert abs(approx - closed) <= 1e-4 * abs(closed)


def test_jacobi_triple_product():
    order = 80
    for c in (F(1), F(-2, 3), F(5)):
        lhs = theta_q(QPow(c, 1), QPow(1, 2), order) * qpoch_inf(QPow(1, 2), order)
        terms = {}
        for m in range(-10, 11):
            terms[m * m] = terms.get(m * m, 0) + (-c) ** m
        rhs = Series.from_dict({e: v for e, v in terms.items() if e <= order}, SQRTQ, order)
        assert lhs == rhs


def test_qterm_evaluate_matches_product():
    t = QTerm.poch_inf(QMono(F(1, 2), 3), 4) * QTerm.factor(QMono(3, 2), 2) / QTerm.poch(QMono(1, 2), 3)
    order = 30
    num = product_trunc([(F(1, 2), 3 + 4 * i) for i in range(10)], order) * Series([1, 0, -3], 0, order) ** 2
    den = Series([1, 0, -1]) * Series([1, 0, 0, 0, -1]) * Series([1, 0, 0, 0, 0, 0, -1])
    assert t.evaluate(order) == num / den.truncate(order)


def test_qterm_t_limit():
    # (1 - q T^2) / (1 - q T^2) cancels; (1 - T^2)/(1 - T^4) -> 1/2
    t = QTerm.factor(QMono(1, 0, 2)) / QTerm.factor(QMono(1, 0, 4))
    assert t.evaluate(6) == Series([F(1, 2)], 0, 6)
    with pytest.raises(PoleError):
        (QTerm() / QTerm.factor(QMono(1, 0, 2))).evaluate(6)
    assert (QTerm.factor(QMono(1, 0, 2))).evaluate(6).is_zero()


def test_qterm_valuation_and_value():
    t = QTerm.mono(QMono(3, 5)) * QTerm.factor(QMono(1, 2))
    assert t.valuation() == 5
    assert t.value(F(1, 2)) == 3 * F(1, 2) ** 5 * (1 - F(1, 4))


def test_algebras_agree_on_poch():
    ra, fa = RationalAlg(F(1, 3), F(2, 5)), FloatAlg(1 / 3, 2 / 5)
    for m in range(-3, 4):
        exact = ra.poch(F(3, 7), m)
        approx = fa.poch(3 / 7, m)
        assert abs(float(exact) - approx) <= 1e-12 * max(1, abs(approx))
