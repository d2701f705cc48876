from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcbailey.scalar import (
    P, SQRTQ, PrecisionError, RingError, Series, close, det, det_leibniz, dump_csv, load_csv,
    product_trunc, series_eq,
)
from oracles import det_permutations, inf_poch_oracle, parts_mod, product_oracle

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def series(draw, prec=12, unit=False):
    coeffs = draw(st.lists(fracs, min_size=1, max_size=8))
    if unit and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    val = 0 if unit else draw(st.integers(-2, 3))
    return Series(coeffs, val, prec)


def q_series(coeffs_in_q, prec_q=None):
    d = {2 * i: c for i, c in enumerate(coeffs_in_q) if c}
    return Series.from_dict(d, SQRTQ, None if prec_q is None else 2 * prec_q)


def test_difference_of_squares():
    a = Series([1, 0, 1], 0, 6)
    b = Series([1, 0, -1], 0, 6)
    assert a * b == Series([1, 0, 0, 0, -1], 0, 6)


def test_one_is_multiplicative_identity():
    s = Series([3, -1, Fraction(1, 2)], -1, 9)
    assert Series.one() * s == s


def test_euler_squared_matches_direct_product():
    e = product_trunc(((1, 2 * i) for i in range(1, 30)), 40)
    ref = product_oracle([(1, i) for i in range(1, 21)] * 2, 20)
    assert e * e == q_series(ref, 20)


def test_geometric_inverse():
    inv = Series([1, 0, -1], 0, 6).inverse()
    assert inv == q_series([1, 1, 1, 1], 3)


def test_inverse_of_one():
    assert Series.one(SQRTQ, 10).inverse() == Series.one(SQRTQ, 10)


def test_inverse_counts_partitions_into_parts_1_4_mod_5():
    prod = product_trunc(sorted([(1, 2 * (1 + 5 * i)) for i in range(5)] + [(1, 2 * (4 + 5 * i)) for i in range(5)],
                                key=lambda f: f[1]), 24)
    inv = prod.inverse()
    expected = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9]
    assert expected == parts_mod(12, 5, {1, 4})
    assert inv == q_series(expected, 12)


def test_inverse_rejects_non_units():
    with pytest.raises(ZeroDivisionError):
        Series.zero(SQRTQ, 5).inverse()


def test_series_eq_pass_and_witness():
    a = Series([1, 0, 1], 0, 10)
    assert series_eq(a, Series([1, 0, 1], 0, 10), 5)
    v = series_eq(a, Series([1, 0, 2], 0, 10), 5)
    assert not v and v.exponent == 2 and (v.lhs, v.rhs) == (1, 2)


def test_series_eq_refuses_unknown_coefficients():
    with pytest.raises(PrecisionError):
        series_eq(Series([1], 0, 4), Series([1], 0, 10), 6)


def test_variables_must_match():
    with pytest.raises(RingError):
        Series([1], 0, 3, SQRTQ) + Series([1], 0, 3, P)


def test_reading_past_precision_raises():
    with pytest.raises(PrecisionError):
        Series([1, 2], 0, 3).coeff(4)


def test_precision_is_the_minimum():
    assert (Series([1], 0, 4) + Series([1], 0, 9)).prec == 4
    assert (Series([1], 0, 4) * Series([1], 2, 9)).prec == 6


def test_euler_product_pentagonal():
    e = product_trunc(((1, 2 * i) for i in range(1, 100)), 30)
    assert e == q_series([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1], 15)


def test_empty_product_is_one():
    assert product_trunc(iter(()), 10) == Series.one(SQRTQ, 10)


def test_factor_beyond_order_is_ignored():
    assert product_trunc(((1, 10 * i) for i in range(1, 5)), 8) == Series.one(SQRTQ, 8)


def test_product_rejects_negative_exponent():
    with pytest.raises(ValueError):
        product_trunc([(1, -2)], 10)


def test_product_is_insensitive_to_extra_high_factors():
    base = [(1, 2 * i) for i in range(1, 8)]
    assert product_trunc(base, 14) == product_trunc(base + [(3, 15), (5, 40)], 14)


def test_product_matches_oracle_with_coefficients():
    fs = [(Fraction(1, 2), 2), (3, 4), (-1, 4), (2, 10)]
    ref = product_oracle([(c, e // 2) for c, e in fs], 8)
    assert product_trunc(fs, 16) == q_series(ref, 8)


def test_det_small_cases():
    assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([]) == 1


def test_det_of_theta_matrix_matches_permutation_expansion():
    from bcbailey.identities.multiple import theta_det_matrix
    m = theta_det_matrix("dn", 3, 0, 20)
    assert det(m) == det_permutations(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_permutation_oracle(m):
    assert det(m) == det_permutations(m) == det_leibniz(m)


@settings(max_examples=200, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=100, deadline=None)
@given(series(prec=14, unit=True))
def test_inverse_property(a):
    assert a * a.inverse() == Series.one(SQRTQ, 14)


@settings(max_examples=50, deadline=None)
@given(series(prec=10))
def test_csv_roundtrip(s):
    back = load_csv(dump_csv(s))
    assert series_eq(back, s, s.prec)


def test_csv_format_and_stride():
    s = q_series([1, Fraction(-1, 3), 0, 2], 3)
    assert dump_csv(s).splitlines()[:3] == ["0,1,1", "1,0,1", "2,-1,3"]
    even = dump_csv(s, stride=2)
    assert even.splitlines() == ["0,1,1", "2,-1,3", "4,0,1", "6,2,1"]
    assert load_csv(even) == s


def test_exact_polynomials_compare_without_precision():
    a = Series([1, 2, 1])
    assert a == Series([1, 1]) * Series([1, 1])
    assert a.is_exact and a.degree == 2


def test_close_is_relative():
    assert close(1.0, 1.0 + 1e-12)
    assert not close(1.0, 1.0 + 1e-6)
    assert close(1e-20, 1.000000000001e-20)


def test_euler_inverse_matches_oracle_for_powers():
    ref = inf_poch_oracle(2, 5, 20)
    got = product_trunc(((1, 2 * (2 + 5 * i)) for i in range(10)), 40)
    assert got == q_series(ref, 20)
