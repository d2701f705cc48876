import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from bcbailey.partitions import (
    bounded_vectors, conjugate, contains, distinct_permutations, format_partition, horizontal_strip,
    is_rectangular, n_conj, n_stat, normalize, parse, partitions_in_box, partitions_of_length, stats,
    strips_below, subpartitions, weight,
)

partitions = st.lists(st.integers(0, 6), max_size=5).map(lambda xs: normalize(sorted(xs, reverse=True)))


def box_by_filtering(n, k):
    """Generate-and-filter oracle for the partitions in a k^n box."""
    return {normalize(v) for v in product(range(k + 1), repeat=n) if all(v[i] >= v[i + 1] for i in range(n - 1))}


def test_normalize_strips_trailing_zeros():
    assert normalize((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(ValueError):
        normalize((1, 2))


def test_contains():
    assert contains((2, 1), (1, 1))
    assert not contains((2, 1), (1, 2))
    assert contains((5,), (5,))
    assert not contains((1,), (1, 1))


def test_horizontal_strip():
    assert horizontal_strip((2, 1), (1, 1))
    assert horizontal_strip((3, 1), (1, 0))
    assert not horizontal_strip((3, 3), (1, 0))
    assert horizontal_strip((4, 2, 1), (4, 2, 1))


def test_stats_examples():
    assert stats((2, 1)) == (3, 1, 1, (2, 1))
    assert stats(()) == (0, 0, 0, ())
    assert stats((3, 3, 1)) == (7, 5, 6, (3, 2, 2))


def test_box_examples():
    assert partitions_in_box(2, 1) == [(), (1,), (1, 1)]
    assert partitions_in_box(1, 3) == [(), (1,), (2,), (3,)]
    box = partitions_in_box(3, 3)
    assert len(box) == 20 and set(box) == box_by_filtering(3, 3)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(6) for k in range(6)])
def test_box_size_is_binomial(n, k):
    assert len(partitions_in_box(n, k)) == math.comb(n + k, n)


def test_box_order_refines_inclusion():
    box = partitions_in_box(3, 3)
    pos = {lam: i for i, lam in enumerate(box)}
    for lam in box:
        for mu in box:
            if contains(lam, mu):
                assert pos[mu] <= pos[lam]


def test_bounded_vectors():
    assert list(bounded_vectors(1, 1)) == [(-1,), (0,), (1,)]
    assert list(bounded_vectors(2, 0)) == [(0, 0)]
    assert len(list(bounded_vectors(2, 1))) == 9
    with pytest.raises(ValueError):
        list(bounded_vectors(2, -1))


def test_conjugate_is_an_involution_on_4_box():
    for lam in partitions_in_box(4, 4):
        assert conjugate(conjugate(lam)) == lam


def test_strip_implies_containment_on_3_box():
    box = partitions_in_box(3, 3)
    for lam in box:
        for mu in box:
            if horizontal_strip(lam, mu):
                assert contains(lam, mu)


def test_conjugate_statistics_on_4_box():
    for lam in partitions_in_box(4, 4):
        c = conjugate(lam)
        assert weight(c) == weight(lam)
        assert n_conj(lam) == sum(math.comb(p, 2) for p in lam) == sum(i * p for i, p in enumerate(c))
        assert n_stat(lam) == sum(i * p for i, p in enumerate(lam))


def test_strips_below_matches_filter():
    for lam in partitions_in_box(3, 3):
        got = set(strips_below(lam))
        want = {mu for mu in partitions_in_box(3, 3) if horizontal_strip(lam, mu)}
        assert got == want


def test_subpartitions_and_lengths():
    assert subpartitions((2, 1)) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert set(partitions_of_length(2, 3)) == {mu for mu in partitions_in_box(2, 3) if weight(mu) <= 3}


def test_rectangular_and_permutation_counts():
    assert is_rectangular((), 3) and is_rectangular((2, 2), 2) and not is_rectangular((2, 2), 3)
    assert distinct_permutations((2, 1), 3) == 6
    assert distinct_permutations((1, 1), 3) == 3
    assert distinct_permutations((), 3) == 1


def test_cli_syntax():
    assert parse("[3,1]") == (3, 1)
    assert parse("[]") == ()
    assert format_partition((3, 1, 0)) == "[3,1]"
    with pytest.raises(ValueError):
        parse("3,1")


@given(partitions)
def test_parse_format_roundtrip(lam):
    assert parse(format_partition(lam)) == lam


@given(partitions, partitions)
def test_containment_is_antisymmetric(lam, mu):
    if contains(lam, mu) and contains(mu, lam):
        assert lam == mu
