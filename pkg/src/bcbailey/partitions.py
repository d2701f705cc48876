"""Partitions, horizontal strips, statistics and lattice enumeration.

Partitions are plain tuples of weakly decreasing non-negative integers in
normalized form (trailing zeros stripped), so ``(2, 1, 0) == (2, 1)`` holds
after :func:`normalize` and the two index the same matrix entry.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Iterator, Sequence

Partition = tuple


def normalize(parts: Sequence[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def pad(lam: Sequence[int], n: int) -> tuple:
    """Return ``lam`` padded with zeros to exactly ``n`` entries."""
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} nonzero parts")
        return lam[:n]
    return lam + (0,) * (n - len(lam))


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p)


def part(lam: Sequence[int], i: int) -> int:
    """``lam_i`` with 1-based index ``i``; zero beyond the stored parts."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu ⊆ lam``: every part of ``mu`` is at most the matching part of ``lam``."""
    n = max(len(lam), len(mu))
    return all(part(mu, i) <= part(lam, i) for i in range(1, n + 1))


def horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...``."""
    n = max(len(lam), len(mu)) + 1
    for i in range(1, n + 1):
        if not (part(lam, i) >= part(mu, i) >= part(lam, i + 1)):
            return False
    return True


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def n_stat(lam: Sequence[int]) -> int:
    """``n(lam) = sum (i-1) lam_i``."""
    return sum(i * p for i, p in enumerate(lam))


def n_conj(lam: Sequence[int]) -> int:
    """``n(lam') = sum C(lam_i, 2)``."""
    return sum(p * (p - 1) // 2 for p in lam)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def stats(lam: Sequence[int]) -> tuple[int, int, int, Partition]:
    """``(|lam|, n(lam), n(lam'), lam')``."""
    return weight(lam), n_stat(lam), n_conj(lam), conjugate(lam)


def is_rectangular(lam: Sequence[int], n: int) -> bool:
    """All ``n`` entries equal (zeros included); the empty partition counts."""
    p = pad(lam, n)
    return len(set(p)) <= 1


def distinct_permutations(lam: Sequence[int], n: int) -> int:
    """Number of distinct rearrangements of ``lam`` padded to ``n`` entries."""
    out = math.factorial(n)
    for m in Counter(pad(lam, n)).values():
        out //= math.factorial(m)
    return out


def partitions_in_box(n: int, k: int) -> list[Partition]:
    """All partitions with at most ``n`` parts, each at most ``k``.

    The order is lexicographic on zero-padded tuples, which refines the
    inclusion order: ``mu ⊆ lam`` puts ``mu`` no later than ``lam``.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    out = []

    def rec(prefix, maxpart, left):
        if left == 0:
            out.append(normalize(prefix))
            return
        for p in range(0, maxpart + 1):
            rec(prefix + (p,), p, left - 1)

    # build padded tuples with non-increasing entries, then sort
    rec((), k, n)
    return sorted(set(out), key=lambda lam: pad(lam, n))


def partitions_of_length(n: int, max_weight: int) -> Iterator[Partition]:
    """Partitions with at most ``n`` parts and weight at most ``max_weight``."""

    def rec(prefix, maxpart, left, budget):
        if left == 0:
            yield normalize(prefix)
            return
        for p in range(min(maxpart, budget) + 1):
            yield from rec(prefix + (p,), p, left - 1, budget - p)

    yield from rec((), max_weight, n, max_weight)


def strips_below(lam: Sequence[int], max_len: int | None = None) -> Iterator[Partition]:
    """All ``nu`` with ``lam/nu`` a horizontal strip (``lam_{i+1} <= nu_i <= lam_i``)."""
    lam = normalize(lam)
    n = len(lam)
    ranges = [range(part(lam, i + 1), part(lam, i) + 1) for i in range(1, n + 1)]
    for nu in itertools.product(*ranges):
        nu = normalize(nu)
        if max_len is None or len(nu) <= max_len:
            yield nu


def subpartitions(lam: Sequence[int]) -> list[Partition]:
    """All ``mu ⊆ lam`` in lexicographic order of padded tuples."""
    lam = normalize(lam)
    n = len(lam)
    out = []

    def rec(prefix, i):
        if i == n:
            out.append(normalize(prefix))
            return
        hi = lam[i] if i == 0 else min(lam[i], prefix[-1])
        for p in range(hi + 1):
            rec(prefix + (p,), i + 1)

    rec((), 0)
    return sorted(out, key=lambda mu: pad(mu, max(n, 1)))


def bounded_vectors(n: int, T: int) -> Iterator[tuple]:
    """Integer vectors of length ``n`` with entries in ``[-T, T]``, lexicographic."""
    if T < 0:
        raise ValueError("T must be non-negative")
    return itertools.product(range(-T, T + 1), repeat=n)


def parse(text: str) -> Partition:
    """Parse the CLI syntax ``[3,1]`` (``[]`` is the empty partition)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return normalize(int(x) for x in body.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in normalize(lam)) + "]"
