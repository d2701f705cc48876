"""Shared plumbing for identity checkers: outcomes, comparisons, random points."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..bailey import same
from ..scalar import EqVerdict, Series, close

NONZERO = [i for i in range(-9, 10) if i]


@dataclass
class Outcome:
    """Result of one evaluation of both sides of an identity."""

    verdict: EqVerdict
    label: str | None = None
    point: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.verdict)


def passed(point=None, **extra) -> Outcome:
    return Outcome(EqVerdict(True), None, point or {}, extra)


def compare(pairs, point=None, order: int | None = None, rtol: float = 1e-9) -> Outcome:
    """Compare ``(label, lhs, rhs)`` triples in order; the first mismatch wins."""
    for label, lhs, rhs in pairs:
        v = same(lhs, rhs, order, rtol)
        if not v:
            return Outcome(v, label, point or {})
    return passed(point)


def float_compare(pairs, point=None, rtol: float = 1e-9) -> Outcome:
    for label, lhs, rhs in pairs:
        if not close(complex(lhs), complex(rhs), rtol=rtol, atol=rtol):
            return Outcome(EqVerdict(False, 0, complex(lhs), complex(rhs)), label, point or {})
    return passed(point)


def rand_rat(rng: random.Random) -> Fraction:
    """A ratio of two integers drawn from ``[-9, 9] \\ {0}``."""
    return Fraction(rng.choice(NONZERO), rng.choice(NONZERO))


def rand_rats(rng: random.Random, names) -> dict:
    return {k: rand_rat(rng) for k in names}


def rand_unit(rng: random.Random, lo: float = 0.1, hi: float = 0.9) -> float:
    """A float of modulus between ``lo`` and ``hi`` with random sign."""
    return rng.choice((-1, 1)) * rng.uniform(lo, hi)


def q_order(order_q: int | None) -> int | None:
    """Convert an order in powers of ``q`` to sqrtq units."""
    return None if order_q is None else 2 * order_q


def series_point(s: Series) -> dict:
    return {"val": s.val, "prec": s.prec}
