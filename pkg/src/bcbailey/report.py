"""Check reports and their JSON form."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
POLE = "pole-retry-exhausted"
VERDICTS = (PASS, FAIL, POLE)


def jsonable(v):
    """Render parameter values and coefficients as JSON-safe data."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, float):
        return v
    if isinstance(v, complex):
        return [v.real, v.imag] if v.imag else v.real
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return str(v)


@dataclass
class Report:
    id: str
    params: dict
    mode: str
    order: int | None
    verdict: str
    witness: dict | None = None
    seed: int | None = None
    wall_ms: float = 0.0
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": jsonable(self.params),
            "mode": self.mode,
            "order": self.order,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
            "seed": self.seed,
            "wall_ms": round(self.wall_ms, 3),
        }

    def line(self) -> str:
        ps = " ".join(f"{k}={jsonable(v)}" for k, v in self.params.items())
        return f"{self.verdict.upper():5s} {self.id} [{self.mode}] {ps}"


def witness(exponent, lhs, rhs) -> dict:
    return {"exponent": exponent, "lhs": lhs, "rhs": rhs}


@contextmanager
def stopwatch():
    """Yield a one-element list that receives the elapsed milliseconds."""
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = (time.perf_counter() - t0) * 1000.0
