"""Verification reports shared by the matrix, Jacobi and Ore checks."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
SKIPPED_DEGENERATE = "skipped-degenerate"
STATUSES = (PASS, FAIL, HYPOTHESIS_NOT_MET, SKIPPED_DEGENERATE)


@dataclass
class Witness:
    i: int
    j: int
    expected: str
    actual: str

    def to_dict(self):
        return {"i": self.i, "j": self.j, "expected": self.expected, "actual": self.actual}


@dataclass
class CheckReport:
    name: str
    parameters: dict = field(default_factory=dict)
    status: str = PASS
    witness: Optional[Witness] = None
    elapsed_ms: float = 0.0
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")
        if self.status == PASS and self.witness is not None:
            raise ValueError("a passing report carries no witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "name": self.name,
            "parameters": {k: _jsonable(v) for k, v in self.parameters.items()},
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness else None,
        }
        if self.detail:
            out["detail"] = self.detail
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _jsonable(v):
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


@contextmanager
def timed():
    """Yields a one-element list that receives the elapsed milliseconds."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = (time.perf_counter() - start) * 1000.0
