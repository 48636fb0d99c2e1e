"""Claim results and how per-input results are merged."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Any

PASS, FAIL, FINDING = "PASS", "FAIL", "FINDING"
KINDS = ("exact", "float", "finding")


@dataclass
class ClaimResult:
    claim_id: str
    status: str
    residual: float
    tolerance: float
    inputs: dict = field(default_factory=dict)
    notes: str = ""
    # Only findings fill these: the expected value as stated and what was computed.
    expected: Any = None
    computed: Any = None
    agrees: bool | None = None
    details: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimResult":
        return cls(**d)


def _clean(x: float) -> float:
    x = float(x)
    return x if math.isfinite(x) else float("inf")


def judge(claim_id: str, details: dict[str, float], tolerance: float, *, kind: str = "float",
          expected: Any = None, computed: Any = None, notes: str = "", inputs: dict | None = None) -> ClaimResult:
    """Turn named residuals into a result; the residual is the worst entry."""
    if kind not in KINDS:
        raise ValueError(f"unknown claim kind {kind!r}")
    details = {k: _clean(v) for k, v in details.items()}
    residual = max(details.values(), default=0.0)
    ok = residual <= tolerance
    if kind == "finding":
        status = FINDING
        if computed is None:
            computed = details
    else:
        status = PASS if ok else FAIL
    return ClaimResult(claim_id, status, residual, float(tolerance), dict(inputs or {}), notes,
                       expected, computed, ok if kind == "finding" else None, details)


def _ratio(r: ClaimResult) -> float:
    if r.tolerance > 0:
        return r.residual / r.tolerance
    return 0.0 if r.residual == 0 else math.inf


def merge(results: list[ClaimResult]) -> ClaimResult:
    """Worst case over inputs: keeps the result with the largest residual/tolerance."""
    if not results:
        raise ValueError("nothing to merge")
    if len(results) == 1:
        return results[0]
    worst = max(results, key=_ratio)
    details: dict[str, float] = {}
    for r in results:
        for k, v in r.details.items():
            details[k] = max(details.get(k, 0.0), v)
    statuses = {r.status for r in results}
    status = FINDING if FINDING in statuses else (FAIL if FAIL in statuses else PASS)
    agrees = None
    if status == FINDING:
        agrees = all(bool(r.agrees) for r in results)
    return ClaimResult(worst.claim_id, status, worst.residual, worst.tolerance, dict(worst.inputs),
                       worst.notes, worst.expected, worst.computed,
                       agrees, details)
