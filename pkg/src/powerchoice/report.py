"""Pass/fail records shared by the plane, construction and lemma checks."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

SCHEMA = 1


@dataclass
class VerificationReport:
    claim: str
    params: dict[str, Any]
    status: str
    witnesses: list[Any] = field(default_factory=list)
    elapsed_ms: float = 0.0
    values: dict[str, Any] = field(default_factory=dict)
    # total number of offending items; ``witnesses`` may be truncated
    violations: int = 0

    @classmethod
    def make(cls, claim, params, bad, elapsed_ms=0.0, max_witnesses=10, values=None):
        bad = list(bad)
        return cls(claim, dict(params), "pass" if not bad else "fail",
                   bad[:max_witnesses], elapsed_ms, dict(values or {}), len(bad))

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __post_init__(self):
        if self.status == "fail" and not self.witnesses:
            raise ValueError(f"failing report {self.claim!r} carries no witness")

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "violations": self.violations,
            "values": self.values,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
        }

    def to_text(self, timing: bool = True) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{self.status.upper():4} {self.claim} {params}".rstrip()
        if timing:
            head += f" ({self.elapsed_ms:.1f} ms)"
        lines = [head]
        if self.values:
            lines.append("     " + " ".join(f"{k}={v}" for k, v in self.values.items()))
        for w in self.witnesses:
            lines.append(f"     witness: {json.dumps(w, sort_keys=True)}")
        if self.violations > len(self.witnesses):
            lines.append(f"     ... {self.violations - len(self.witnesses)} more")
        return "\n".join(lines)


class _Timer:
    ms = 0.0


@contextmanager
def timed():
    t = _Timer()
    start = time.perf_counter()
    try:
        yield t
    finally:
        t.ms = (time.perf_counter() - start) * 1000.0


def dump_reports(reports, meta: dict[str, Any], timing: bool = True) -> str:
    """Deterministic JSON document for a batch of reports."""
    doc = {
        "schema": SCHEMA,
        **meta,
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
