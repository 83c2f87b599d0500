from __future__ import annotations

import math
import numpy as np

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .constants import IDENTITY_ANCHORS


def round_significant(value: float, digits: int = 6) -> float:
    if value is None or not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


def _serializable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _serializable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serializable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_serializable(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round_significant(float(value))
    return value


@dataclass
class IdentityResult:
    identity_id: str
    anchor: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "anchor": self.anchor,
            "samples": int(self.samples),
            "max_residual": round_significant(float(self.max_residual)),
            "tolerance": float(self.tolerance),
            "passed": bool(self.passed),
            "details": _serializable(self.details),
        }


class ResidualTracker:
    """Collects residuals of one identity over a sample loop."""

    def __init__(self, identity_id: str):
        self.identity_id = identity_id
        self.samples = 0
        self.max_residual = 0.0
        self.details: Dict[str, Any] = {}

    def add(self, residual: float):
        residual = float(residual)
        self.samples += 1
        if math.isnan(residual) or math.isnan(self.max_residual):
            self.max_residual = float("nan")
        else:
            self.max_residual = max(self.max_residual, abs(residual))

    def add_all(self, residuals):
        residuals = np.abs(np.ravel(np.asarray(residuals, dtype=float)))
        if residuals.size == 0:
            return
        self.samples += residuals.size
        if np.isnan(residuals).any() or math.isnan(self.max_residual):
            self.max_residual = float("nan")
        else:
            self.max_residual = max(self.max_residual, float(np.max(residuals)))

    def result(self, tolerance: float) -> IdentityResult:
        passed = self.samples > 0 and bool(self.max_residual <= tolerance)
        return IdentityResult(identity_id=self.identity_id,
                              anchor=IDENTITY_ANCHORS[self.identity_id],
                              samples=self.samples,
                              max_residual=self.max_residual,
                              tolerance=tolerance,
                              passed=passed,
                              details=self.details)


@dataclass
class VerificationReport:
    subject: str
    seed: int
    header: Dict[str, Any] = field(default_factory=dict)
    results: List[IdentityResult] = field(default_factory=list)
    not_applicable: Dict[str, str] = field(default_factory=dict)
    reprojections: int = 0

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failed(self) -> List[IdentityResult]:
        return [result for result in self.results if not result.passed]

    def get(self, identity_id: str) -> Optional[IdentityResult]:
        for result in self.results:
            if result.identity_id == identity_id:
                return result
        return None

    def add_trackers(self, trackers, tolerances):
        for tracker in trackers:
            self.results.append(tracker.result(tolerances[tracker.identity_id]))

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Concatenate results in call order; re-projection counts add up."""
        return VerificationReport(subject=self.subject,
                                  seed=self.seed,
                                  header={**other.header, **self.header},
                                  results=self.results + other.results,
                                  not_applicable={**self.not_applicable, **other.not_applicable},
                                  reprojections=self.reprojections + other.reprojections)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "seed": int(self.seed),
            "passed": self.passed,
            "header": _serializable(self.header),
            "results": [result.to_dict() for result in self.results],
            "not_applicable": dict(self.not_applicable),
            "reprojections": int(self.reprojections),
        }

    def to_markdown(self) -> str:
        lines = [f"## {self.subject}", "",
                 f"seed: {self.seed}, re-projections: {self.reprojections}, "
                 f"status: {'PASS' if self.passed else 'FAIL'}", "",
                 "| identity | relation | samples | max residual | tolerance | pass |",
                 "|---|---|---|---|---|---|"]
        for result in self.results:
            lines.append(f"| {result.identity_id} | `{result.anchor}` | {result.samples} | "
                         f"{round_significant(float(result.max_residual)):.3e} | {result.tolerance:.1e} | "
                         f"{'yes' if result.passed else 'NO'} |")
        if self.not_applicable:
            lines += ["", "Not applicable:", ""]
            lines += [f"* {identity_id}: {reason}" for identity_id, reason in self.not_applicable.items()]
        return "\n".join(lines) + "\n"
