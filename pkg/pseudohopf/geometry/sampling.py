from __future__ import annotations

import sys
import numpy as np

from tqdm import tqdm
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .point_geometry import PointGeometry

from ..fibrations import Submersion
from ..utilities import Tolerances, ResidualTracker, VerificationReport, sample_rng, get_logger

logger = get_logger(__name__)

# Stream ids of the per-sample generators; every suite draws from its own stream.
POINT_STREAM = 0
TENSOR_STREAM = 1
ONEILL_STREAM = 2
JACOBI_STREAM = 3
CLIFFORD_STREAM = 4
SPECIAL_BASIS_STREAM = 5
LIFT_STREAM = 6
FIBRATION_STREAM = 7


@dataclass(frozen=True, eq=False)
class PointSample:
    index: int
    seed: int
    stream: Tuple[int, ...]
    geometry: PointGeometry

    @property
    def p(self) -> np.ndarray:
        return self.geometry.p

    def rng(self, suite: int) -> np.random.Generator:
        return sample_rng(self.seed, *self.stream, suite, self.index)


def sample_points(submersion: Submersion, samples: int, seed: int,
                  stream: Sequence[int] = ()) -> List[PointSample]:
    """Seeded points of the total space with their geometry; sample k only depends on (seed, stream, k)."""
    stream = tuple(stream)
    points = []
    for index in tqdm(range(samples), desc=f"Sampling {submersion.spec.label}", disable=not sys.stderr.isatty()):
        rng = sample_rng(seed, *stream, POINT_STREAM, index)
        p = submersion.random_point(rng)
        points.append(PointSample(index=index, seed=seed, stream=stream, geometry=PointGeometry(submersion, p)))
    return points


def make_trackers(identity_ids: Iterable[str]) -> Dict[str, ResidualTracker]:
    return {identity_id: ResidualTracker(identity_id) for identity_id in identity_ids}


def build_report(subject: str, seed: int, trackers: Dict[str, ResidualTracker], tolerances: Tolerances,
                 not_applicable: Optional[Dict[str, str]] = None) -> VerificationReport:
    report = VerificationReport(subject=subject, seed=seed, not_applicable=dict(not_applicable or {}))
    report.add_trackers([tracker for tracker in trackers.values() if tracker.samples > 0], tolerances)
    for tracker in trackers.values():
        if tracker.samples == 0 and tracker.identity_id not in report.not_applicable:
            report.not_applicable[tracker.identity_id] = "no admissible sample"
    for result in report.failed():
        logger.warning(f"{subject}: {result.identity_id} failed "
                       f"(max residual {result.max_residual:.3e} > {result.tolerance:.1e})")
    return report


def scaled(residual: float, *vectors: np.ndarray) -> float:
    """Residual relative to the product of the Euclidean norms of the inputs (at least 1)."""
    scale = 1.0
    for vector in vectors:
        scale *= max(1.0, float(np.linalg.norm(vector)))
    return float(residual) / scale
