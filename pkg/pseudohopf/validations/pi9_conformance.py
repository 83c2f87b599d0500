import numpy as np

from ..algebra import AlgebraName
from ..fibrations import FibrationId, HopfVariant, PI9_COMPONENTS, hopf_construction, pi9_deviations
from ..geometry.sampling import make_trackers, build_report
from ..utilities import Tolerances, VerificationReport, sample_rng, get_logger

logger = get_logger(__name__)


def check_pi9(tolerances: Tolerances, seed: int, samples: int) -> VerificationReport:
    """
    The split-octonion phi1 evaluator against the literal nine-component polynomial at seeded domain points.
    """
    construction = hopf_construction(AlgebraName.Oprime, HopfVariant.phi1)
    rng = sample_rng(seed, FibrationId.pi9.value)
    points = np.array([construction.domain.random_point(rng) for _ in range(samples)])
    deviations = pi9_deviations(construction, points)

    trackers = make_trackers(["pi9_conformance"])
    trackers["pi9_conformance"].add_all(np.max(deviations, axis=1))
    trackers["pi9_conformance"].details.update({
        "convention": construction.algebra.convention,
        "components": len(PI9_COMPONENTS),
        "max_deviation_per_component": np.max(deviations, axis=0),
    })
    logger.info(f"pi9 conformance over {samples} points: max deviation {float(np.max(deviations)):.3e}")
    return build_report("pi9_conformance", seed, trackers, tolerances)
