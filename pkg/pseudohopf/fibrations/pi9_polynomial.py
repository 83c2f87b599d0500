"""
The expanded nine-component polynomial of the split-octonion Hopf map H^15_7 -> H^8_4(-4), kept as a literal
coefficient table. It is the conformance oracle for the split-octonion product convention.
"""
import re
import numpy as np

from functools import lru_cache
from typing import Tuple

from .hopf_construction import HopfConstruction, HopfVariant
from .fibration_exception import FibrationException

from ..algebra import AlgebraName, STANDARD_CONVENTION, MIRROR_CONVENTION, get_algebra
from ..utilities import get_logger, sample_rng
from ..utilities.constants import DEFAULT_SEED

logger = get_logger(__name__)

# Components in natural target order (t, w1, ..., w8); the first one is halved.
PI9_COMPONENTS: Tuple[str, ...] = (
    "+x1x1 +x2x2 +x3x3 +x4x4 -x5x5 -x6x6 -x7x7 -x8x8 -y1y1 -y2y2 -y3y3 -y4y4 +y5y5 +y6y6 +y7y7 +y8y8",
    "+x1y1 +x2y2 +x3y3 +x4y4 -x5y5 -x6y6 -x7y7 -x8y8",
    "-x2y1 +x1y2 +x4y3 -x3y4 -x6y5 +x5y6 +x8y7 -x7y8",
    "-x3y1 -x4y2 +x1y3 +x2y4 -x7y5 -x8y6 +x5y7 +x6y8",
    "-x4y1 +x3y2 -x2y3 +x1y4 -x8y5 +x7y6 -x6y7 +x5y8",
    "-x5y1 -x6y2 -x7y3 -x8y4 +x1y5 +x2y6 +x3y7 +x4y8",
    "-x6y1 +x5y2 -x8y3 +x7y4 -x2y5 +x1y6 -x4y7 +x3y8",
    "-x7y1 +x8y2 +x5y3 -x6y4 -x3y5 +x4y6 +x1y7 -x2y8",
    "-x8y1 -x7y2 +x6y3 +x5y4 -x4y5 -x3y6 +x2y7 +x1y8",
)
PI9_SCALES: Tuple[float, ...] = (0.5,) + (1.0,) * 8

_TERM = re.compile(r"([+-])([xy])(\d)([xy])(\d)")

PI9_AUDIT_SAMPLES = 200


def _natural_index(letter: str, number: str) -> int:
    return 2 * (int(number) - 1) + (0 if letter == "x" else 1)


@lru_cache(maxsize=1)
def pi9_coefficients() -> np.ndarray:
    """Symmetric (9, 16, 16) array C with component_k(z) = z^T C_k z in natural domain coordinates."""
    coefficients = np.zeros((len(PI9_COMPONENTS), 16, 16))
    for k, (component, scale) in enumerate(zip(PI9_COMPONENTS, PI9_SCALES)):
        for sign, letter_a, number_a, letter_b, number_b in _TERM.findall(component):
            a, b = _natural_index(letter_a, number_a), _natural_index(letter_b, number_b)
            value = (1.0 if sign == "+" else -1.0) * scale
            coefficients[k, a, b] += value / 2.0
            coefficients[k, b, a] += value / 2.0
    return coefficients


def evaluate_pi9_polynomial(natural: np.ndarray) -> np.ndarray:
    natural = np.asarray(natural, dtype=float)
    return np.einsum("...i,kij,...j->...k", natural, pi9_coefficients(), natural)


def pi9_deviations(construction: HopfConstruction, points: np.ndarray) -> np.ndarray:
    """Componentwise |evaluator - polynomial| / max(1, |polynomial|) at ambient domain points."""
    by_algebra = construction.evaluate_natural(points)
    by_polynomial = evaluate_pi9_polynomial(construction.to_natural(points))
    return np.abs(by_algebra - by_polynomial) / np.maximum(1.0, np.abs(by_polynomial))


def audit_split_octonion_convention(rng: np.random.Generator, samples: int = PI9_AUDIT_SAMPLES,
                                    tolerance: float = 1e-12) -> Tuple[str, float]:
    """
    Return the first product convention (standard, then mirror) whose split-octonion phi1 reproduces the
    literal polynomial, together with its maximal deviation.
    """
    deviations = {}
    for convention in (STANDARD_CONVENTION, MIRROR_CONVENTION):
        construction = HopfConstruction(get_algebra(AlgebraName.Oprime, convention), HopfVariant.phi1)
        points = np.array([construction.domain.random_point(rng) for _ in range(samples)])
        deviations[convention] = float(np.max(pi9_deviations(construction, points)))
        if deviations[convention] <= tolerance:
            logger.info(f"Split-octonion convention '{convention}' reproduces the pi9 polynomial "
                        f"(max deviation {deviations[convention]:.3e})")
            return convention, deviations[convention]
    raise FibrationException(f"No product convention reproduces the pi9 polynomial: {deviations}")


@lru_cache(maxsize=1)
def selected_split_octonion_convention() -> str:
    convention, _ = audit_split_octonion_convention(sample_rng(DEFAULT_SEED, 9))
    return convention
