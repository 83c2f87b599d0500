from __future__ import annotations

from typing import Optional, Sequence

from .fibration_checks import fibration_checks
from .pi9_conformance import check_pi9

from ..classify import entry_for_spec
from ..fibrations import Submersion, FibrationId
from ..geometry import (sample_points, a_tensor_checks, oneill_residuals, special_osserman_check,
                        clifford_structure_check, special_basis_check, lift_checks)
from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import CURVATURE_CONVENTION, MEMBERSHIP_SAMPLES

logger = get_logger(__name__)


def verify_fibration(submersion: Submersion,
                     samples: int,
                     seed: int,
                     tolerances: Tolerances,
                     stream: Sequence[int] = (),
                     expensive: bool = False,
                     holonomy_samples: int = 3,
                     membership_samples: Optional[int] = None) -> VerificationReport:
    """
    All identities of one fibration instance, merged in a fixed order: pointwise submersion checks, A and T
    tensors, O'Neill equations, Jacobi spectra and the special Osserman conditions, Clifford structure, special
    bases and horizontal lifts of loops. pi9 additionally gets its polynomial conformance.
    """
    label = submersion.spec.label
    logger.info(f"Verifying {label} with {samples} samples (seed {seed})")
    points = sample_points(submersion, samples, seed, stream)
    membership_samples = MEMBERSHIP_SAMPLES if membership_samples is None else membership_samples

    report = fibration_checks(points, tolerances, membership_samples)
    for suite in (a_tensor_checks(points, tolerances),
                  oneill_residuals(points, tolerances, expensive=expensive),
                  special_osserman_check(points, tolerances),
                  clifford_structure_check(points, tolerances),
                  special_basis_check(points, tolerances),
                  lift_checks(points, tolerances, holonomy_samples)):
        report = report.merge(suite)
    if submersion.spec.id == FibrationId.pi9:
        report = report.merge(check_pi9(tolerances, seed, samples))

    report.subject = label
    report.header = {
        "fibration": submersion.spec.to_dict(),
        "catalog_row": entry_for_spec(submersion.spec).key,
        "samples": samples,
        "expensive": expensive,
        "curvature_convention": CURVATURE_CONVENTION,
        "tolerances": tolerances.to_dict(),
    }
    status = "passed" if report.passed else f"failed ({len(report.failed())} identities)"
    logger.info(f"Finished {label}: {status}")
    return report
