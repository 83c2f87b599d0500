from __future__ import annotations

from typing import Any, Dict, List

from .algebra_checks import algebra_checks
from .space_checks import space_checks
from .fibration_suite import verify_fibration
from .identity_checker import IdentityChecker
from .pi9_conformance import check_pi9

from ..fibrations import FibrationId, fibration_submersions
from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import CURVATURE_CONVENTION, DEFAULT_QUOTIENT_DIMENSION

logger = get_logger(__name__)


def foundations_report(tolerances: Tolerances, seed: int, samples: int) -> VerificationReport:
    report = algebra_checks(tolerances, seed).merge(space_checks(tolerances, seed, samples))
    report.header = {"curvature_convention": CURVATURE_CONVENTION, "tolerances": tolerances.to_dict()}
    return report


class VerificationRunner:
    """
    Runs the foundations audit and then every selected fibration instance. Reports come back in catalog order
    and every sample stream is keyed by (fibration, instance), so the output only depends on the configuration.
    """

    def __init__(self, fibrations: List[FibrationId], samples: int, seed: int, tolerances: Tolerances,
                 quotient_dimension: int = DEFAULT_QUOTIENT_DIMENSION, expensive: bool = False,
                 holonomy_samples: int = 3, identity_check_mode: str = "warn", **kwargs):
        self.fibrations = [fibration_id for fibration_id in FibrationId.all() if fibration_id in fibrations]
        self.samples = samples
        self.seed = seed
        self.tolerances = tolerances
        self.quotient_dimension = quotient_dimension
        self.expensive = expensive
        self.holonomy_samples = holonomy_samples
        self.checker = IdentityChecker(identity_check_mode)
        self.membership_samples = kwargs.get("membership_samples")

    def run(self) -> List[VerificationReport]:
        reports = [foundations_report(self.tolerances, self.seed, self.samples)]
        self.checker.check_report(reports[0])
        for fibration_id in self.fibrations:
            for instance_index, submersion in enumerate(fibration_submersions(fibration_id, self.quotient_dimension)):
                report = verify_fibration(submersion, samples=self.samples, seed=self.seed,
                                          tolerances=self.tolerances, stream=(fibration_id.value, instance_index),
                                          expensive=self.expensive, holonomy_samples=self.holonomy_samples,
                                          membership_samples=self.membership_samples)
                self.checker.check_report(report)
                reports.append(report)
        failed = [report.subject for report in reports if not report.passed]
        logger.info(f"Verified {len(reports)} reports, {len(failed)} with failed identities"
                    + (f": {failed}" if failed else ""))
        return reports


def run_check_pi9(config: Dict[str, Any]) -> VerificationReport:
    report = check_pi9(config["tolerances"], config["seed"], config["samples"])
    IdentityChecker(config.get("identity_check_mode", "warn")).check_report(report)
    return report
