from typing import Iterable

from ..utilities import VerificationReport, get_logger

logger = get_logger(__name__)


class VerificationException(Exception):
    """Raised for a failed identity while the checker runs in error mode."""


class IdentityChecker:
    """
    Inspects finished reports. In `warn` mode failed identities are logged, in `error` mode the first failure
    stops the run.
    """

    def __init__(self, mode: str = "warn"):
        if mode not in ("warn", "error"):
            raise ValueError(f"Unknown identity check mode: {mode}")
        self.mode = mode
        self.failures = 0

    def _handle_result(self, result: str):
        self.failures += 1
        if self.mode == "warn":
            logger.warning(result)
        elif self.mode == "error":
            raise VerificationException(result)

    def check_report(self, report: VerificationReport) -> bool:
        for result in report.failed():
            self._handle_result(f"{report.subject}: identity {result.identity_id} ({result.anchor}) failed with "
                                f"max residual {result.max_residual:.3e} > tolerance {result.tolerance:.1e}")
        return report.passed

    def check_reports(self, reports: Iterable[VerificationReport]) -> bool:
        return all([self.check_report(report) for report in reports])
