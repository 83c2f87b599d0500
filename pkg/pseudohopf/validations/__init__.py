from .identity_checker import IdentityChecker, VerificationException
from .algebra_checks import algebra_checks, audited_algebras
from .space_checks import space_checks, audited_spaces
from .pi9_conformance import check_pi9
from .fibration_checks import fibration_checks, projector_defect, invariant_inner, orbit_reproduction_residual
from .fibration_suite import verify_fibration
from .verification_runner import VerificationRunner, foundations_report, run_check_pi9

__all__ = [
    "IdentityChecker",
    "VerificationException",
    "algebra_checks",
    "audited_algebras",
    "space_checks",
    "audited_spaces",
    "check_pi9",
    "fibration_checks",
    "projector_defect",
    "invariant_inner",
    "orbit_reproduction_residual",
    "verify_fibration",
    "VerificationRunner",
    "foundations_report",
    "run_check_pi9",
]
