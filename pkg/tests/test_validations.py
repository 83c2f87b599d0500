import unittest

from pseudohopf.fibrations import FibrationId, SPLIT_PHI2_MAPS, get_fibration, split_phi2_fibration
from pseudohopf.utilities import Tolerances, IdentityResult, VerificationReport
from pseudohopf.utilities.constants import ALGEBRA_SAMPLES
from pseudohopf.validations import (IdentityChecker, VerificationException, VerificationRunner, audited_algebras,
                                    check_pi9, foundations_report, verify_fibration)

from conftest import QUOTIENT_DIMENSION, SUITE_SAMPLES, SUITE_SEED


def _failed_report() -> VerificationReport:
    result = IdentityResult(identity_id="pi9_conformance", anchor="pi9", samples=1, max_residual=1.0,
                            tolerance=1e-12, passed=False)
    return VerificationReport(subject="pi9", seed=0, results=[result])


def test_fibration_suite(fibration_id: FibrationId, t: int):
    m = QUOTIENT_DIMENSION if fibration_id not in FibrationId.hopf_fibrations() else None
    submersion = get_fibration(fibration_id, m, t)
    report = verify_fibration(submersion, samples=SUITE_SAMPLES, seed=SUITE_SEED, tolerances=Tolerances(),
                              stream=(fibration_id.value, t), membership_samples=50)
    assert report.passed, [result.identity_id for result in report.failed()]
    assert report.subject == submersion.spec.label
    assert len(report.results) > 0


def test_split_phi2_suite():
    for fibration_id in SPLIT_PHI2_MAPS:
        report = verify_fibration(split_phi2_fibration(fibration_id), samples=SUITE_SAMPLES, seed=SUITE_SEED,
                                  tolerances=Tolerances(), stream=(fibration_id.value, 1), membership_samples=50)
        assert report.passed, (report.subject, [result.identity_id for result in report.failed()])
        assert report.subject == f"{fibration_id.name}_phi2"


class IdentityCheckerTests(unittest.TestCase):

    def test_warn_mode_counts_failures(self):
        checker = IdentityChecker("warn")
        self.assertFalse(checker.check_report(_failed_report()))
        self.assertEqual(checker.failures, 1)

    def test_error_mode_raises(self):
        with self.assertRaises(VerificationException):
            IdentityChecker("error").check_report(_failed_report())

    def test_check_reports(self):
        checker = IdentityChecker("warn")
        passed = check_pi9(Tolerances(), seed=1, samples=2)
        self.assertFalse(checker.check_reports([passed, _failed_report(), _failed_report()]))
        self.assertEqual(checker.failures, 2)

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            IdentityChecker("ignore")


class ReportTests(unittest.TestCase):

    def test_pi9_conformance(self):
        report = check_pi9(Tolerances(), seed=3, samples=20)
        self.assertTrue(report.passed)
        self.assertEqual(report.get("pi9_conformance").samples, 20)

    def test_foundations(self):
        report = foundations_report(Tolerances(), seed=SUITE_SEED, samples=3)
        self.assertTrue(report.passed, [result.identity_id for result in report.failed()])
        self.assertIn("curvature_convention", report.header)
        pairs = len(audited_algebras()) * ALGEBRA_SAMPLES
        self.assertEqual(report.get("composition").samples, pairs)
        self.assertEqual(report.get("anti_automorphism").samples, pairs)

    def test_tolerance_overrides(self):
        self.assertIn("pi9_conformance", Tolerances.known_identities())
        tolerances = Tolerances({"pi9_conformance": 1e-6})
        self.assertEqual(tolerances["pi9_conformance"], 1e-6)
        self.assertEqual(tolerances.overridden(), {"pi9_conformance": 1e-6})
        with self.assertRaises(KeyError):
            Tolerances({"not_an_identity": 1.0})
        with self.assertRaises(ValueError):
            Tolerances({"pi9_conformance": 0.0})

    def test_runner_is_deterministic(self):
        def run():
            runner = VerificationRunner([FibrationId.pi4, FibrationId.pi1], samples=1, seed=SUITE_SEED,
                                        tolerances=Tolerances(), membership_samples=20)
            return [report.to_dict() for report in runner.run()]

        first = run()
        self.assertEqual([report["subject"] for report in first[1:]], ["pi1", "pi4"])
        self.assertEqual(first, run())

    def test_runner_adds_split_phi2_reports(self):
        runner = VerificationRunner([FibrationId.pi7], samples=1, seed=SUITE_SEED, tolerances=Tolerances(),
                                    membership_samples=20)
        self.assertEqual([report.subject for report in runner.run()], ["foundations", "pi7", "pi7_phi2"])
