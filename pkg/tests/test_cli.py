import json
import tempfile
import unittest

from pathlib import Path
from ruamel.yaml import YAML

from pseudohopf.utilities.cli import main, headless_main, EXIT_PASSED, EXIT_CONFIGURATION_ERROR
from pseudohopf.utilities.executer import report_file_name
from pseudohopf.utilities import DEFAULT_SEED


class CommandLineTests(unittest.TestCase):

    def setUp(self):
        self._tmp_dir = tempfile.TemporaryDirectory()
        self.output_dir = Path(self._tmp_dir.name)

    def tearDown(self):
        self._tmp_dir.cleanup()

    def test_catalog(self):
        self.assertEqual(main(["catalog", "--out", str(self.output_dir)]), EXIT_PASSED)
        exported = json.loads((self.output_dir / "catalog.json").read_text())
        self.assertEqual(len(exported), 15)

        self.assertEqual(main(["catalog", "--format", "markdown", "--out", str(self.output_dir)]), EXIT_PASSED)
        self.assertIn("| f | pi_O' |", (self.output_dir / "catalog.md").read_text())
        self.assertTrue((self.output_dir / "out.yml").exists())

    def test_check_pi9(self):
        exit_code = main(["check-pi9", "--samples", "10", "--seed", "1", "--out", str(self.output_dir)])
        self.assertEqual(exit_code, EXIT_PASSED)
        report = json.loads((self.output_dir / "pi9_conformance.json").read_text())
        self.assertTrue(report["passed"])
        self.assertEqual(report["seed"], 1)

        self.assertEqual(main(["check-pi9", "--samples", "2", "--out", str(self.output_dir)]), EXIT_PASSED)
        summary = YAML().load((self.output_dir / "out.yml").read_text())
        self.assertTrue(summary["default_seed"])
        self.assertEqual(summary["config"]["seed"], DEFAULT_SEED)

    def test_configuration_errors(self):
        self.assertEqual(main([]), EXIT_CONFIGURATION_ERROR)
        self.assertEqual(main(["verify", "--fibration", "pi9", "--tol", "not_an_identity=1e-3",
                               "--out", str(self.output_dir)]), EXIT_CONFIGURATION_ERROR)
        self.assertEqual(main(["verify", "--tol", "oneill_a", "--out", str(self.output_dir)]),
                         EXIT_CONFIGURATION_ERROR)
        self.assertEqual(main(["verify", "--fibration", "pi10", "--out", str(self.output_dir)]),
                         EXIT_CONFIGURATION_ERROR)

    def test_argument_errors(self):
        with self.assertRaises(SystemExit):
            main(["verify", "--samples", "ten"])
        with self.assertRaises(SystemExit):
            main(["train"])

    def test_report_file_name(self):
        self.assertEqual(report_file_name("pi_C(m=2,t=1)", "json"), "pi_C_m2_t1.json")
        self.assertEqual(report_file_name("pi_A(m=1)", "markdown"), "pi_A_m1.md")
        self.assertEqual(report_file_name("pi9", "json"), "pi9.json")


class HeadlessRunTests(unittest.TestCase):

    @staticmethod
    def _run(output_dir: Path):
        return headless_main({"command": "verify", "fibrations": ["pi_A"], "quotient_dimension": 1, "samples": 1,
                              "seed": 5, "output_dir": str(output_dir)})

    def test_verify_writes_reports(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            result = self._run(Path(tmp_dir))
            self.assertTrue(result["passed"], result["reports"])
            self.assertEqual(result["files"], ["foundations.json", "pi_A_m1.json"])
            self.assertEqual(list(result["reports"].keys()), ["foundations", "pi_A(m=1)"])
            self.assertEqual(result["config"]["fibrations"], ["pi_A"])
            self.assertFalse(result["default_seed"])
            self.assertTrue((Path(tmp_dir) / "out.yml").exists())

    def test_runs_are_reproducible(self):
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            self._run(Path(first))
            self._run(Path(second))
            for file_name in ("foundations.json", "pi_A_m1.json"):
                self.assertEqual((Path(first) / file_name).read_text(), (Path(second) / file_name).read_text())
