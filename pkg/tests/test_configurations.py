import unittest
import tempfile

from pathlib import Path
from copy import deepcopy

from pseudohopf.commands import Command
from pseudohopf.config import Configurator, ConfigurationException
from pseudohopf.fibrations import FibrationId
from pseudohopf.utilities import Tolerances, DEFAULT_SEED

configurations = {
    "minimal": {
        "command": "verify",
    },
    "catalog": {
        "command": "catalog",
        "output_format": "markdown",
    },
    "check_pi9": {
        "command": "check-pi9",
        "samples": 50,
        "tolerances": {
            "pi9_conformance": 1e-10
        }
    },
    "verify": {
        "command": "verify",
        "fibrations": ["pi9", "pi_C", "pi4", "pi9"],
        "samples": 10,
        "seed": 3,
        "quotient_dimension": 1,
        "tolerances": {
            "oneill_a": 1e-6,
        }
    },
}


def test_command_parsing(command_string, expected):
    assert Command.from_string(command_string) == expected


class ConfigurationVerificationTests(unittest.TestCase):

    def setUp(self):
        self._tmp_dir = tempfile.TemporaryDirectory()
        self.output_dir = str(Path(self._tmp_dir.name) / "output")

    def tearDown(self):
        self._tmp_dir.cleanup()

    def _verified(self, config_dict):
        return Configurator.from_config_dict({**config_dict, "output_dir": self.output_dir}).get_verified_config()

    def test_minimal_configuration(self):
        verified_config = self._verified(configurations["minimal"])
        self.assertEqual(verified_config["command"], Command.verify)
        self.assertEqual(verified_config["seed"], DEFAULT_SEED)
        self.assertTrue(Configurator.from_config_dict(configurations["minimal"]).uses_default_seed)
        self.assertEqual(verified_config["fibrations"], FibrationId.all())
        self.assertIsInstance(verified_config["tolerances"], Tolerances)
        self.assertTrue(Path(verified_config["output_dir"]).is_dir())

    def test_missing_command(self):
        with self.assertRaises(ConfigurationException, msg="Config without command does not throw an error!"):
            Configurator.from_config_dict({"seed": 1})

    def test_invalid_command(self):
        with self.assertRaisesRegex(ConfigurationException, expected_regex="Invalid command"):
            Configurator.from_config_dict({"command": "train"})

    def test_fibrations_in_catalog_order(self):
        verified_config = self._verified(configurations["verify"])
        self.assertEqual(verified_config["fibrations"], [FibrationId.pi_C, FibrationId.pi4, FibrationId.pi9])
        self.assertEqual(verified_config["tolerances"]["oneill_a"], 1e-6)
        self.assertEqual(verified_config["quotient_dimension"], 1)
        self.assertFalse(Configurator.from_config_dict(configurations["verify"]).uses_default_seed)
        self.assertFalse(Configurator.from_config_dict(configurations["catalog"]).uses_default_seed)

    def test_catalog_has_no_sampling_options(self):
        verified_config = self._verified(configurations["catalog"])
        self.assertNotIn("seed", verified_config)
        self.assertNotIn("tolerances", verified_config)

        with self.assertRaises(ConfigurationException, msg="Seed for catalog does not throw an error!"):
            self._verified({**configurations["catalog"], "seed": 1})

        with self.assertRaises(ConfigurationException, msg="Tolerances for catalog do not throw an error!"):
            self._verified({**configurations["catalog"], "tolerances": {"pi9_conformance": 1e-10}})

        with self.assertRaises(ConfigurationException, msg="Fibrations for catalog do not throw an error!"):
            self._verified({**configurations["catalog"], "fibrations": "all"})

    def test_check_pi9(self):
        verified_config = self._verified(configurations["check_pi9"])
        self.assertEqual(verified_config["command"], Command.check_pi9)
        self.assertEqual(verified_config["tolerances"]["pi9_conformance"], 1e-10)
        self.assertNotIn("fibrations", verified_config)

    def test_samples(self):
        for samples in (0, -3, "ten", True, 2.5):
            config_dict = {**configurations["minimal"], "samples": samples}
            with self.assertRaises(ConfigurationException, msg=f"samples={samples} does not throw an error!"):
                self._verified(config_dict)

    def test_unknown_fibration(self):
        config_dict = {**configurations["minimal"], "fibrations": ["pi10"]}
        with self.assertRaisesRegex(ConfigurationException, expected_regex="unknown fibration ids"):
            self._verified(config_dict)

    def test_all_is_mutually_exclusive(self):
        config_dict = {**configurations["minimal"], "fibrations": ["all", "pi9"]}
        with self.assertRaisesRegex(ConfigurationException, expected_regex="cannot be combined"):
            self._verified(config_dict)

    def test_tolerances(self):
        config_dict = deepcopy(configurations["check_pi9"])
        config_dict["tolerances"]["not_an_identity"] = 1.0
        with self.assertRaisesRegex(ConfigurationException, expected_regex="Unknown tolerance ids"):
            self._verified(config_dict)

        config_dict = deepcopy(configurations["check_pi9"])
        config_dict["tolerances"]["pi9_conformance"] = 0
        with self.assertRaises(ConfigurationException, msg="Non-positive tolerance does not throw an error!"):
            self._verified(config_dict)

        config_dict = deepcopy(configurations["check_pi9"])
        config_dict["tolerances"] = [1e-10]
        with self.assertRaises(ConfigurationException, msg="Tolerance list does not throw an error!"):
            self._verified(config_dict)

    def test_unknown_option(self):
        config_dict = {**configurations["minimal"], "num_epochs": 3}
        with self.assertRaisesRegex(ConfigurationException, expected_regex="Unknown configuration options"):
            self._verified(config_dict)

    def test_wrong_output_format(self):
        config_dict = {**configurations["catalog"], "output_format": "html"}
        with self.assertRaises(ConfigurationException, msg="Unknown output format does not throw an error!"):
            self._verified(config_dict)

    def test_config_file(self):
        config_path = Path(self._tmp_dir.name) / "config.yml"
        config_path.write_text("command: check_pi9\nsamples: 5\noutput_dir: reports\n")
        verified_config = Configurator.from_config_path(config_path).get_verified_config()
        self.assertEqual(verified_config["samples"], 5)
        self.assertEqual(Path(verified_config["output_dir"]), (Path(self._tmp_dir.name) / "reports").absolute())

        config_path.write_text("- command\n- verify\n")
        with self.assertRaises(ConfigurationException, msg="Config file without mapping does not throw an error!"):
            Configurator.from_config_path(config_path)

        with self.assertRaises(ConfigurationException, msg="Missing config file does not throw an error!"):
            Configurator.from_config_path(Path(self._tmp_dir.name) / "missing.yml")

    def test_example_config_file(self):
        configurator = Configurator.from_config_path(Path(__file__).parent / "test_config.yml")
        verified_config = configurator.verify_config()
        self.assertEqual(verified_config["fibrations"], ["pi9", "pi_C", "pi_AB"])
        self.assertEqual(verified_config["tolerances"], {"oneill_b": 0.001})
        self.assertFalse(verified_config["expensive"])

    def test_option_dicts_by_command(self):
        catalog_options = {option["name"] for option in Configurator.get_option_dicts_by_command(Command.catalog)}
        self.assertEqual(catalog_options, {"output_dir", "output_format"})
        verify_options = {option["name"] for option in Configurator.get_option_dicts_by_command(Command.verify)}
        self.assertTrue({"fibrations", "samples", "seed", "pi9_conformance"} <= verify_options)
