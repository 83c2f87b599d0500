import sys
import argparse

from pathlib import Path
from typing import Union, Dict, Any, List, Optional

from .executer import parse_config_and_execute_run

from ..config import Configurator, ConfigurationException
from ..validations import VerificationException

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_CONFIGURATION_ERROR = 2


def headless_main(config: Union[str, Path, Dict[str, Any]]) -> Dict[str, Any]:
    """
    Entry point for usage in scripts

    @param config: Configuration file path or config dict
    """
    return parse_config_and_execute_run(config)


def _parse_tolerances(values: Optional[List[str]]) -> Dict[str, float]:
    tolerances = {}
    for value in values or []:
        identity_id, separator, number = value.partition("=")
        if not separator:
            raise ConfigurationException(f"--tol expects <identity>=<value>, got '{value}'")
        try:
            tolerances[identity_id.strip()] = float(number)
        except ValueError:
            raise ConfigurationException(f"Tolerance for {identity_id} is not a number: '{number}'")
    return tolerances


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudohopf",
                                     description="Verifies the classified pseudo-Riemannian submersions between "
                                                 "pseudo-hyperbolic spaces and renders their catalog.")
    subparsers = parser.add_subparsers(dest="command")

    verify = subparsers.add_parser("verify", help="Run the identity suites for the selected fibrations.")
    verify.add_argument("--config", type=str, help="YAML file with options; flags given here take precedence.")
    verify.add_argument("--fibration", dest="fibrations", nargs="+", metavar="ID",
                        help="Fibration ids (e.g. pi9 pi_C) or 'all'.")
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--tol", action="append", metavar="ID=VALUE", help="Tolerance override, repeatable.")
    verify.add_argument("--expensive", action="store_true", default=None)
    verify.add_argument("--format", dest="output_format", choices=["json", "markdown"])
    verify.add_argument("--out", dest="output_dir", type=str)
    verify.add_argument("--m", dest="quotient_dimension", type=int)
    verify.add_argument("--mode", dest="identity_check_mode", choices=["warn", "error"])

    catalog = subparsers.add_parser("catalog", help="Render the classification catalog.")
    catalog.add_argument("--format", dest="output_format", choices=["json", "markdown"])
    catalog.add_argument("--out", dest="output_dir", type=str)

    for name, aliases in (("check_pi9", ["check-pi9"]),):
        check = subparsers.add_parser(name, aliases=aliases,
                                      help="Compare the split-octonion evaluator with the pi9 polynomial.")
        check.add_argument("--samples", type=int)
        check.add_argument("--seed", type=int)
        check.add_argument("--out", dest="output_dir", type=str)
    return parser


def arguments_to_config(arguments: argparse.Namespace) -> Dict[str, Any]:
    """Config dictionary from parsed flags; a --config file is the base that flags override."""
    config: Dict[str, Any] = {}
    config_path = getattr(arguments, "config", None)
    if config_path:
        config.update(Configurator._read_config_file(config_path))
    config["command"] = arguments.command
    for key, value in vars(arguments).items():
        if key in ("command", "config", "tol") or value is None:
            continue
        config[key] = value
    tolerances = _parse_tolerances(getattr(arguments, "tol", None))
    if tolerances:
        config["tolerances"] = {**config.get("tolerances", {}), **tolerances}
    return config


def main(args=None) -> int:
    """
    Pipeline commandline entry point. Exit status 0 when every identity passes, 1 on failed identities and 2 on
    configuration or output errors.
    """
    parser = build_parser()
    arguments = parser.parse_args(args)
    if not arguments.command:
        parser.print_help()
        return EXIT_CONFIGURATION_ERROR

    try:
        result = parse_config_and_execute_run(arguments_to_config(arguments))
    except ConfigurationException as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIGURATION_ERROR
    except OSError as e:
        print(f"Output error: {e}", file=sys.stderr)
        return EXIT_CONFIGURATION_ERROR
    except VerificationException as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_PASSED if result["passed"] else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
