import os
import json
import logging

from pathlib import Path
from ruamel.yaml import YAML
from typing import Union, Dict, Any, List

from .logging import get_logger
from .data_classes import VerificationReport

from ..commands import Command
from ..config import Configurator
from ..classify import catalog_to_json, catalog_to_markdown
from ..validations import VerificationRunner, run_check_pi9

_EXTENSIONS = {"json": "json", "markdown": "md"}


def _setup_logging(output_dir: str):
    # Disable logging during test execution because of problems in Windows
    if "PYTEST_CURRENT_TEST" in os.environ:
        return

    logging.captureWarnings(True)
    pseudohopf_logger = logging.getLogger('pseudohopf')
    pseudohopf_logger.propagate = False  # Prevent propagation to root logger

    # Set up handlers
    file_handler = logging.FileHandler(output_dir + "/logger_out.log")
    stream_handler = logging.StreamHandler()

    formatter = logging.Formatter("%(asctime)s %(levelname)s %(message)s")
    file_handler.setFormatter(formatter)
    stream_handler.setFormatter(formatter)

    pseudohopf_logger.setLevel(logging.INFO)
    file_handler.setLevel(logging.INFO)
    stream_handler.setLevel(logging.INFO)

    pseudohopf_logger.addHandler(file_handler)
    pseudohopf_logger.addHandler(stream_handler)


def _clear_logging():
    pseudohopf_logger = logging.getLogger('pseudohopf')

    for handler in list(pseudohopf_logger.handlers):
        pseudohopf_logger.removeHandler(handler)
        handler.close()


def _write_output_file(out_filename: str, output: dict) -> None:
    """
    Save the run summary in a YAML file.
    """
    yaml = YAML()
    yaml.default_flow_style = False
    with open(out_filename, "w") as f:
        yaml.dump(output, f)


def report_file_name(subject: str, output_format: str) -> str:
    """pi_C(m=2,t=1) -> pi_C_m2_t1.json"""
    stem = subject.replace("(", "_").replace(")", "").replace(",", "_").replace("=", "")
    return f"{stem}.{_EXTENSIONS[output_format]}"


def render_report(report: VerificationReport, output_format: str) -> str:
    if output_format == "markdown":
        return report.to_markdown()
    return json.dumps(report.to_dict(), indent=2) + "\n"


def write_reports(reports: List[VerificationReport], output_dir: Path, output_format: str) -> List[str]:
    file_names = []
    for report in reports:
        file_name = report_file_name(report.subject, output_format)
        (output_dir / file_name).write_text(render_report(report, output_format))
        file_names.append(file_name)
    return file_names


def _echo_config(config: Dict[str, Any]) -> Dict[str, Any]:
    echoed = {}
    for key, value in config.items():
        if key == "command":
            echoed[key] = value.name
        elif key == "fibrations":
            echoed[key] = [fibration_id.name for fibration_id in value]
        elif key == "tolerances":
            echoed[key] = value.overridden()
        else:
            echoed[key] = value
    return echoed


def parse_config_and_execute_run(config: Union[str, Path, Dict[str, Any]]) -> Dict[str, Any]:
    # Verify config via configurator
    configurator = None
    if isinstance(config, (str, Path)):
        configurator = Configurator.from_config_path(str(config))
    elif isinstance(config, dict):
        configurator = Configurator.from_config_dict(config)

    assert configurator is not None, f"Config could not be read, incorrect type: {type(config)}"

    config = configurator.get_verified_config()
    command: Command = config["command"]

    # Output dir exists after postprocessing; setup logging
    output_dir = Path(config["output_dir"])
    _setup_logging(str(output_dir))
    logger = get_logger(__name__)
    output_format = config.get("output_format", "json")
    if configurator.uses_default_seed:
        logger.info(f"No seed given, using default seed {config['seed']}")

    try:
        if command == Command.verify:
            reports = VerificationRunner(**config).run()
        elif command == Command.check_pi9:
            reports = [run_check_pi9(config)]
        else:
            reports = []
            rendered = catalog_to_markdown() if output_format == "markdown" else catalog_to_json() + "\n"
            (output_dir / f"catalog.{_EXTENSIONS[output_format]}").write_text(rendered)
            logger.info(f"Catalog written to {output_dir}")

        files = write_reports(reports, output_dir, output_format)
        output_result = {
            "config": _echo_config(config),
            "reports": {report.subject: report.passed for report in reports},
            "files": files,
            "default_seed": configurator.uses_default_seed,
            "passed": all(report.passed for report in reports),
        }
        # Save output_variables in out.yml
        _write_output_file(str(output_dir / "out.yml"), output_result)
        logger.info(f"Run finished: {'all identities passed' if output_result['passed'] else 'FAILURES'}")
    finally:
        _clear_logging()

    return output_result
