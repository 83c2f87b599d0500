from typing import Any, List, Tuple

from .config_option import ConfigOption, ConfigConstraints, ConfigKey

from ..commands import Command
from ..fibrations import FibrationId
from ..utilities.constants import DEFAULT_SAMPLES, DEFAULT_QUOTIENT_DIMENSION


def _validate_fibrations(value: Any) -> Tuple[bool, str]:
    values = [value] if isinstance(value, str) else value
    if len(values) == 0:
        return False, "at least one fibration id or 'all' is required"
    known = [fibration_id.name for fibration_id in FibrationId.all()]
    unknown = [item for item in values if item != "all" and item not in known]
    if unknown:
        return False, f"unknown fibration ids {unknown} (known: {known})"
    return True, ""


def verification_config(command: Command) -> Tuple[ConfigKey, List[ConfigOption]]:
    verification_category = "verification"
    return ConfigKey.ROOT, [
        ConfigOption(name="fibrations",
                     description="Fibration ids to verify, in any order, or 'all'. "
                                 "Reports are always emitted in catalog order.",
                     category=verification_category,
                     required=False,
                     default="all",
                     constraints=ConfigConstraints(
                         type=(str, list),
                         allowed_commands=[Command.verify],
                         custom_validator=_validate_fibrations,
                     ),
                     ),
        ConfigOption(name="samples",
                     description="Number of sampled frames per identity.",
                     category=verification_category,
                     required=False,
                     default=DEFAULT_SAMPLES,
                     constraints=ConfigConstraints(
                         type=int,
                         allowed_commands=Command.sampling_commands(),
                         gte=1,
                     ),
                     ),
        ConfigOption(name="quotient_dimension",
                     description="Quaternionic or complex dimension m of the quotient and composite bases.",
                     category=verification_category,
                     required=False,
                     default=DEFAULT_QUOTIENT_DIMENSION,
                     constraints=ConfigConstraints(
                         type=int,
                         allowed_commands=[Command.verify],
                         gte=1,
                     ),
                     ),
        ConfigOption(name="expensive",
                     description="Enable the nested-derivative O'Neill equations for the second derivative of A.",
                     category=verification_category,
                     required=False,
                     default=False,
                     constraints=ConfigConstraints(
                         type=bool,
                         allowed_commands=[Command.verify],
                     ),
                     ),
        ConfigOption(name="identity_check_mode",
                     description="Log failed identities as warnings, or stop the run at the first failure.",
                     category=verification_category,
                     required=False,
                     default="warn",
                     constraints=ConfigConstraints(
                         type=str,
                         allowed_values=["warn", "error"],
                         allowed_commands=Command.sampling_commands(),
                     ),
                     ),
        ConfigOption(name="holonomy_samples",
                     description="Number of fibre points transported around each closed lifted loop.",
                     category=verification_category,
                     required=False,
                     default=3,
                     constraints=ConfigConstraints(
                         type=int,
                         allowed_commands=[Command.verify],
                         gte=1,
                     ),
                     ),
    ]
