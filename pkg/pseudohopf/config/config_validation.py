from typing import Dict, Any

from .config_option import ConfigOption, ConfigKey
from .config_exception import ConfigurationException

from ..commands import Command


def _is_instance(value: Any, option_type) -> bool:
    types = option_type if isinstance(option_type, tuple) else (option_type,)
    if isinstance(value, bool) and bool not in types:
        return False
    return isinstance(value, types)


def validate_config_options(command: Command,
                            config_options: Dict[str, ConfigOption],
                            config_dict: Dict[str, Any],
                            config_key: ConfigKey = ConfigKey.ROOT
                            ) -> Dict[str, Any]:
    """
    Validate the configuration dictionary against defined options
    """
    validated_config = {}
    for _, option in config_options.items():
        full_option_name = f"{config_key.value}:{option.name}" if config_key != ConfigKey.ROOT else option.name
        constraints = option.constraints
        given = option.name in config_dict

        # Command scoping: given options must apply, absent ones are skipped
        if constraints and constraints.allowed_commands and command not in constraints.allowed_commands:
            if given:
                raise ConfigurationException(f"Option {full_option_name} not valid for command {command}")
            continue

        # Check if required option is present
        if not given:
            if option.required:
                raise ConfigurationException(f"Required option {full_option_name} is missing")
            if option.default is None or option.default == "":
                continue

        # Set value to default if not present in config dict and not required and not None
        value = config_dict.get(option.name, option.default)
        if value is None or str(value) == "":
            continue

        if constraints:
            # Type checking
            if constraints.type and given and not _is_instance(value, constraints.type):
                raise ConfigurationException(f"{full_option_name} must be of type {constraints.type_name()}")

            # Allowed values
            if constraints.allowed_values and value not in constraints.allowed_values:
                raise ConfigurationException(f"{full_option_name} must be one of {constraints.allowed_values}")

            # Numeric constraints
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                if constraints.lt is not None and value >= constraints.lt:
                    raise ConfigurationException(f"{full_option_name} must be less than {constraints.lt}")
                if constraints.lte is not None and value > constraints.lte:
                    raise ConfigurationException(
                        f"{full_option_name} must be less than or equal to {constraints.lte}")
                if constraints.gt is not None and value <= constraints.gt:
                    raise ConfigurationException(f"{full_option_name} must be greater than {constraints.gt}")
                if constraints.gte is not None and value < constraints.gte:
                    raise ConfigurationException(
                        f"{full_option_name} must be greater than or equal to {constraints.gte}")
            # Custom constraints
            if constraints.custom_validator:
                validation, error = constraints.custom_validator(value)
                if not validation:
                    raise ConfigurationException(
                        f"Validation for {full_option_name} failed for given value {value}, "
                        f"reason: {error}")

        validated_config[option.name] = value
    return validated_config


def validate_config_rules(command: Command,
                          known_options: Dict[ConfigKey, Dict[str, ConfigOption]],
                          config_dict: Dict[str, Any]) -> bool:
    # Unknown options
    root_names = set(known_options[ConfigKey.ROOT].keys()) | {"command"}
    sub_names = {config_key.value for config_key in ConfigKey.all_subconfig_keys()}
    unknown = [key for key in config_dict if key not in root_names and key not in sub_names]
    if unknown:
        raise ConfigurationException(f"Unknown configuration options: {unknown}")

    for config_key in ConfigKey.all_subconfig_keys():
        if config_key.value not in config_dict:
            continue
        sub_config = config_dict[config_key.value]
        if not isinstance(sub_config, dict):
            raise ConfigurationException(f"{config_key.value} must be a mapping of identity id to value")
        unknown_ids = [key for key in sub_config if key not in known_options.get(config_key, {})]
        if unknown_ids:
            raise ConfigurationException(f"Unknown tolerance ids: {unknown_ids}")

    # Mutual exclusive
    fibrations = config_dict.get("fibrations")
    if isinstance(fibrations, list) and "all" in fibrations and len(fibrations) > 1:
        raise ConfigurationException("fibrations: 'all' cannot be combined with explicit fibration ids")

    return True
