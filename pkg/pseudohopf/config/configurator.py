import os

from pathlib import Path
from itertools import chain
from ruamel.yaml import YAML, YAMLError
from typing import Union, List, Dict, Any, Tuple

from .config_option import ConfigOption, ConfigKey
from .general_config import general_config
from .tolerance_config import tolerance_config
from .verification_config import verification_config
from .config_exception import ConfigurationException
from .config_validation import validate_config_rules, validate_config_options

from ..commands import Command
from ..fibrations import FibrationId
from ..utilities import Tolerances


class Configurator:
    """
    Class to read, validate, and transform a run configuration.

    The configuration is a flat dictionary (from a YAML file or from command line flags) with an optional
    `tolerances` sub-configuration. Options are scoped by command: giving an option that does not apply to the
    selected command is an error.
    """

    def __init__(self, config_dict: Dict, config_file_path: Path = None):
        """
        Args:
            config_dict (Dict): The configuration dictionary.
            config_file_path (Path, optional): Directory of the configuration file, used to resolve output_dir.
        """
        if not config_file_path:
            config_file_path = Path("")
        self._config_file_path = config_file_path
        self._config_dict = dict(config_dict) if config_dict else {}
        self.command = self._get_command_from_config_dict(self._config_dict)

    @property
    def uses_default_seed(self) -> bool:
        return self.command in Command.sampling_commands() and "seed" not in self._config_dict

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]):
        return cls(config_dict=config_dict)

    @classmethod
    def from_config_path(cls, config_path: Union[str, Path]):
        """
        Create a Configurator instance by reading a YAML configuration file.
        """
        return cls(
            config_dict=cls._read_config_file(config_path),
            config_file_path=Path(os.path.dirname(os.path.abspath(config_path))),
        )

    @staticmethod
    def get_option_dicts_by_command(command: Command) -> List[Dict[str, Any]]:
        """
        Returns all configuration options that apply to the given command as dictionaries.
        """
        options = Configurator._get_relevant_config_options(command)
        return [option.to_dict()
                for config_options in options.values()
                for option in config_options.values()
                if not option.constraints or command in option.constraints.allowed_commands]

    @staticmethod
    def _read_config_file(config_path: Union[str, Path]) -> dict:
        """
        Read configuration from a YAML file.

        Raises:
            ConfigurationException: If the file cannot be read or parsed.
        """
        try:
            with open(config_path, "r") as fp:
                config = YAML(typ="safe").load(fp)
        except YAMLError as e:
            raise ConfigurationException(
                f"Could not parse configuration file at '{config_path}' as YAML. "
                "Formatting mistake in config file? "
                "See error above for details."
            ) from e
        except OSError as e:
            raise ConfigurationException(f"Could not read configuration file at '{config_path}': {e}") from e
        if not isinstance(config, dict):
            raise ConfigurationException(f"Configuration file at '{config_path}' does not contain a mapping")
        return config

    @staticmethod
    def _get_command_from_config_dict(config_dict: Dict[str, Any]) -> Command:
        command = config_dict.get("command")
        if command is None:
            raise ConfigurationException("No command specified in config!")
        if isinstance(command, Command):
            return command
        try:
            return Command.from_string(str(command))
        except KeyError:
            raise ConfigurationException(f"Invalid command specified: {command}")

    @staticmethod
    def _get_relevant_config_options(command: Command) -> Dict[ConfigKey, Dict[str, ConfigOption]]:
        main_config = {config_option.name: config_option for config_option in chain(
            general_config(command)[1],
            verification_config(command)[1],
        )}
        sub_configs = {config_key: {config_option.name: config_option for config_option in config_options}
                       for config_key, config_options in [tolerance_config(command)]}
        return {ConfigKey.ROOT: main_config, **sub_configs}

    def verify_config(self) -> Dict[str, Any]:
        """
        Validates every option against its constraints and fills in defaults.

        Raises:
            ConfigurationException: If any validation rule is violated or if required options are missing.
        """
        options = self._get_relevant_config_options(self.command)
        validate_config_rules(command=self.command, known_options=options, config_dict=self._config_dict)

        verified_config = validate_config_options(command=self.command,
                                                  config_options=options[ConfigKey.ROOT],
                                                  config_dict=self._config_dict,
                                                  config_key=ConfigKey.ROOT)
        for config_key in ConfigKey.all_subconfig_keys():
            if config_key.value not in self._config_dict:
                continue
            if self.command not in Command.sampling_commands():
                raise ConfigurationException(f"Option {config_key.value} not valid for command {self.command}")
            verified_config[config_key.value] = validate_config_options(command=self.command,
                                                                        config_options=options[config_key],
                                                                        config_dict=self._config_dict[
                                                                            config_key.value],
                                                                        config_key=config_key)
        return verified_config

    def postprocess_config(self, verified_config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Resolves fibration ids, builds the tolerance record and creates the output directory.
        """
        postprocessed_config = dict(verified_config)
        if "output_dir" not in verified_config:
            raise ConfigurationException("Verified config is missing output_dir option!")
        output_dir = Path(verified_config["output_dir"])
        if not output_dir.is_absolute():
            output_dir = (self._config_file_path / output_dir).absolute()
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigurationException(f"Output directory {output_dir} cannot be created: {e}") from e
        if not os.access(output_dir, os.W_OK):
            raise ConfigurationException(f"Output directory {output_dir} is not writable")
        postprocessed_config["output_dir"] = str(output_dir)

        if "fibrations" in verified_config:
            postprocessed_config["fibrations"] = self._resolve_fibrations(verified_config["fibrations"])

        if self.command in Command.sampling_commands():
            try:
                postprocessed_config[ConfigKey.TOLERANCES.value] = Tolerances(
                    verified_config.get(ConfigKey.TOLERANCES.value, {}))
            except (KeyError, ValueError) as e:
                raise ConfigurationException(f"Invalid tolerance override: {e}") from e

        postprocessed_config["command"] = self.command
        return postprocessed_config

    @staticmethod
    def _resolve_fibrations(value: Union[str, List[str]]) -> List[FibrationId]:
        """Catalog order, duplicates removed."""
        values = [value] if isinstance(value, str) else list(value)
        if "all" in values:
            return FibrationId.all()
        selected = {FibrationId.from_string(item) for item in values}
        return [fibration_id for fibration_id in FibrationId.all() if fibration_id in selected]

    def get_verified_config(self) -> Dict[str, Any]:
        """
        Convenience function to perform validation and postprocessing at once.

        Returns:
            Dict[str, Any]: Option names to their (transformed) values; `command` is a Command, `fibrations` a
            list of FibrationId and `tolerances` a Tolerances record.
        """
        verified_config = self.verify_config()
        return self.postprocess_config(verified_config)
