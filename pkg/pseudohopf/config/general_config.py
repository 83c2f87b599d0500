from pathlib import Path
from typing import List, Tuple

from .config_option import ConfigOption, ConfigConstraints, ConfigKey

from ..commands import Command
from ..utilities.constants import DEFAULT_SEED


def general_config(command: Command) -> Tuple[ConfigKey, List[ConfigOption]]:
    general_category = "general"
    return ConfigKey.ROOT, [
        ConfigOption(name="seed",
                     description="Specify a seed value for all sampling streams to ensure reproducibility. "
                                 "The seed in use is logged when it is not given explicitly.",
                     category=general_category,
                     required=False,
                     default=DEFAULT_SEED,
                     constraints=ConfigConstraints(
                         type=int,
                         allowed_commands=Command.sampling_commands(),
                     ),
                     ),
        ConfigOption(name="output_dir",
                     description="Define the directory where reports and the run summary will be stored.",
                     category=general_category,
                     required=False,
                     default="output",
                     constraints=ConfigConstraints(
                         type=(str, Path),
                     ),
                     ),
        ConfigOption(name="output_format",
                     description="Serialization of the written reports.",
                     category=general_category,
                     required=False,
                     default="json",
                     constraints=ConfigConstraints(
                         type=str,
                         allowed_values=["json", "markdown"],
                     ),
                     ),
    ]
