from typing import List, Tuple

from .config_option import ConfigOption, ConfigConstraints, ConfigKey

from ..commands import Command
from ..utilities.constants import DEFAULT_TOLERANCES, IDENTITY_ANCHORS


def tolerance_config(command: Command) -> Tuple[ConfigKey, List[ConfigOption]]:
    tolerance_category = "tolerances"
    return ConfigKey.TOLERANCES, [
        ConfigOption(name=identity_id,
                     description=f"Tolerance of the identity {IDENTITY_ANCHORS[identity_id]}",
                     category=tolerance_category,
                     required=False,
                     constraints=ConfigConstraints(
                         type=(int, float),
                         allowed_commands=Command.sampling_commands(),
                         gt=0,
                     ),
                     )
        for identity_id in DEFAULT_TOLERANCES
    ]
