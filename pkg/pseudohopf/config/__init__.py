from .configurator import Configurator
from .config_exception import ConfigurationException
from .config_option import ConfigOption, ConfigConstraints, ConfigKey

__all__ = [
    "Configurator",
    "ConfigurationException",
    "ConfigOption",
    "ConfigConstraints",
    "ConfigKey",
]
