from __future__ import annotations

from enum import Enum
from dataclasses import dataclass, field
from typing import Optional, Type, Any, List, Tuple, Callable, Union

from ..commands import Command


@dataclass
class ConfigOption:
    name: str
    required: bool
    description: str
    category: str
    default: Optional[Any] = None
    constraints: Optional[ConfigConstraints] = None

    def to_dict(self):
        return {
            "name": self.name,
            "required": self.required,
            "description": self.description,
            "category": self.category,
            "default": self.default,
            "constraints": self.constraints.to_dict() if self.constraints else {},
        }


@dataclass
class ConfigConstraints:
    type: Optional[Union[Type, Tuple[Type, ...]]] = None
    allowed_values: Optional[List[Any]] = None
    allowed_commands: Optional[List[Command]] = field(default_factory=lambda: Command.all())
    custom_validator: Optional[Callable[[Any], Tuple[bool, str]]] = None  # Function that returns validation and error
    lt: Optional[float] = None
    lte: Optional[float] = None
    gt: Optional[float] = None
    gte: Optional[float] = None

    def type_name(self) -> Optional[str]:
        if self.type is None:
            return None
        types = self.type if isinstance(self.type, tuple) else (self.type,)
        return " | ".join(option_type.__name__ for option_type in types)

    def to_dict(self):
        return {
            "type": self.type_name(),
            "allowed_values": self.allowed_values,
            "allowed_commands": [command.name for command in self.allowed_commands],
            "lt": self.lt,
            "lte": self.lte,
            "gt": self.gt,
            "gte": self.gte,
        }


class ConfigKey(Enum):
    ROOT = ""
    TOLERANCES = "tolerances"

    @staticmethod
    def all_subconfig_keys() -> List[ConfigKey]:
        return [ConfigKey.TOLERANCES]
