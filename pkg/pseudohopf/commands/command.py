from __future__ import annotations

from enum import Enum
from typing import List


class Command(Enum):
    verify = 1
    catalog = 2
    check_pi9 = 3

    @staticmethod
    def all() -> List[Command]:
        return [Command.verify, Command.catalog, Command.check_pi9]

    @staticmethod
    def sampling_commands() -> List[Command]:
        """Commands that draw seeded samples and compare residuals against tolerances."""
        return [Command.verify, Command.check_pi9]

    @staticmethod
    def from_string(string: str) -> Command:
        aliases = {"check-pi9": Command.check_pi9}
        return aliases.get(string) or {command.name: command for command in Command.all()}[string]

    def __str__(self):
        return self.name
