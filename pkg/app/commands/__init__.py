"""
app/commands/__init__.py

Click commands registered on `app.cli` by `bootstrap.register_cli_commands`.
"""

from __future__ import annotations

from .engine import ENGINE_COMMANDS
from .logic import logic_group
from .reck import reck_group
from .scenario import scenario_group

COMMANDS = [*ENGINE_COMMANDS, reck_group, logic_group, scenario_group]

__all__ = ["COMMANDS"]
