"""
app/bootstrap/__init__.py

Application bootstrap helpers for the qsigma engine.

PURPOSE
-------
This package contains the wiring logic that prepares a Flask application after
the Flask app object is created and configuration is loaded.

PUBLIC API
----------
- configure_logging(app)
- register_cli_commands(app)
- configure_app(app)

IMPORTANT
---------
Nothing here performs numeric work. Command modules are imported lazily inside
`register_cli_commands` so that importing `app` stays cheap for library use.
"""

from __future__ import annotations

import logging

from flask import Flask


def configure_logging(app: Flask) -> None:
    """
    Apply the configured log level to the application logger.

    Services that run outside an application context log through
    `logging.getLogger("app")`, which is the same logger object Flask exposes
    as `app.logger` for this package, so one level setting covers both.
    """
    level_name = str(app.config.get("LOG_LEVEL", "INFO")).upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        level = logging.INFO
    app.logger.setLevel(level)


def register_cli_commands(app: Flask) -> None:
    """
    Register every click command group on `app.cli`.

    After registration the commands are reachable both through
    `flask --app run.py <command>` and through `run.cli_main`.
    """
    from ..commands import COMMANDS

    for command in COMMANDS:
        app.cli.add_command(command)


def configure_app(app: Flask) -> None:
    """
    Run all application bootstrap wiring in the correct order.
    """
    configure_logging(app)
    register_cli_commands(app)


__all__ = [
    "configure_logging",
    "register_cli_commands",
    "configure_app",
]
