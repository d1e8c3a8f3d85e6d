"""
app/__init__.py

Flask application factory entrypoint for the qsigma engine.

PURPOSE
-------
This module is intentionally small.

It is responsible only for:
- creating the Flask application instance
- loading configuration (plus an optional test overlay)
- delegating wiring (logging, CLI command groups) to bootstrap helpers

The engine itself is a set of pure functions under `app.services`; the Flask
application exists to carry configuration, the logger and the CLI.

PUBLIC API
----------
- create_app(test_config=None)
"""

from __future__ import annotations

from typing import Any, Mapping

from flask import Flask

from .bootstrap import configure_app


def create_app(test_config: Mapping[str, Any] | None = None) -> Flask:
    """
    Application factory.

    PARAMETERS
    ----------
    test_config:
        Optional mapping applied on top of `config.Config`. Tests use it to
        pin tolerances, seeds and caps.

    RETURNS
    -------
    Flask
        Fully configured Flask application instance.

    BOOTSTRAP FLOW
    --------------
    1. Create app
    2. Load config, then the overlay
    3. Delegate full wiring to bootstrap helpers
    """
    app = Flask(__name__)
    app.config.from_object("config.Config")
    if test_config:
        app.config.from_mapping(test_config)
    configure_app(app)
    return app
