"""
app/services/shared/runtime_config.py

Configuration lookup for code that may run with or without a Flask app.

PURPOSE
-------
Services are pure functions and are routinely called from plain Python (tests,
notebooks, other libraries). When an application context is active the
application's config wins, so `create_app(test_config)` and `.env` overrides
apply. Outside an application context the class defaults of `config.Config`
are used.
"""

from __future__ import annotations

from typing import Any

from flask import current_app, has_app_context

from config import Config


def setting(name: str, default: Any = None) -> Any:
    """
    Return one configuration value.

    PARAMETERS
    ----------
    name:
        Config key, e.g. 'TOLERANCE'.
    default:
        Value returned when neither the app config nor `Config` defines it.

    EXAMPLES
    --------
    setting("TOLERANCE")        -> 1e-09
    setting("KS_NODE_BUDGET")   -> 2000000
    """
    if has_app_context():
        if name in current_app.config:
            return current_app.config[name]
    return getattr(Config, name, default)
