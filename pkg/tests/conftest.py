"""
Shared fixtures: a configured app, its CLI runner and a seeded generator.
"""

from __future__ import annotations

import numpy as np
import pytest

from app import create_app
from app.models import Tolerance

TEST_SEED = 20240601


@pytest.fixture()
def app():
    app = create_app({"TESTING": True, "SEED": TEST_SEED, "LOG_LEVEL": "ERROR"})
    with app.app_context():
        yield app


@pytest.fixture()
def runner(app):
    return app.test_cli_runner()


@pytest.fixture()
def rng():
    return np.random.default_rng(TEST_SEED)


@pytest.fixture()
def tol():
    return Tolerance(1e-9)
