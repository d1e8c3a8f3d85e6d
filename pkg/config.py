"""
Application configuration.

This module defines the numeric policy and runtime settings for the qsigma
engine: comparison tolerances, desk-scale resource caps, the seed used by
randomized verification sweeps, and logging. Every value can be overridden
through an environment variable (a `.env` file is honored by the Flask CLI),
and tests overlay their own values through `create_app(test_config)`.
"""

import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    return float(raw) if raw not in (None, "") else default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw not in (None, "") else default


class Config:
    """Base configuration shared by all environments."""

    APP_NAME = os.environ.get("APP_NAME", "qsigma")
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

    # Absolute tolerance on infinity norms (largest absolute entry)
    TOLERANCE = _env_float("QSIGMA_TOLERANCE", 1e-9)

    # Schmidt coefficients below this count as zero in rank decisions
    RANK_TOLERANCE = _env_float("QSIGMA_RANK_TOLERANCE", 1e-8)

    # Desk-scale guards
    TENSOR_DIM_CAP = _env_int("QSIGMA_TENSOR_DIM_CAP", 4096)
    ALGEBRA_ELEMENT_CAP = _env_int("QSIGMA_ALGEBRA_ELEMENT_CAP", 2**20)
    KS_NODE_BUDGET = _env_int("QSIGMA_KS_NODE_BUDGET", 2_000_000)
    TAUTOLOGY_VARIABLE_CAP = _env_int("QSIGMA_TAUTOLOGY_VARIABLE_CAP", 24)

    # Randomized property sweeps
    SEED = _env_int("QSIGMA_SEED", 20240601)

    # Finite-difference step for dynamics checks
    FD_STEP = _env_float("QSIGMA_FD_STEP", 1e-4)

    # Two-slit lattice
    TWO_SLIT_SITES = _env_int("QSIGMA_TWO_SLIT_SITES", 256)

    # Bundled reference data
    SEED_DATA_DIR = BASE_DIR / "app" / "seed" / "data"
