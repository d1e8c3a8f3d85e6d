"""
app/models/helpers.py

Shared array helpers for model value types.

PURPOSE
-------
Model dataclasses hold numpy arrays. These helpers normalize inputs to
complex128 (or float64) and freeze them, so a value object cannot be mutated
through an array reference after construction.
"""

from __future__ import annotations

from typing import Any

import numpy as np


def frozen_matrix(value: Any) -> np.ndarray:
    """
    Return a read-only complex128 2-D copy of `value`.
    """
    array = np.array(value, dtype=np.complex128)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    array.setflags(write=False)
    return array


def frozen_vector(value: Any) -> np.ndarray:
    """
    Return a read-only complex128 1-D copy of `value`.
    """
    array = np.array(value, dtype=np.complex128).reshape(-1)
    array.setflags(write=False)
    return array


def frozen_real(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.float64).reshape(-1)
    array.setflags(write=False)
    return array
