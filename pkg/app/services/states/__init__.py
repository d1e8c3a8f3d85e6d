"""
app/services/states/__init__.py

States, probabilities, observables and Borel-set queries.
"""

from __future__ import annotations

from .borel import at_most, closed_interval, complement_set, open_interval, point, real_line, union
from .density import (
    atom_probabilities,
    is_measure_on,
    is_pure,
    maximally_mixed,
    mix,
    prob,
    pure_state,
    state_from_density,
)
from .observables import cumulative_projection, expectation, observable, spectral_measure, uncertainty

__all__ = [
    "state_from_density",
    "pure_state",
    "mix",
    "maximally_mixed",
    "is_pure",
    "prob",
    "atom_probabilities",
    "is_measure_on",
    "observable",
    "spectral_measure",
    "cumulative_projection",
    "expectation",
    "uncertainty",
    "real_line",
    "at_most",
    "point",
    "open_interval",
    "closed_interval",
    "union",
    "complement_set",
]
