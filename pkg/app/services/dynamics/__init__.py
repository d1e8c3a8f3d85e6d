"""
app/services/dynamics/__init__.py

Symmetries, time evolution and the n-replica classical limit.
"""

from __future__ import annotations

from .classical_limit import (
    averaged_observable,
    averaged_operator,
    classical_limit_report,
    decay_exponent,
)
from .evolution import (
    evolution_spec,
    evolution_unitary,
    evolve_pure,
    evolve_state,
    liouville_residual,
    richardson_ratio,
    schroedinger_residual,
    trajectory,
)
from .symmetry import (
    antiunitary_symmetry,
    apply_symmetry,
    compose_symmetries,
    identity_symmetry,
    inverse_symmetry,
    push_state,
    transform_operator,
    unitary_symmetry,
)

__all__ = [
    "unitary_symmetry",
    "antiunitary_symmetry",
    "identity_symmetry",
    "compose_symmetries",
    "inverse_symmetry",
    "transform_operator",
    "apply_symmetry",
    "push_state",
    "evolution_spec",
    "evolution_unitary",
    "evolve_state",
    "evolve_pure",
    "trajectory",
    "liouville_residual",
    "schroedinger_residual",
    "richardson_ratio",
    "averaged_operator",
    "averaged_observable",
    "classical_limit_report",
    "decay_exponent",
]
