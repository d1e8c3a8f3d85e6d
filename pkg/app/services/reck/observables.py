"""
app/services/reck/observables.py

Measuring an observable with a mesh and detectors.

The mesh realizes V† where the columns of V are eigenvectors of A (ascending
eigenvalue), so output port i carries the amplitude ⟨vᵢ, ψ⟩. Ports of one
eigenspace are grouped; the summed detection probability of a group is the
probability of that eigenvalue.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import ObservableRealization, Tolerance, default_tolerance
from ..shared.guards import require_hermitian
from .compiler import decompose, simulate


def realize_observable(a: Any, tol: Tolerance | float | None = None) -> ObservableRealization:
    """
    Mesh plus port grouping measuring a Hermitian operator.

    Eigenvalues within eps of their neighbour share a group, as in
    `hermitian_eigendecompose`.

    RAISES
    ------
    NotHermitianError

    EXAMPLES
    --------
    s_x (spin-1/2)        -> one stage, groups (−½: port 0), (½: port 1)
    S_x² − S_y² (spin-1)  -> three singleton groups for −1, 0, 1
    """
    eps = default_tolerance(tol).eps
    matrix = require_hermitian(a, eps)
    values, vectors = np.linalg.eigh((matrix + matrix.conj().T) / 2)

    clusters: list[list[int]] = []
    for index, value in enumerate(values):
        if clusters and value - values[clusters[-1][-1]] <= eps:
            clusters[-1].append(index)
        else:
            clusters.append([index])

    mesh = decompose(vectors.conj().T, tol)
    groups = tuple((float(np.mean(values[members])), tuple(members)) for members in clusters)
    return ObservableRealization(mesh=mesh, port_groups=groups)


def port_probabilities(
    realization: ObservableRealization,
    state: Any,
    tol: Tolerance | float | None = None,
) -> list[tuple[float, float]]:
    """
    (eigenvalue, probability) per port group for an input state.
    """
    probabilities = simulate(realization.mesh, state, tol)
    return [(value, float(sum(probabilities[port] for port in ports))) for value, ports in realization.port_groups]
