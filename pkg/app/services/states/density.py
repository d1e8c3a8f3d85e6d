"""
app/services/states/density.py

States as density operators and their probability assignments.

PURPOSE
-------
A state p assigns p(x) = tr(wx) to every property x. This module builds
validated states and evaluates them on projections and Boolean algebras.

PUBLIC API
----------
- state_from_density(w, tol)
- pure_state(psi, tol)
- mix(states, weights, tol)
- maximally_mixed(dim)
- is_pure(p, tol)
- prob(p, x, tol)
- atom_probabilities(p, b)
- is_measure_on(p, b, tol)

IMPORTANT
---------
`is_measure_on` never raises on a bad density: it is the executable check that
a state restricts to a probability measure on a Boolean algebra, so a
deliberately broken "state" must produce False rather than an exception.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ...models import BooleanAlgebra, Projection, State, Tolerance, default_tolerance
from ..shared.errors import BadWeightsError, DimMismatchError, NotDensityError
from ..shared.guards import require_hermitian, require_unit_vector

# Above this many atoms only the atoms are checked, not every element.
_FULL_ADDITIVITY_ATOMS = 10


def _require_same_dim(p: State, dim: int) -> None:
    if p.dim != dim:
        raise DimMismatchError(f"State has dimension {p.dim}, operand has {dim}", state=p.dim, operand=dim)


def state_from_density(w: object, tol: Tolerance | float | None = None) -> State:
    """
    Validate a density operator and wrap it as a State.

    RAISES
    ------
    NotSquareError, NotHermitianError
    NotDensityError
        When the trace differs from 1 or the smallest eigenvalue is below −eps.

    EXAMPLES
    --------
    state_from_density(I₂ / 2)        -> maximally mixed qubit
    state_from_density(diag(2, −1))   -> NotDensityError (negative eigenvalue)
    """
    eps = default_tolerance(tol).eps
    matrix = require_hermitian(w, eps)
    matrix = (matrix + matrix.conj().T) / 2

    trace = float(np.trace(matrix).real)
    if abs(trace - 1.0) > eps:
        raise NotDensityError(f"Density trace is {trace!r}, expected 1", trace=trace, eps=eps)

    floor = float(np.linalg.eigvalsh(matrix)[0])
    if floor < -eps:
        raise NotDensityError(
            f"Density has a negative eigenvalue {floor:.3e}",
            min_eigenvalue=floor,
            eps=eps,
        )
    return State(matrix)


def pure_state(psi: object, tol: Tolerance | float | None = None) -> State:
    """
    The pure state P_ψ of a unit vector.

    RAISES
    ------
    NotUnitVectorError
    """
    vector = require_unit_vector(psi, default_tolerance(tol).eps)
    return State(np.outer(vector, vector.conj()))


def maximally_mixed(dim: int) -> State:
    return State(np.eye(dim, dtype=np.complex128) / dim)


def mix(
    states: Sequence[State],
    weights: Sequence[float],
    tol: Tolerance | float | None = None,
) -> State:
    """
    Convex combination Σ cᵢ wᵢ.

    RAISES
    ------
    BadWeightsError
        Empty input, length mismatch, negative weights, or weights not
        summing to 1 within eps.
    DimMismatchError
        States of different dimensions.
    """
    eps = default_tolerance(tol).eps
    if not states or len(states) != len(weights):
        raise BadWeightsError(
            "mix needs one weight per state and at least one state",
            states=len(states),
            weights=len(weights),
        )
    coefficients = np.asarray(weights, dtype=np.float64)
    if not np.all(np.isfinite(coefficients)) or np.any(coefficients < 0):
        raise BadWeightsError("Mixture weights must be finite and nonnegative", weights=coefficients.tolist())
    total = float(coefficients.sum())
    if abs(total - 1.0) > eps:
        raise BadWeightsError(f"Mixture weights sum to {total!r}, expected 1", total=total)

    dim = states[0].dim
    for state in states[1:]:
        _require_same_dim(state, dim)
    density = sum(c * state.density for c, state in zip(coefficients, states))
    return State(density)


def is_pure(p: State, tol: Tolerance | float | None = None) -> bool:
    eps = default_tolerance(tol).eps
    purity = float(np.trace(p.density @ p.density).real)
    return abs(purity - 1.0) <= eps


def prob(p: State, x: Projection, tol: Tolerance | float | None = None) -> float:
    """
    p(x) = tr(wx).

    Values within eps outside [0, 1] are clamped to the boundary; values
    further out (only possible for unvalidated states) are returned as is.

    EXAMPLES
    --------
    prob(pure_state(φ⁺_z), P_z⁺)   -> 1.0
    prob(pure_state(φ⁺_z), P_x⁺)   -> 0.5
    """
    eps = default_tolerance(tol).eps
    _require_same_dim(p, x.dim)
    value = float(np.trace(p.density @ x.matrix).real)
    if -eps <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + eps:
        return 1.0
    return value


def atom_probabilities(p: State, b: BooleanAlgebra) -> np.ndarray:
    """
    Unclamped probabilities tr(w aᵢ) of the atoms of b, in atom order.
    """
    _require_same_dim(p, b.dim)
    return np.array([float(np.trace(p.density @ atom.matrix).real) for atom in b.atoms])


def is_measure_on(p: State, b: BooleanAlgebra, tol: Tolerance | float | None = None) -> bool:
    """
    Check that p restricted to b is a probability measure.

    The checks are: p(I) = 1, every atom has probability in [−eps, 1 + eps],
    and (for algebras with at most 2^10 elements) p of every element equals
    the sum over its atoms. Imaginary parts of tr(w aᵢ) above eps fail too.
    """
    eps = default_tolerance(tol).eps
    _require_same_dim(p, b.dim)

    raw = np.array([complex(np.trace(p.density @ atom.matrix)) for atom in b.atoms])
    if np.any(np.abs(raw.imag) > eps):
        return False
    masses = raw.real
    if np.any(masses < -eps) or np.any(masses > 1.0 + eps):
        return False
    if abs(float(np.trace(p.density).real) - 1.0) > eps or abs(float(masses.sum()) - 1.0) > eps:
        return False

    if b.atom_count <= _FULL_ADDITIVITY_ATOMS:
        for mask in range(b.full_mask + 1):
            direct = float(np.trace(p.density @ b.element(mask).matrix).real)
            summed = sum(masses[i] for i in range(b.atom_count) if mask >> i & 1)
            if abs(direct - summed) > eps * max(1, b.atom_count):
                return False
    return True
