"""
app/services/dynamics/evolution.py

Hamiltonian time evolution and finite-difference checks of its equations of
motion.

PUBLIC API
----------
- evolution_spec(h, hbar, time_grid, tol)
- evolution_unitary(spec, t)
- evolve_state(spec, p, t)
- evolve_pure(spec, psi, t)
- trajectory(spec, p)
- liouville_residual(spec, w, t, h)
- schroedinger_residual(spec, psi, t, h)
- richardson_ratio(residual_fn, h)

FINITE DIFFERENCES
------------------
Residuals compare the central difference (f(t+h) − f(t−h))/2h with the right
side of the equation of motion and return the ∞-norm of the difference. The
central scheme is O(h²), so halving h divides the residual by about 4.
"""

from __future__ import annotations

import math
from typing import Any, Callable, Sequence

import numpy as np

from ...models import EvolutionSpec, State, Tolerance, default_tolerance
from ..linalg import matrix_exp_unitary
from ..shared.errors import DimMismatchError
from ..shared.guards import inf_norm, require_hermitian, require_unit_vector
from ..shared.runtime_config import setting


def evolution_spec(
    h: Any,
    hbar: float = 1.0,
    time_grid: Sequence[float] = (),
    tol: Tolerance | float | None = None,
) -> EvolutionSpec:
    """
    Validated EvolutionSpec.

    RAISES
    ------
    NotHermitianError
    """
    hamiltonian = require_hermitian(h, default_tolerance(tol).eps)
    return EvolutionSpec(hamiltonian=hamiltonian, hbar=hbar, time_grid=time_grid)


def evolution_unitary(spec: EvolutionSpec, t: float, tol: Tolerance | float | None = None) -> np.ndarray:
    return matrix_exp_unitary(spec.hamiltonian, t, hbar=spec.hbar, tol=tol)


def _require_dims(spec: EvolutionSpec, dim: int) -> None:
    if spec.dim != dim:
        raise DimMismatchError(
            f"Hamiltonian has dimension {spec.dim}, operand has {dim}",
            hamiltonian=spec.dim,
            operand=dim,
        )


def _evolve_density(spec: EvolutionSpec, w: np.ndarray, t: float, tol: Tolerance | float | None) -> np.ndarray:
    u = evolution_unitary(spec, t, tol)
    return u @ w @ u.conj().T


def evolve_state(spec: EvolutionSpec, p: State, t: float, tol: Tolerance | float | None = None) -> State:
    """
    w_t = u_t w u_t†.

    EXAMPLES
    --------
    H = 0 or t = 0   -> p unchanged
    """
    _require_dims(spec, p.dim)
    evolved = _evolve_density(spec, p.density, t, tol)
    return State((evolved + evolved.conj().T) / 2)


def evolve_pure(spec: EvolutionSpec, psi: Any, t: float, tol: Tolerance | float | None = None) -> np.ndarray:
    """
    u_t ψ.

    RAISES
    ------
    NotUnitVectorError, DimMismatchError
    """
    vector = require_unit_vector(psi, default_tolerance(tol).eps)
    _require_dims(spec, vector.shape[0])
    return evolution_unitary(spec, t, tol) @ vector


def trajectory(spec: EvolutionSpec, p: State, tol: Tolerance | float | None = None) -> list[State]:
    """
    evolve_state at every time of spec.time_grid, in grid order.
    """
    return [evolve_state(spec, p, float(t), tol) for t in spec.time_grid]


def liouville_residual(
    spec: EvolutionSpec,
    w: State | np.ndarray,
    t: float,
    h: float | None = None,
    tol: Tolerance | float | None = None,
) -> float:
    """
    ‖(w_{t+h} − w_{t−h})/2h + (i/ħ)[H, w_t]‖∞.
    """
    step = float(h if h is not None else setting("FD_STEP", 1e-4))
    density = w.density if isinstance(w, State) else np.asarray(w, dtype=np.complex128)
    _require_dims(spec, density.shape[0])

    forward = _evolve_density(spec, density, t + step, tol)
    backward = _evolve_density(spec, density, t - step, tol)
    current = _evolve_density(spec, density, t, tol)
    derivative = (forward - backward) / (2 * step)
    rhs = -1j / spec.hbar * (spec.hamiltonian @ current - current @ spec.hamiltonian)
    return inf_norm(derivative - rhs)


def schroedinger_residual(
    spec: EvolutionSpec,
    psi: Any,
    t: float,
    h: float | None = None,
    tol: Tolerance | float | None = None,
) -> float:
    """
    ‖(ψ(t+h) − ψ(t−h))/2h + (i/ħ) H ψ(t)‖∞.
    """
    step = float(h if h is not None else setting("FD_STEP", 1e-4))
    derivative = (evolve_pure(spec, psi, t + step, tol) - evolve_pure(spec, psi, t - step, tol)) / (2 * step)
    rhs = -1j / spec.hbar * (spec.hamiltonian @ evolve_pure(spec, psi, t, tol))
    return inf_norm(derivative - rhs)


def richardson_ratio(residual_fn: Callable[[float], float], h: float | None = None) -> float:
    """
    residual_fn(h) / residual_fn(h/2).

    About 4 for an O(h²) scheme; NaN when both residuals vanish and inf when
    only the halved one does.
    """
    step = float(h if h is not None else setting("FD_STEP", 1e-4))
    coarse = float(residual_fn(step))
    fine = float(residual_fn(step / 2))
    if fine == 0.0:
        return math.nan if coarse == 0.0 else math.inf
    return coarse / fine
