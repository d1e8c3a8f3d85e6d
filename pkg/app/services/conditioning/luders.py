"""
app/services/conditioning/luders.py

Lüders conditionalization p(· | y) and its properties.

PUBLIC API
----------
- luders(p, y, tol)                                  ywy / tr(ywy)
- conditional_probability(p, x, y, tol)              tr(ywyx) / tr(wy)
- symmetry_of_conditional(p, s, x, y, tol)           p(σ⁻¹x | σ⁻¹y)
- luders_reconstruction_identity(p, y, phi, tol)     both sides of the
                                                     rank-1 reconstruction

IMPORTANT
---------
"p(y) > 0" means p(y) > eps. Conditioning on a numerically null event raises
ZeroProbabilityConditionError.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import Projection, State, SymmetryOp, Tolerance, default_tolerance
from ..dynamics.symmetry import apply_symmetry, inverse_symmetry, push_state
from ..shared.errors import DimMismatchError, SymmetryMismatchError, ZeroProbabilityConditionError
from ..shared.guards import inf_norm, require_unit_vector


def _require_dims(p: State, *projections: Projection) -> None:
    for projection in projections:
        if projection.dim != p.dim:
            raise DimMismatchError(
                f"State has dimension {p.dim}, projection has {projection.dim}",
                state=p.dim,
                projection=projection.dim,
            )


def _normalizer(p: State, y: Projection, eps: float) -> float:
    mass = float(np.trace(p.density @ y.matrix).real)
    if mass <= eps:
        raise ZeroProbabilityConditionError(
            f"Cannot condition on an event of probability {mass:.3e}",
            probability=mass,
            eps=eps,
        )
    return mass


def luders(p: State, y: Projection, tol: Tolerance | float | None = None) -> State:
    """
    The conditional state p(· | y).

    When ywy already equals w within eps (y = I, or y covers the support of
    w) p itself is returned, so conditioning twice on y is exactly idempotent.

    RAISES
    ------
    ZeroProbabilityConditionError
        When p(y) ≤ eps.

    EXAMPLES
    --------
    y = I                                -> p
    singlet, y = P_z⁺ ⊗ I                -> pure state φ⁺_z ⊗ ψ⁻_z
    """
    eps = default_tolerance(tol).eps
    _require_dims(p, y)
    _normalizer(p, y, eps)
    reduced = y.matrix @ p.density @ y.matrix
    if inf_norm(reduced - p.density) <= eps:
        return p
    reduced = (reduced + reduced.conj().T) / 2
    return State(reduced / float(np.trace(reduced).real))


def conditional_probability(
    p: State,
    x: Projection,
    y: Projection,
    tol: Tolerance | float | None = None,
) -> float:
    eps = default_tolerance(tol).eps
    _require_dims(p, x, y)
    mass = _normalizer(p, y, eps)
    return float(np.trace(y.matrix @ p.density @ y.matrix @ x.matrix).real) / mass


def symmetry_of_conditional(
    p: State,
    s: SymmetryOp,
    x: Projection,
    y: Projection,
    tol: Tolerance | float | None = None,
) -> float:
    """
    p(σ⁻¹x | σ⁻¹y), checked against p_σ(x | y) computed in the transported
    state.

    RAISES
    ------
    ZeroProbabilityConditionError
        When p(σ⁻¹y) ≤ eps.
    SymmetryMismatchError
        When the two evaluation orders differ by more than 10·eps.
    """
    scale = default_tolerance(tol)
    inverse = inverse_symmetry(s)
    pulled = conditional_probability(p, apply_symmetry(inverse, x), apply_symmetry(inverse, y), scale)
    pushed = conditional_probability(push_state(s, p), x, y, scale)
    if abs(pulled - pushed) > scale.scaled(10).eps:
        raise SymmetryMismatchError(
            "Transported conditional probabilities disagree",
            pulled_back=pulled,
            pushed_forward=pushed,
        )
    return pulled


def luders_reconstruction_identity(
    p: State,
    y: Projection,
    phi: Any,
    tol: Tolerance | float | None = None,
) -> tuple[float, float]:
    """
    Both sides of p(P_φ | y) = ‖yφ‖²·p(P_φ')/p(y) with φ' = yφ/‖yφ‖.

    Left side:  tr(yw y P_φ)/tr(wy), computed in the Lüders state.
    Right side: ‖yφ‖²·⟨φ', wφ'⟩/p(y), the value every state with the
                conditional ratio property must assign.

    RAISES
    ------
    NotUnitVectorError
    ZeroProbabilityConditionError
        When p(y) ≤ eps or yφ vanishes.
    """
    eps = default_tolerance(tol).eps
    vector = require_unit_vector(phi, eps)
    _require_dims(p, y)
    mass = _normalizer(p, y, eps)

    image = y.matrix @ vector
    length = float(np.linalg.norm(image))
    if length <= eps:
        raise ZeroProbabilityConditionError("yφ vanishes; no rank-1 property below y", norm=length)
    direction = image / length

    left = float(np.trace(luders(p, y, eps).density @ Projection.onto(vector).matrix).real)
    right = length**2 * float(np.vdot(direction, p.density @ direction).real) / mass
    return left, right
