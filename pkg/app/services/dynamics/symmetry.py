"""
app/services/dynamics/symmetry.py

Automorphisms of the projection lattice induced by unitary and antiunitary
operators.

ACTION
------
unitary u:        x ↦ u x u†
antiunitary u∘K:  x ↦ u conj(x) u†     (K = complex conjugation)

Composition and inversion follow from K u K = conj(u):
- (u∘K)⁻¹ = uᵀ∘K
- s∘t has linear part u_s·u_t (s unitary) or u_s·conj(u_t) (s antiunitary),
  and is antiunitary iff exactly one factor is.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import Projection, State, SymmetryKind, SymmetryOp, Tolerance, default_tolerance
from ..shared.errors import DimMismatchError
from ..shared.guards import require_unitary


def unitary_symmetry(u: Any, tol: Tolerance | float | None = None) -> SymmetryOp:
    return SymmetryOp(SymmetryKind.UNITARY, require_unitary(u, default_tolerance(tol).eps))


def antiunitary_symmetry(u: Any, tol: Tolerance | float | None = None) -> SymmetryOp:
    """
    The antiunitary operator u∘K given its linear part u.

    RAISES
    ------
    NotUnitaryError
    """
    return SymmetryOp(SymmetryKind.ANTIUNITARY, require_unitary(u, default_tolerance(tol).eps))


def identity_symmetry(dim: int) -> SymmetryOp:
    return SymmetryOp(SymmetryKind.UNITARY, np.eye(dim, dtype=np.complex128))


def _require_dims(s: SymmetryOp, dim: int) -> None:
    if s.dim != dim:
        raise DimMismatchError(f"Symmetry acts on dimension {s.dim}, operand has {dim}", symmetry=s.dim, operand=dim)


def compose_symmetries(s: SymmetryOp, t: SymmetryOp) -> SymmetryOp:
    """
    s∘t (apply t first).
    """
    _require_dims(s, t.dim)
    s_anti = s.kind is SymmetryKind.ANTIUNITARY
    t_anti = t.kind is SymmetryKind.ANTIUNITARY
    matrix = s.matrix @ (t.matrix.conj() if s_anti else t.matrix)
    kind = SymmetryKind.ANTIUNITARY if s_anti != t_anti else SymmetryKind.UNITARY
    return SymmetryOp(kind, matrix)


def inverse_symmetry(s: SymmetryOp) -> SymmetryOp:
    if s.kind is SymmetryKind.ANTIUNITARY:
        return SymmetryOp(SymmetryKind.ANTIUNITARY, s.matrix.T)
    return SymmetryOp(SymmetryKind.UNITARY, s.matrix.conj().T)


def transform_operator(s: SymmetryOp, a: np.ndarray) -> np.ndarray:
    _require_dims(s, a.shape[0])
    source = a.conj() if s.kind is SymmetryKind.ANTIUNITARY else a
    return s.matrix @ source @ s.matrix.conj().T


def apply_symmetry(s: SymmetryOp, x: Projection) -> Projection:
    """
    σ(x) for a projection x.

    EXAMPLES
    --------
    identity symmetry                         -> x
    antiunitary with u = I on a real x        -> x
    """
    image = transform_operator(s, x.matrix)
    return Projection((image + image.conj().T) / 2)


def push_state(s: SymmetryOp, p: State) -> State:
    """
    The transported state p_σ with p_σ(σ(x)) = p(x).
    """
    image = transform_operator(s, p.density)
    return State((image + image.conj().T) / 2)
