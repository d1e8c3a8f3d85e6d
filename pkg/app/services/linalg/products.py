"""
app/services/linalg/products.py

Products and small constructors on dense complex matrices.

PUBLIC API
----------
- identity(n)
- outer(psi, phi)
- tensor(a, b)
- kron_all(ops)
- commutator(a, b)
- svd(a)
- partial_trace(rho, d1, d2, keep)
"""

from __future__ import annotations

from functools import reduce
from typing import Any, Iterable, Literal, NamedTuple

import numpy as np

from ..shared.errors import BadShapeError
from ..shared.guards import as_matrix, require_same_dim, require_square


class SVDResult(NamedTuple):
    u: np.ndarray
    singulars: np.ndarray
    v: np.ndarray

    def reconstruct(self) -> np.ndarray:
        rows = self.u.shape[0]
        cols = self.v.shape[0]
        sigma = np.zeros((rows, cols), dtype=np.complex128)
        count = len(self.singulars)
        sigma[:count, :count] = np.diag(self.singulars)
        return self.u @ sigma @ self.v.conj().T


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def outer(psi: Any, phi: Any | None = None) -> np.ndarray:
    """
    |psi⟩⟨phi| (defaults to |psi⟩⟨psi|).
    """
    left = np.asarray(psi, dtype=np.complex128).reshape(-1)
    right = left if phi is None else np.asarray(phi, dtype=np.complex128).reshape(-1)
    return np.outer(left, right.conj())


def tensor(a: Any, b: Any) -> np.ndarray:
    """
    Kronecker product a ⊗ b.

    EXAMPLES
    --------
    tensor(I₂, I₂)                     -> I₄
    tensor(diag(1,0), diag(0,1))       -> diag(0,1,0,0)
    """
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(ops: Iterable[Any]) -> np.ndarray:
    matrices = [as_matrix(op) for op in ops]
    if not matrices:
        raise BadShapeError("kron_all needs at least one operand")
    return reduce(np.kron, matrices)


def commutator(a: Any, b: Any) -> np.ndarray:
    """
    Return ab − ba.

    RAISES
    ------
    NotSquareError, DimMismatchError
    """
    left = require_square(a)
    right = require_square(b)
    require_same_dim(left, right)
    return left @ right - right @ left


def svd(a: Any) -> SVDResult:
    """
    Full singular value decomposition a = u · diag(singulars) · v†.

    u and v are unitary (full matrices); singulars are descending.
    """
    array = as_matrix(a)
    u, singulars, vh = np.linalg.svd(array, full_matrices=True)
    return SVDResult(u=u, singulars=singulars, v=vh.conj().T)


def partial_trace(rho: Any, d1: int, d2: int, keep: Literal["left", "right"] = "left") -> np.ndarray:
    """
    Reduced operator of a d1·d2-dimensional operator.

    keep='left' traces out the right factor and returns a d1 × d1 matrix.
    """
    array = require_square(rho)
    if array.shape[0] != d1 * d2:
        raise BadShapeError(
            f"Operator of size {array.shape[0]} does not factor as {d1}x{d2}",
            size=array.shape[0],
            d1=d1,
            d2=d2,
        )
    blocks = array.reshape(d1, d2, d1, d2)
    if keep == "left":
        return np.einsum("ijkj->ik", blocks)
    if keep == "right":
        return np.einsum("ijil->jl", blocks)
    raise ValueError(f"keep must be 'left' or 'right', got {keep!r}")
