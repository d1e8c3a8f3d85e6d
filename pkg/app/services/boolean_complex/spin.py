"""
app/services/boolean_complex/spin.py

Spin-1 helpers for triple experiments.

For a unit direction n, S_n = n_x S_x + n_y S_y + n_z S_z has eigenvalues
1, 0, −1, so S_n² is a rank-2 projection and I − S_n² is the rank-1 projection
onto the S_n = 0 eigenvector. That rank-1 projection is the "atom" a direction
contributes to its triple algebras; n and −n give the same atom.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import Projection
from ...seed.defaults import SPIN_ONE_X, SPIN_ONE_Y, SPIN_ONE_Z


def spin1_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return (np.array(SPIN_ONE_X), np.array(SPIN_ONE_Y), np.array(SPIN_ONE_Z))


def spin1_component(direction: Any) -> np.ndarray:
    """
    S_n for a (not necessarily normalized) real 3-vector n.
    """
    n = np.asarray(direction, dtype=np.float64).reshape(3)
    sx, sy, sz = spin1_operators()
    return n[0] * sx + n[1] * sy + n[2] * sz


def spin1_square(direction: Any) -> Projection:
    """
    S_n² for a unit direction n, symmetrized to remove rounding asymmetry.
    """
    s = spin1_component(direction)
    square = s @ s
    return Projection((square + square.conj().T) / 2)


def spin1_atom(direction: Any) -> Projection:
    """
    I − S_n², the projection onto the S_n = 0 eigenvector.
    """
    return spin1_square(direction).complement()


def direction_of_atom(atom: Projection) -> np.ndarray:
    """
    Recover ±n from the rank-1 projection I − S_n².

    Uses the basis-independent identity
        n_k n_l = δ_kl − Re tr(P (S_k S_l + S_l S_k)) / 2
    and returns the sign-canonical unit vector (first nonzero entry positive).
    """
    ops = spin1_operators()
    gram = np.empty((3, 3))
    for k in range(3):
        for l in range(3):
            anti = ops[k] @ ops[l] + ops[l] @ ops[k]
            gram[k, l] = (1.0 if k == l else 0.0) - np.trace(atom.matrix @ anti).real / 2
    values, vectors = np.linalg.eigh(gram)
    n = vectors[:, -1] * np.sqrt(max(values[-1], 0.0))
    return canonical_sign(n / np.linalg.norm(n))


def canonical_sign(n: np.ndarray, eps: float = 1e-9) -> np.ndarray:
    for value in n:
        if abs(value) > eps:
            return n if value > 0 else -n
    return n
