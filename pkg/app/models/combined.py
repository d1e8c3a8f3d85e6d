"""
app/models/combined.py

Value types for combined systems: Schmidt forms and lattice formulas over
product projections.

LATTICE FORMULAS
----------------
A LatticeFormula is a tree:
- LatticeLeaf   the product projection P_{φ⊗ψ}
- LatticeMeet   meet (product) of pairwise commuting children
- LatticeJoin   join (P + Q − PQ) of pairwise commuting children

Interior nodes may have more than two children; commutation is required
pairwise between the children's evaluated projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .helpers import frozen_matrix, frozen_real, frozen_vector


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """
    Γ = Σ cᵢ φᵢ ⊗ ψᵢ with real positive descending cᵢ.

    `left_basis` is d1 × r and `right_basis` is d2 × r; column i holds φᵢ and
    ψᵢ respectively.
    """

    coefficients: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", frozen_real(self.coefficients))
        object.__setattr__(self, "left_basis", frozen_matrix(self.left_basis))
        object.__setattr__(self, "right_basis", frozen_matrix(self.right_basis))

    @property
    def rank(self) -> int:
        return int(self.coefficients.shape[0])

    def left(self, index: int) -> np.ndarray:
        return np.asarray(self.left_basis[:, index])

    def right(self, index: int) -> np.ndarray:
        return np.asarray(self.right_basis[:, index])

    def vector(self) -> np.ndarray:
        d1 = self.left_basis.shape[0]
        d2 = self.right_basis.shape[0]
        total = np.zeros(d1 * d2, dtype=np.complex128)
        for index, c in enumerate(self.coefficients):
            total += c * np.kron(self.left(index), self.right(index))
        return total


@dataclass(frozen=True, eq=False)
class LatticeLeaf:
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", frozen_vector(self.left))
        object.__setattr__(self, "right", frozen_vector(self.right))


@dataclass(frozen=True, eq=False)
class LatticeMeet:
    children: tuple["LatticeFormula", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True, eq=False)
class LatticeJoin:
    children: tuple["LatticeFormula", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))


LatticeFormula = Union[LatticeLeaf, LatticeMeet, LatticeJoin]
