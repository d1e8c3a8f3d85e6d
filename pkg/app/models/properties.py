"""
app/models/properties.py

Property structures: Boolean algebras of commuting projections, σ-complexes
glued from them, and Kochen-Specker instances.

REPRESENTATION
--------------
A finite Boolean algebra of commuting projections is fully determined by its
atoms (pairwise orthogonal, summing to I). Every element is the join, i.e. the
sum, of a subset of atoms, so an element is addressed by an integer bitmask
over the atom tuple:

    mask 0            -> 0
    mask 2**m - 1     -> I
    mask with bit i   -> atom i is below the element

`BooleanAlgebra.elements` materializes all 2**m elements lazily and in mask
order; most services work on masks and never materialize.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal, Mapping

import numpy as np

from .operators import Projection


@dataclass(frozen=True, eq=False)
class BooleanAlgebra:
    """
    Finite Boolean algebra of pairwise-commuting projections on one dimension.

    FIELDS
    ------
    atoms:
        Minimal nonzero elements, pairwise orthogonal, summing to I.
    dim:
        Ambient Hilbert-space dimension.
    label:
        Optional display name (e.g. 'B_xyz').
    """

    atoms: tuple[Projection, ...]
    dim: int
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(self.atoms))

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        return 2 ** len(self.atoms)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def element(self, mask: int) -> Projection:
        """
        Return the element whose atoms are the set bits of `mask`.
        """
        total = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for index, atom in enumerate(self.atoms):
            if mask >> index & 1:
                total += atom.matrix
        return Projection(total)

    @cached_property
    def elements(self) -> tuple[Projection, ...]:
        return tuple(self.element(mask) for mask in range(self.size))

    @property
    def zero(self) -> Projection:
        return Projection.zero(self.dim)

    @property
    def identity(self) -> Projection:
        return Projection.identity(self.dim)


@dataclass(frozen=True, eq=False)
class SigmaComplex:
    """
    Finite σ-complex: a union of Boolean algebras over a common dimension.

    Shared elements are not stored explicitly; they are identified by matrix
    equality within the working tolerance when the complex is searched.
    """

    algebras: tuple[BooleanAlgebra, ...]
    dim: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "algebras", tuple(self.algebras))


@dataclass(frozen=True, eq=False)
class KSInstance:
    """
    Kochen-Specker instance: unit directions in 3-space plus orthogonal triples.

    FIELDS
    ------
    directions:
        (m, 3) float array of unit vectors.
    triples:
        Index triples into `directions`; each triple is pairwise orthogonal.
    name:
        Optional identifier of the bundled set.
    """

    directions: np.ndarray
    triples: tuple[tuple[int, int, int], ...]
    name: str = ""

    def __post_init__(self) -> None:
        directions = np.array(self.directions, dtype=np.float64).reshape(-1, 3)
        directions.setflags(write=False)
        object.__setattr__(self, "directions", directions)
        object.__setattr__(
            self,
            "triples",
            tuple(tuple(int(i) for i in triple) for triple in self.triples),
        )

    @property
    def direction_count(self) -> int:
        return int(self.directions.shape[0])


@dataclass(frozen=True)
class ColorabilityResult:
    """
    Outcome of the {0,1}-coloring decision for a KS instance.

    `witness` maps direction index -> value (0 marks the direction with
    S²-value 0 in its triple) and is present only when SAT.
    """

    status: Literal["SAT", "UNSAT"]
    witness: Mapping[int, int] | None
    nodes_explored: int

    @property
    def satisfiable(self) -> bool:
        return self.status == "SAT"


@dataclass(frozen=True)
class EmbeddingResult:
    """
    Outcome of the search for a global {0,1}-homomorphism on a σ-complex.

    FIELDS
    ------
    embeds:
        True when one truth assignment is consistent on every algebra.
    true_atoms:
        For each algebra, the index of the atom mapped to 1 (witness).
    nodes_explored:
        Search nodes visited.
    """

    embeds: bool
    true_atoms: tuple[int, ...] | None
    nodes_explored: int

    def __bool__(self) -> bool:
        return self.embeds


@dataclass(frozen=True)
class ComplexSkeleton:
    """
    Atoms-as-vertices view of a σ-complex.

    vertices:
        Number of distinct atoms (identified by matrix equality).
    facets:
        For each algebra, the vertex ids of its atoms.
    shared_vertices:
        Vertex ids that belong to more than one algebra.
    """

    vertices: int
    facets: tuple[tuple[int, ...], ...]
    shared_vertices: tuple[int, ...] = field(default_factory=tuple)
