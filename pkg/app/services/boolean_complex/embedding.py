"""
app/services/boolean_complex/embedding.py

σ-complexes glued from Boolean algebras and the search for a single global
truth-value homomorphism.

PURPOSE
-------
- sigma_complex_from_instance   one triple algebra per KS triple
- instance_from_complex         induced KS instance of a triple-algebra complex
- complex_skeleton              atoms as vertices, algebras as facets
- embeds_in_single_algebra      global {0,1}-homomorphism search

SEARCH MODEL
------------
A {0,1}-homomorphism on a finite Boolean algebra is fixed by the one atom it
maps to 1; an element is true iff that atom lies below it. Elements of
different algebras are identified by matrix equality, which gives every
nontrivial element a global id. The search picks one true atom per algebra
such that every global element receives one truth value:

- variable ordering: fewest remaining consistent atoms first (MRV)
- forward checking: a branch dies as soon as some open algebra has no
  consistent atom left
- every candidate tried counts as one node; the node budget bounds the search
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ...models import (
    BooleanAlgebra,
    ComplexSkeleton,
    EmbeddingResult,
    KSInstance,
    Projection,
    SigmaComplex,
    Tolerance,
    default_tolerance,
)
from ...reports.instrumentation import timed_event
from ..shared.errors import BadShapeError, DimMismatchError, SearchBudgetExceededError
from ..shared.guards import inf_norm
from ..shared.runtime_config import setting
from .algebra import triple_algebra
from .kochen_specker import validate_instance
from .spin import direction_of_atom


class _ElementRegistry:
    """
    Assigns global ids to projections, identifying equal matrices within eps.
    Candidates are bucketed by rank and compared by infinity norm.
    """

    def __init__(self, eps: float) -> None:
        self.eps = eps
        self.buckets: dict[int, list[tuple[int, np.ndarray]]] = {}
        self.count = 0

    def identify(self, projection: Projection) -> int:
        bucket = self.buckets.setdefault(projection.rank, [])
        for element_id, matrix in bucket:
            if inf_norm(matrix - projection.matrix) <= self.eps:
                return element_id
        element_id = self.count
        bucket.append((element_id, projection.matrix))
        self.count += 1
        return element_id


def sigma_complex_from_instance(
    instance: KSInstance,
    tol: Tolerance | float | None = None,
) -> SigmaComplex:
    """
    The σ-complex of the triple experiments of a KS instance.
    """
    validate_instance(instance, tol)
    algebras = []
    for i, j, k in instance.triples:
        algebra = triple_algebra(instance.directions[i], instance.directions[j], instance.directions[k], tol)
        algebras.append(BooleanAlgebra(atoms=algebra.atoms, dim=3, label=f"B[{i},{j},{k}]"))
    return SigmaComplex(algebras=tuple(algebras), dim=3)


def instance_from_complex(
    q: SigmaComplex,
    tol: Tolerance | float | None = None,
) -> KSInstance:
    """
    Induced KS instance of a complex of spin-1 triple algebras.

    Each algebra must have three rank-1 atoms in dimension 3; each atom is
    mapped back to its direction ±n and equal atoms share one direction index.
    """
    eps = default_tolerance(tol).eps
    if q.dim != 3:
        raise BadShapeError("Induced KS instances need dimension 3", dim=q.dim)

    registry = _ElementRegistry(eps)
    directions: dict[int, np.ndarray] = {}
    triples = []
    for position, algebra in enumerate(q.algebras):
        if algebra.atom_count != 3 or any(atom.rank != 1 for atom in algebra.atoms):
            raise BadShapeError(f"Algebra {position} is not a triple-experiment algebra", algebra=position)
        ids = []
        for atom in algebra.atoms:
            element_id = registry.identify(atom)
            directions.setdefault(element_id, direction_of_atom(atom))
            ids.append(element_id)
        triples.append(tuple(ids))

    ordered = np.array([directions[index] for index in range(registry.count)])
    return KSInstance(directions=ordered, triples=tuple(triples), name="induced")


def complex_skeleton(q: SigmaComplex, tol: Tolerance | float | None = None) -> ComplexSkeleton:
    """
    Atoms-as-vertices report of a σ-complex.
    """
    eps = default_tolerance(tol).eps
    registry = _ElementRegistry(eps)
    facets = tuple(tuple(registry.identify(atom) for atom in algebra.atoms) for algebra in q.algebras)
    usage: dict[int, int] = {}
    for facet in facets:
        for vertex in facet:
            usage[vertex] = usage.get(vertex, 0) + 1
    shared = tuple(sorted(vertex for vertex, uses in usage.items() if uses > 1))
    return ComplexSkeleton(vertices=registry.count, facets=facets, shared_vertices=shared)


def _truth_tables(
    algebras: Sequence[BooleanAlgebra],
    registry: _ElementRegistry,
) -> list[list[dict[int, bool]]]:
    """
    For each algebra and each atom choice, the truth values it forces on the
    algebra's nontrivial elements (keyed by global element id).
    """
    tables = []
    for algebra in algebras:
        ids = [(mask, registry.identify(algebra.element(mask))) for mask in range(1, algebra.full_mask)]
        tables.append(
            [{element_id: bool(mask >> atom & 1) for mask, element_id in ids} for atom in range(algebra.atom_count)]
        )
    return tables


def embeds_in_single_algebra(
    q: SigmaComplex,
    tol: Tolerance | float | None = None,
    node_budget: int | None = None,
) -> EmbeddingResult:
    """
    Search for one {0,1}-homomorphism consistent on every algebra of q.

    RETURNS
    -------
    EmbeddingResult
        embeds=True with the chosen true atom per algebra, or embeds=False.

    RAISES
    ------
    SearchBudgetExceededError
        When more than `node_budget` candidates are tried.
    DimMismatchError
        When an algebra's dimension differs from the complex's.

    EXAMPLES
    --------
    single algebra                      -> True
    40 triple algebras (bundled set)    -> False
    """
    eps = default_tolerance(tol).eps
    budget = int(node_budget if node_budget is not None else setting("KS_NODE_BUDGET", 2_000_000))
    for algebra in q.algebras:
        if algebra.dim != q.dim:
            raise DimMismatchError("Algebra dimension differs from the complex", algebra=algebra.dim, complex=q.dim)

    registry = _ElementRegistry(eps)
    tables = _truth_tables(q.algebras, registry)
    assignment: dict[int, bool] = {}
    chosen: list[int | None] = [None] * len(tables)
    nodes = 0

    def consistent(option: dict[int, bool]) -> bool:
        return all(assignment.get(element_id, value) == value for element_id, value in option.items())

    def search() -> bool:
        nonlocal nodes
        best = None
        best_options: list[int] = []
        for position, options in enumerate(tables):
            if chosen[position] is not None:
                continue
            viable = [atom for atom, option in enumerate(options) if consistent(option)]
            if not viable:
                return False
            if best is None or len(viable) < len(best_options):
                best, best_options = position, viable
        if best is None:
            return True

        for atom in best_options:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceededError(
                    f"Embedding search exceeded its node budget of {budget}",
                    budget=budget,
                )
            added = [element_id for element_id in tables[best][atom] if element_id not in assignment]
            assignment.update({element_id: tables[best][atom][element_id] for element_id in added})
            chosen[best] = atom
            if search():
                return True
            chosen[best] = None
            for element_id in added:
                del assignment[element_id]
        return False

    with timed_event("EMBEDDING_SEARCH_FINISHED", algebras=len(q.algebras), elements=registry.count) as extra:
        found = search()
        extra["embeds"] = found
        extra["nodes"] = nodes

    if not found:
        return EmbeddingResult(embeds=False, true_atoms=None, nodes_explored=nodes)
    return EmbeddingResult(embeds=True, true_atoms=tuple(int(atom) for atom in chosen), nodes_explored=nodes)
