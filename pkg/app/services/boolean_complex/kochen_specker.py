"""
app/services/boolean_complex/kochen_specker.py

Kochen-Specker colorability.

PURPOSE
-------
Decide whether the directions of a KSInstance admit a {0,1}-assignment with
exactly one 0 in every orthogonal triple. 0 marks the direction whose S² value
is 0 (the true atom of that triple experiment), 1 the two others, matching
S_x² + S_y² + S_z² = 2.

SOLVERS
-------
- ks_colorable            backtracking with unit propagation (primary)
- brute_force_colorings   full truth-table enumeration, ≤ 15 directions (oracle)
- ks_colorable_z3         SMT cross-check with pseudo-boolean constraints

Equal or antipodal directions are one variable: they give the same atom.

INSTANCE HELPERS
----------------
- validate_instance
- direction_classes
- complete_orthogonal_pairs   rebuild an instance from a core ray set
"""

from __future__ import annotations

import itertools
from typing import Any, Sequence

import numpy as np
import z3

from ...models import ColorabilityResult, KSInstance, Tolerance, default_tolerance
from ...reports.instrumentation import timed_event
from ..shared.errors import BadShapeError, NotOrthogonalFrameError, SearchBudgetExceededError, TooManyVariablesError
from ..shared.runtime_config import setting
from .spin import canonical_sign

BRUTE_FORCE_DIRECTION_CAP = 15


def validate_instance(instance: KSInstance, tol: Tolerance | float | None = None) -> None:
    """
    Check unit directions, in-range indices and pairwise-orthogonal triples.
    """
    eps = default_tolerance(tol).eps
    directions = instance.directions
    norms = np.linalg.norm(directions, axis=1) if len(directions) else np.zeros(0)
    bad = [int(i) for i in np.flatnonzero(np.abs(norms - 1.0) > eps)]
    if bad:
        raise BadShapeError("KS directions must be unit vectors", indices=bad[:10])
    count = instance.direction_count
    for position, triple in enumerate(instance.triples):
        if len(triple) != 3 or len(set(triple)) != 3 or any(i < 0 or i >= count for i in triple):
            raise BadShapeError(f"Triple {position} is not three distinct valid indices", triple=list(triple))
        i, j, k = triple
        worst = max(
            abs(float(directions[i] @ directions[j])),
            abs(float(directions[i] @ directions[k])),
            abs(float(directions[j] @ directions[k])),
        )
        if worst > eps:
            raise NotOrthogonalFrameError(
                f"Triple {position} is not pairwise orthogonal",
                triple=list(triple),
                residual=worst,
            )


def direction_classes(instance: KSInstance, tol: Tolerance | float | None = None) -> list[int]:
    """
    Map each direction index to a class id; equal or antipodal directions
    share a class. Class ids are assigned in order of first appearance.
    """
    eps = default_tolerance(tol).eps
    classes: list[int] = []
    representatives: list[np.ndarray] = []
    for direction in instance.directions:
        for class_id, rep in enumerate(representatives):
            if abs(abs(float(direction @ rep)) - 1.0) <= eps:
                classes.append(class_id)
                break
        else:
            classes.append(len(representatives))
            representatives.append(direction)
    return classes


def _class_triples(instance: KSInstance, classes: Sequence[int]) -> list[tuple[int, int, int]]:
    return [tuple(classes[i] for i in triple) for triple in instance.triples]


def _witness(instance: KSInstance, classes: Sequence[int], values: Sequence[int]) -> dict[int, int]:
    return {index: int(values[classes[index]]) for index in range(instance.direction_count)}


class _Search:
    """
    Backtracking search over class variables.

    values[v] is −1 (free), 0 or 1. Propagation walks the triples touching a
    changed variable:
      two zeros              -> conflict
      one zero               -> the free members become 1
      no zero, all assigned  -> conflict
      no zero, one free      -> that member becomes 0
    """

    def __init__(self, variable_count: int, triples: list[tuple[int, int, int]], budget: int) -> None:
        self.values = [-1] * variable_count
        self.triples = triples
        self.budget = budget
        self.nodes = 0
        self.watch: list[list[int]] = [[] for _ in range(variable_count)]
        for index, triple in enumerate(triples):
            for variable in triple:
                self.watch[variable].append(index)
        self.order = sorted(range(variable_count), key=lambda v: (-len(self.watch[v]), v))

    def _assign(self, variable: int, value: int, trail: list[int]) -> bool:
        self.values[variable] = value
        trail.append(variable)
        queue = [variable]
        while queue:
            changed = queue.pop()
            for index in self.watch[changed]:
                members = self.triples[index]
                states = [self.values[m] for m in members]
                zeros = states.count(0)
                free = [m for m, s in zip(members, states) if s == -1]
                if zeros > 1:
                    return False
                if zeros == 1:
                    for m in free:
                        self.values[m] = 1
                        trail.append(m)
                        queue.append(m)
                elif not free:
                    return False
                elif len(free) == 1:
                    self.values[free[0]] = 0
                    trail.append(free[0])
                    queue.append(free[0])
        return True

    def _undo(self, trail: list[int]) -> None:
        for variable in trail:
            self.values[variable] = -1

    def solve(self) -> bool:
        branch = next((v for v in self.order if self.values[v] == -1 and self.watch[v]), None)
        if branch is None:
            return True
        for value in (0, 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceededError(
                    f"KS search exceeded its node budget of {self.budget}",
                    budget=self.budget,
                )
            trail: list[int] = []
            if self._assign(branch, value, trail) and self.solve():
                return True
            self._undo(trail)
        return False


def ks_colorable(
    instance: KSInstance,
    tol: Tolerance | float | None = None,
    node_budget: int | None = None,
) -> ColorabilityResult:
    """
    Decide KS colorability by exhaustive backtracking with unit propagation.

    PARAMETERS
    ----------
    instance:
        A valid KSInstance.
    tol:
        Tolerance used for validation and for identifying equal/antipodal
        directions.
    node_budget:
        Maximum number of branching decisions; defaults to KS_NODE_BUDGET.

    RETURNS
    -------
    ColorabilityResult
        SAT with a witness covering every direction index (directions in no
        triple get 1), or UNSAT.

    EXAMPLES
    --------
    single orthogonal triple    -> SAT
    empty instance              -> SAT, witness {}
    bundled 33-ray instance     -> UNSAT
    """
    validate_instance(instance, tol)
    classes = direction_classes(instance, tol)
    variable_count = max(classes) + 1 if classes else 0
    budget = int(node_budget if node_budget is not None else setting("KS_NODE_BUDGET", 2_000_000))

    search = _Search(variable_count, _class_triples(instance, classes), budget)
    with timed_event(
        "KS_SEARCH_FINISHED",
        instance=instance.name,
        directions=instance.direction_count,
        triples=len(instance.triples),
    ) as extra:
        found = search.solve()
        extra["status"] = "SAT" if found else "UNSAT"
        extra["nodes"] = search.nodes

    if not found:
        return ColorabilityResult(status="UNSAT", witness=None, nodes_explored=search.nodes)

    values = [1 if v == -1 else v for v in search.values]
    return ColorabilityResult(
        status="SAT",
        witness=_witness(instance, classes, values),
        nodes_explored=search.nodes,
    )


def brute_force_colorings(
    instance: KSInstance,
    tol: Tolerance | float | None = None,
) -> list[dict[int, int]]:
    """
    Every valid coloring, by enumerating all 2^(classes) truth tables.

    RAISES
    ------
    TooManyVariablesError
        When the instance has more than 15 directions.
    """
    if instance.direction_count > BRUTE_FORCE_DIRECTION_CAP:
        raise TooManyVariablesError(
            f"Brute force is limited to {BRUTE_FORCE_DIRECTION_CAP} directions",
            directions=instance.direction_count,
        )
    validate_instance(instance, tol)
    classes = direction_classes(instance, tol)
    variable_count = max(classes) + 1 if classes else 0
    triples = _class_triples(instance, classes)

    colorings = []
    for values in itertools.product((0, 1), repeat=variable_count):
        if all(sum(1 for v in triple if values[v] == 0) == 1 for triple in triples):
            colorings.append(_witness(instance, classes, values))
    return colorings


def brute_force_colorable(instance: KSInstance, tol: Tolerance | float | None = None) -> ColorabilityResult:
    colorings = brute_force_colorings(instance, tol)
    classes = direction_classes(instance, tol)
    explored = 2 ** (max(classes) + 1 if classes else 0)
    if not colorings:
        return ColorabilityResult(status="UNSAT", witness=None, nodes_explored=explored)
    return ColorabilityResult(status="SAT", witness=colorings[0], nodes_explored=explored)


def ks_colorable_z3(instance: KSInstance, tol: Tolerance | float | None = None) -> ColorabilityResult:
    """
    Independent SMT decision of the same question.

    Each direction class gets a Bool "is the zero of its triple"; each triple
    gets PbEq([...], 1).
    """
    validate_instance(instance, tol)
    classes = direction_classes(instance, tol)
    variable_count = max(classes) + 1 if classes else 0
    zero = [z3.Bool(f"d{v}") for v in range(variable_count)]

    solver = z3.Solver()
    for a, b, c in _class_triples(instance, classes):
        solver.add(z3.PbEq([(zero[a], 1), (zero[b], 1), (zero[c], 1)], 1))

    if solver.check() != z3.sat:
        return ColorabilityResult(status="UNSAT", witness=None, nodes_explored=0)

    model = solver.model()
    values = [0 if z3.is_true(model.evaluate(zero[v], model_completion=True)) else 1 for v in range(variable_count)]
    return ColorabilityResult(status="SAT", witness=_witness(instance, classes, values), nodes_explored=0)


def is_valid_coloring(instance: KSInstance, witness: dict[int, int]) -> bool:
    return all(sum(1 for i in triple if witness[i] == 0) == 1 for triple in instance.triples)


def complete_orthogonal_pairs(
    directions: Any,
    tol: Tolerance | float | None = None,
    name: str = "",
) -> KSInstance:
    """
    Build a KS instance from a core ray set.

    - every mutually orthogonal triad of core rays becomes a triple
    - every orthogonal pair not inside a triad is completed by the cross
      product of its two rays; the completion reuses an existing (or already
      added) direction when one matches up to sign

    Triads come first in lexicographic order, then completed pairs in
    lexicographic pair order. For the bundled 33-ray set this yields
    57 directions and 40 triples.
    """
    eps = default_tolerance(tol).eps
    core = np.asarray(directions, dtype=np.float64).reshape(-1, 3)
    core = core / np.linalg.norm(core, axis=1, keepdims=True)
    count = core.shape[0]

    orthogonal = {
        (i, j)
        for i in range(count)
        for j in range(i + 1, count)
        if abs(float(core[i] @ core[j])) <= eps
    }

    triads = [
        (i, j, k)
        for (i, j) in sorted(orthogonal)
        for k in range(j + 1, count)
        if (i, k) in orthogonal and (j, k) in orthogonal
    ]
    covered = {pair for (i, j, k) in triads for pair in ((i, j), (i, k), (j, k))}

    all_directions = [row for row in core]
    triples: list[tuple[int, int, int]] = list(triads)
    for i, j in sorted(orthogonal - covered):
        completion = canonical_sign(np.cross(core[i], core[j]))
        completion = completion / np.linalg.norm(completion)
        match = next(
            (index for index, d in enumerate(all_directions) if abs(abs(float(d @ completion)) - 1.0) <= eps),
            None,
        )
        if match is None:
            match = len(all_directions)
            all_directions.append(completion)
        triples.append((i, j, match))

    return KSInstance(directions=np.array(all_directions), triples=tuple(triples), name=name)
