"""
app/services/qlogic/classical.py

Two-valued semantics: evaluation, truth tables, satisfiability and the
Kochen-Specker proposition builder.

PUBLIC API
----------
- classical_eval(formula, assignment)
- classical_tautology(formula)      brute force, capped by TAUTOLOGY_VARIABLE_CAP
- count_models(formula)             brute force, same cap
- classical_satisfiable(formula)    z3, no cap
- find_model(formula)               z3 model or None
- solver_tautology(formula)         z3 validity check as a TautologyResult
- exactly_one(x, y, z)
- ks_proposition(instance)

IMPORTANT
---------
Truth tables are evaluated with numpy over blocks of assignments. Assignment
number i sets variable j (sorted order) to bit j of i, so the countermodel
returned is the first failing assignment in that order.
"""

from __future__ import annotations

from functools import reduce
from typing import Mapping

import numpy as np
import z3

from ...models import And, ClassicalValuation, Formula, Iff, KSInstance, Not, Or, TautologyResult, Var, Xor
from ...reports.instrumentation import timed_event
from ..boolean_complex import direction_classes, validate_instance
from ..shared.errors import BadShapeError, TooManyVariablesError, UnboundVariableError
from ..shared.runtime_config import setting
from .syntax import variables

_BLOCK_BITS = 16


def _require_bound(formula: Formula, assignment: Mapping[str, object]) -> tuple[str, ...]:
    names = variables(formula)
    missing = [name for name in names if name not in assignment]
    if missing:
        raise UnboundVariableError(f"Unbound variables: {', '.join(missing)}", missing=missing)
    return names


def _eval_bool(formula: Formula, assignment: ClassicalValuation) -> bool:
    if isinstance(formula, Var):
        return bool(assignment[formula.name])
    if isinstance(formula, Not):
        return not _eval_bool(formula.operand, assignment)
    left = _eval_bool(formula.left, assignment)
    right = _eval_bool(formula.right, assignment)
    if isinstance(formula, And):
        return left and right
    if isinstance(formula, Or):
        return left or right
    if isinstance(formula, Xor):
        return left != right
    return left == right


def classical_eval(formula: Formula, assignment: ClassicalValuation) -> bool:
    """
    Truth value under a 0/1 assignment.

    RAISES
    ------
    UnboundVariableError
    """
    _require_bound(formula, assignment)
    return _eval_bool(formula, assignment)


def _table(formula: Formula, columns: Mapping[str, np.ndarray]) -> np.ndarray:
    if isinstance(formula, Var):
        return columns[formula.name]
    if isinstance(formula, Not):
        return ~_table(formula.operand, columns)
    left = _table(formula.left, columns)
    right = _table(formula.right, columns)
    if isinstance(formula, And):
        return left & right
    if isinstance(formula, Or):
        return left | right
    if isinstance(formula, Xor):
        return left ^ right
    return ~(left ^ right)


def _require_small(names: tuple[str, ...]) -> None:
    cap = int(setting("TAUTOLOGY_VARIABLE_CAP", 24))
    if len(names) > cap:
        raise TooManyVariablesError(
            f"Formula has {len(names)} variables, brute force is capped at {cap}",
            variables=len(names),
            cap=cap,
        )


def _blocks(names: tuple[str, ...]):
    total = 1 << len(names)
    size = min(total, 1 << _BLOCK_BITS)
    for start in range(0, total, size):
        index = np.arange(start, start + size, dtype=np.int64)
        columns = {name: ((index >> bit) & 1).astype(bool) for bit, name in enumerate(names)}
        yield start, columns


def _assignment(names: tuple[str, ...], number: int) -> dict[str, bool]:
    return {name: bool((number >> bit) & 1) for bit, name in enumerate(names)}


def classical_tautology(formula: Formula) -> TautologyResult:
    """
    Check every 0/1 assignment.

    RAISES
    ------
    TooManyVariablesError
        Above TAUTOLOGY_VARIABLE_CAP variables.

    EXAMPLES
    --------
    x | !x   -> tautology, 2 assignments
    x & !x   -> not a tautology, countermodel {'x': False}
    """
    names = variables(formula)
    _require_small(names)
    checked = 0
    with timed_event("TAUTOLOGY_CHECKED", variables=len(names)) as extra:
        for start, columns in _blocks(names):
            values = _table(formula, columns)
            failing = np.flatnonzero(~values)
            if failing.size:
                checked += int(failing[0]) + 1
                extra.update(tautology=False, assignments_checked=checked)
                return TautologyResult(False, _assignment(names, start + int(failing[0])), checked)
            checked += values.size
        extra.update(tautology=True, assignments_checked=checked)
    return TautologyResult(True, None, checked)


def count_models(formula: Formula) -> int:
    """
    Number of satisfying 0/1 assignments over the formula's own variables.
    """
    names = variables(formula)
    _require_small(names)
    return sum(int(np.count_nonzero(_table(formula, columns))) for _, columns in _blocks(names))


def _to_z3(formula: Formula, symbols: dict[str, z3.BoolRef]) -> z3.BoolRef:
    if isinstance(formula, Var):
        if formula.name not in symbols:
            symbols[formula.name] = z3.Bool(formula.name)
        return symbols[formula.name]
    if isinstance(formula, Not):
        return z3.Not(_to_z3(formula.operand, symbols))
    left = _to_z3(formula.left, symbols)
    right = _to_z3(formula.right, symbols)
    if isinstance(formula, And):
        return z3.And(left, right)
    if isinstance(formula, Or):
        return z3.Or(left, right)
    if isinstance(formula, Xor):
        return z3.Xor(left, right)
    return left == right


def find_model(formula: Formula) -> dict[str, bool] | None:
    """
    A satisfying assignment found by z3, or None when unsatisfiable.
    """
    symbols: dict[str, z3.BoolRef] = {}
    solver = z3.Solver()
    solver.add(_to_z3(formula, symbols))
    if solver.check() != z3.sat:
        return None
    model = solver.model()
    return {
        name: z3.is_true(model.evaluate(symbol, model_completion=True))
        for name, symbol in sorted(symbols.items())
    }


def classical_satisfiable(formula: Formula) -> bool:
    return find_model(formula) is not None


def solver_tautology(formula: Formula) -> TautologyResult:
    """
    Validity through z3: f is a tautology iff !f is unsatisfiable.

    assignments_checked is 0 because no enumeration takes place.
    """
    with timed_event("TAUTOLOGY_CHECKED", variables=len(variables(formula)), method="z3") as extra:
        countermodel = find_model(Not(formula))
        extra["tautology"] = countermodel is None
    return TautologyResult(countermodel is None, countermodel, 0)


def exactly_one(x: Formula, y: Formula, z: Formula) -> Formula:
    """
    (x ^ y ^ z) ^ (x & y & z): true iff exactly one operand is true.
    """
    return Xor(Xor(Xor(x, y), z), And(And(x, y), z))


def ks_variable(class_id: int) -> str:
    return f"d{class_id}"


def ks_proposition(instance: KSInstance) -> Formula:
    """
    Disjunction over triples of !exactly_one(triple).

    Directions that are equal up to sign share one variable `d<class>`, so
    a satisfying assignment of the negation is a valid coloring where true
    marks the zero of each triple.

    RAISES
    ------
    BadShapeError
        For an instance without triples.
    """
    validate_instance(instance)
    if not instance.triples:
        raise BadShapeError("Instance has no triples", name=instance.name)
    classes = direction_classes(instance)
    clauses = [
        Not(exactly_one(*(Var(ks_variable(classes[index])) for index in triple)))
        for triple in instance.triples
    ]
    return reduce(Or, clauses)
