"""
app/services/qlogic/quantum.py

Formulas evaluated over projections.

SEMANTICS
---------
    !x        I − x                (always defined)
    x & y     xy
    x | y     x + y − xy
    x ^ y     x + y − 2xy
    x <-> y   I − (x + y − 2xy)

Every binary node requires its two child values to commute within eps.
Otherwise evaluation stops and the outcome names the two subformulas and
‖[x, y]‖∞. Definedness is local to each node.
"""

from __future__ import annotations

import numpy as np

from ...models import (
    And,
    EvalOutcome,
    Formula,
    Iff,
    Not,
    Or,
    ParadoxReport,
    Projection,
    TautologyResult,
    Tolerance,
    Valuation,
    Var,
    Xor,
    default_tolerance,
)
from ..shared.errors import DimMismatchError, UnboundVariableError
from ..shared.guards import inf_norm, require_projection
from ..shared.runtime_config import setting
from .classical import classical_tautology, solver_tautology
from .syntax import variables


def _require_valuation(formula: Formula, valuation: Valuation, eps: float) -> int:
    names = variables(formula)
    missing = [name for name in names if name not in valuation]
    if missing:
        raise UnboundVariableError(f"Unbound variables: {', '.join(missing)}", missing=missing)
    dims = {name: valuation[name].dim for name in names}
    if len(set(dims.values())) > 1:
        raise DimMismatchError("Valuation projections have different dimensions", dims=dims)
    for name in names:
        require_projection(valuation[name].matrix, eps)
    return next(iter(dims.values()))


def _combine(formula: Formula, x: np.ndarray, y: np.ndarray, identity: np.ndarray) -> np.ndarray:
    product = x @ y
    product = (product + product.conj().T) / 2
    if isinstance(formula, And):
        return product
    if isinstance(formula, Or):
        return x + y - product
    exclusive = x + y - 2 * product
    if isinstance(formula, Xor):
        return exclusive
    return identity - exclusive


def eval_quantum(formula: Formula, valuation: Valuation, tol: Tolerance | float | None = None) -> EvalOutcome:
    """
    Bottom-up evaluation with commutation gating.

    RAISES
    ------
    UnboundVariableError, DimMismatchError, NotHermitianError, NotProjectionError

    EXAMPLES
    --------
    x | !x, any x                   -> defined, I
    x & y, P_z⁺ and P_x⁺ (spin ½)   -> undefined, commutator norm 0.5
    """
    eps = default_tolerance(tol).eps
    dim = _require_valuation(formula, valuation, eps)
    identity = np.eye(dim, dtype=np.complex128)
    memo: dict[Formula, EvalOutcome] = {}

    def visit(node: Formula) -> EvalOutcome:
        if node in memo:
            return memo[node]
        if isinstance(node, Var):
            outcome = EvalOutcome.of(valuation[node.name])
        elif isinstance(node, Not):
            inner = visit(node.operand)
            outcome = inner if not inner.defined else EvalOutcome.of(Projection(identity - inner.value.matrix))
        else:
            left = visit(node.left)
            if not left.defined:
                return left
            right = visit(node.right)
            if not right.defined:
                return right
            x, y = left.value.matrix, right.value.matrix
            norm = inf_norm(x @ y - y @ x)
            if norm > eps:
                outcome = EvalOutcome.undefined(node.left, node.right, norm)
            else:
                outcome = EvalOutcome.of(Projection(_combine(node, x, y, identity)))
        memo[node] = outcome
        return outcome

    return visit(formula)


def tautology_check(formula: Formula) -> TautologyResult:
    """
    Brute force up to TAUTOLOGY_VARIABLE_CAP variables, z3 above it.
    """
    if len(variables(formula)) <= int(setting("TAUTOLOGY_VARIABLE_CAP", 24)):
        return classical_tautology(formula)
    return solver_tautology(formula)


def check_paradox(formula: Formula, valuation: Valuation, tol: Tolerance | float | None = None) -> ParadoxReport:
    """
    Compare the classical and the quantum verdict on one formula.

    EXAMPLES
    --------
    x | !x                      -> tautology, value I, no paradox
    four-variable KS formula    -> tautology, value 0, paradox
    x & !x                      -> not a tautology, no paradox
    """
    eps = default_tolerance(tol).eps
    tautology = tautology_check(formula)
    outcome = eval_quantum(formula, valuation, tol)
    distance = None
    if outcome.defined:
        distance = inf_norm(outcome.value.matrix - np.eye(outcome.value.dim))
    return ParadoxReport(
        tautology=tautology,
        outcome=outcome,
        distance_from_identity=distance,
        differs_from_identity=distance is not None and distance > eps,
    )
