"""
app/models/logic.py

Propositional formulas over extrinsic properties and their evaluation results.

AST
---
Var(name) | Not(f) | And(l, r) | Or(l, r) | Xor(l, r) | Iff(l, r)

Nodes are frozen, hashable dataclasses, so formulas can be used as dict keys
and compared structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .operators import Projection


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Xor:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Not, And, Or, Xor, Iff]
BinaryFormula = Union[And, Or, Xor, Iff]

# Quantum valuations bind variables to projections of one shared dimension;
# classical valuations bind them to truth values.
Valuation = Mapping[str, Projection]
ClassicalValuation = Mapping[str, bool]


@dataclass(frozen=True, eq=False)
class EvalOutcome:
    """
    Result of evaluating a formula over projections.

    defined outcome:
        `value` is the resulting Projection.
    undefined outcome:
        `offending` holds the two subformulas whose values do not commute and
        `commutator_norm` is ‖[x, y]‖∞ for them.
    """

    defined: bool
    value: Projection | None = None
    offending: tuple[Formula, Formula] | None = None
    commutator_norm: float | None = None

    @classmethod
    def of(cls, value: Projection) -> "EvalOutcome":
        return cls(defined=True, value=value)

    @classmethod
    def undefined(cls, left: Formula, right: Formula, norm: float) -> "EvalOutcome":
        return cls(defined=False, offending=(left, right), commutator_norm=float(norm))


@dataclass(frozen=True)
class TautologyResult:
    tautology: bool
    countermodel: Mapping[str, bool] | None
    assignments_checked: int

    def __bool__(self) -> bool:
        return self.tautology


@dataclass(frozen=True, eq=False)
class ParadoxReport:
    """
    Classical truth versus quantum value of one proposition.

    paradox is certified when the formula is a classical tautology, its
    quantum evaluation is defined, and the resulting projection is not I.
    """

    tautology: TautologyResult
    outcome: EvalOutcome
    distance_from_identity: float | None
    differs_from_identity: bool

    @property
    def paradox(self) -> bool:
        return bool(self.tautology.tautology and self.outcome.defined and self.differs_from_identity)
