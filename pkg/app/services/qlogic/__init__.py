"""
app/services/qlogic/__init__.py

Propositional logic of properties: syntax, classical semantics, commutation
gated quantum evaluation and the Kochen-Specker paradox propositions.
"""

from __future__ import annotations

from .classical import (
    classical_eval,
    classical_satisfiable,
    classical_tautology,
    count_models,
    exactly_one,
    find_model,
    ks_proposition,
    ks_variable,
    solver_tautology,
)
from .fixtures import (
    LogicFixture,
    excluded_middle_formula,
    four_dim_ks_formula,
    four_dim_ks_valuation,
    ks_valuation,
    singlet_correlation_fixtures,
)
from .quantum import check_paradox, eval_quantum, tautology_check
from .syntax import format_formula, parse_formula, variables

__all__ = [
    "parse_formula",
    "format_formula",
    "variables",
    "classical_eval",
    "classical_tautology",
    "count_models",
    "classical_satisfiable",
    "find_model",
    "solver_tautology",
    "tautology_check",
    "exactly_one",
    "ks_variable",
    "ks_proposition",
    "eval_quantum",
    "check_paradox",
    "LogicFixture",
    "excluded_middle_formula",
    "four_dim_ks_formula",
    "four_dim_ks_valuation",
    "singlet_correlation_fixtures",
    "ks_valuation",
]
