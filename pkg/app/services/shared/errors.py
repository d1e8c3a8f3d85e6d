"""
app/services/shared/errors.py

Error hierarchy for the qsigma engine.

PURPOSE
-------
Every failure the engine reports on purpose is a subclass of `QSigmaError`.
Each carries:
- a stable machine-readable `code`
- a human-readable message
- a `details` mapping with the offending quantities (norms, indices, dims)

Input-validation failures also derive from `ValueError` so callers that only
know the standard library can still catch them. These signal a broken
internal invariant rather than bad input and do NOT derive from `ValueError`:
- RankDetectionFailureError
- OrthogonalityViolationError
- SymmetryMismatchError

CLI MAPPING
-----------
`app.commands` translates a `QSigmaError` into exit code 2 and writes
`to_payload()` to stderr as JSON.
"""

from __future__ import annotations

from typing import Any, Mapping


class QSigmaError(Exception):
    """
    Base class for all engine errors.
    """

    code = "qsigma_error"

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details: Mapping[str, Any] = dict(details)

    def to_payload(self) -> dict[str, Any]:
        """
        Return a JSON-safe description of the error.
        """
        return {
            "error": self.code,
            "message": self.message,
            "details": {key: _json_safe(value) for key, value in self.details.items()},
        }


def _json_safe(value: Any) -> Any:
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, float):
        return float(value)
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


# ---------------------------------------------------------------------------
# linalg-core
# ---------------------------------------------------------------------------


class NotSquareError(QSigmaError, ValueError):
    code = "not_square"


class NotHermitianError(QSigmaError, ValueError):
    code = "not_hermitian"


class NotUnitaryError(QSigmaError, ValueError):
    code = "not_unitary"


class DimMismatchError(QSigmaError, ValueError):
    code = "dim_mismatch"


class BadShapeError(QSigmaError, ValueError):
    code = "bad_shape"


class NotUnitVectorError(QSigmaError, ValueError):
    code = "not_unit_vector"


class NotProjectionError(QSigmaError, ValueError):
    code = "not_projection"


class DimCapExceededError(QSigmaError, ValueError):
    code = "dim_cap_exceeded"


# ---------------------------------------------------------------------------
# boolean-complex
# ---------------------------------------------------------------------------


class NonCommutingGeneratorsError(QSigmaError, ValueError):
    """
    Raised when two projections that must commute do not.

    `details` carries the pair indices (when known) and the commutator norm.
    """

    code = "non_commuting_generators"


class NotOrthogonalFrameError(QSigmaError, ValueError):
    code = "not_orthogonal_frame"


class AlgebraTooLargeError(QSigmaError, ValueError):
    code = "algebra_too_large"


class SearchBudgetExceededError(QSigmaError):
    code = "search_budget_exceeded"


# ---------------------------------------------------------------------------
# states / conditioning
# ---------------------------------------------------------------------------


class NotDensityError(QSigmaError, ValueError):
    code = "not_density"


class BadWeightsError(QSigmaError, ValueError):
    code = "bad_weights"


class ZeroProbabilityConditionError(QSigmaError, ValueError):
    code = "zero_probability_condition"


class NotDisjointError(QSigmaError, ValueError):
    code = "not_disjoint"


class NotPartitionError(QSigmaError, ValueError):
    code = "not_partition"


# ---------------------------------------------------------------------------
# combine (internal invariants)
# ---------------------------------------------------------------------------


class RankDetectionFailureError(QSigmaError):
    """
    Schmidt coefficients sit too close to the rank threshold to decide rank.
    """

    code = "rank_detection_failure"


class OrthogonalityViolationError(QSigmaError):
    """
    A constructed recursion vector failed an orthogonality or commutation check.
    """

    code = "orthogonality_violation"


class SymmetryMismatchError(QSigmaError):
    """
    Two evaluation orders of a transported conditional probability disagree.
    """

    code = "symmetry_mismatch"


# ---------------------------------------------------------------------------
# reck-compiler
# ---------------------------------------------------------------------------


class IndexOutOfRangeError(QSigmaError, ValueError):
    code = "index_out_of_range"


# ---------------------------------------------------------------------------
# qlogic
# ---------------------------------------------------------------------------


class UnboundVariableError(QSigmaError, ValueError):
    code = "unbound_variable"


class TooManyVariablesError(QSigmaError, ValueError):
    code = "too_many_variables"


class FormulaSyntaxError(QSigmaError, ValueError):
    code = "formula_syntax"


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------


class BadGeometryError(QSigmaError, ValueError):
    code = "bad_geometry"


__all__ = [
    "QSigmaError",
    "NotSquareError",
    "NotHermitianError",
    "NotUnitaryError",
    "DimMismatchError",
    "BadShapeError",
    "NotUnitVectorError",
    "NotProjectionError",
    "DimCapExceededError",
    "NonCommutingGeneratorsError",
    "NotOrthogonalFrameError",
    "AlgebraTooLargeError",
    "SearchBudgetExceededError",
    "NotDensityError",
    "BadWeightsError",
    "ZeroProbabilityConditionError",
    "NotDisjointError",
    "NotPartitionError",
    "RankDetectionFailureError",
    "OrthogonalityViolationError",
    "SymmetryMismatchError",
    "IndexOutOfRangeError",
    "UnboundVariableError",
    "TooManyVariablesError",
    "FormulaSyntaxError",
    "BadGeometryError",
]
