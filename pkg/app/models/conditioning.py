"""
app/models/conditioning.py

Result type for conditionalization and the quantum Law of Alternatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .states import State


@dataclass(frozen=True, eq=False)
class ConditionReport:
    """
    Conditional state plus the Law-of-Alternatives decomposition.

    FIELDS
    ------
    conditioned:
        The Lüders state ywy/tr(ywy) for y = ∨ yᵢ.
    normalizer:
        tr(wy) (equal to tr(ywy)), strictly positive.
    classical_part:
        Σᵢ p(x|yᵢ)·p(yᵢ|y).
    interference_part:
        Σ_{i≠j} tr(yᵢ w yⱼ x)/tr(wy).
    direct:
        tr(ywyx)/tr(wy), the conditional probability computed in one step.
    """

    conditioned: State
    normalizer: float
    classical_part: float | None = None
    interference_part: float | None = None
    direct: float | None = None

    @property
    def total(self) -> float | None:
        if self.classical_part is None or self.interference_part is None:
            return None
        return self.classical_part + self.interference_part
