"""
app/services/conditioning/__init__.py

Reduction of states: Lüders conditionalization, the Law of Alternatives with
its interference term, and conditioning on an interaction algebra.
"""

from __future__ import annotations

from .alternatives import condition_on_algebra, join_all, law_of_alternatives
from .luders import conditional_probability, luders, luders_reconstruction_identity, symmetry_of_conditional

__all__ = [
    "luders",
    "conditional_probability",
    "symmetry_of_conditional",
    "luders_reconstruction_identity",
    "join_all",
    "law_of_alternatives",
    "condition_on_algebra",
]
