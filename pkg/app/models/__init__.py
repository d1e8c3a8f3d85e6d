"""
app/models/__init__.py

Central public export surface for all engine value types.
"""

from __future__ import annotations

from .operators import Projection, SpectralDecomposition, Tolerance, default_tolerance

from .properties import (
    BooleanAlgebra,
    ColorabilityResult,
    ComplexSkeleton,
    EmbeddingResult,
    KSInstance,
    SigmaComplex,
)

from .states import BorelSet, Interval, Observable, State
from .conditioning import ConditionReport
from .combined import LatticeFormula, LatticeJoin, LatticeLeaf, LatticeMeet, SchmidtForm

from .dynamics import (
    ClassicalLimitReport,
    ClassicalLimitRow,
    EvolutionSpec,
    SymmetryKind,
    SymmetryOp,
)

from .mesh import MeshProgram, ObservableRealization, TwoModeStage

from .logic import (
    And,
    ClassicalValuation,
    EvalOutcome,
    Formula,
    Iff,
    Not,
    Or,
    ParadoxReport,
    TautologyResult,
    Valuation,
    Var,
    Xor,
)

__all__ = [
    "Tolerance",
    "default_tolerance",
    "Projection",
    "SpectralDecomposition",
    "BooleanAlgebra",
    "SigmaComplex",
    "KSInstance",
    "ColorabilityResult",
    "EmbeddingResult",
    "ComplexSkeleton",
    "State",
    "Observable",
    "Interval",
    "BorelSet",
    "ConditionReport",
    "SchmidtForm",
    "LatticeFormula",
    "LatticeLeaf",
    "LatticeMeet",
    "LatticeJoin",
    "SymmetryKind",
    "SymmetryOp",
    "EvolutionSpec",
    "ClassicalLimitRow",
    "ClassicalLimitReport",
    "TwoModeStage",
    "MeshProgram",
    "ObservableRealization",
    "Formula",
    "Var",
    "Not",
    "And",
    "Or",
    "Xor",
    "Iff",
    "Valuation",
    "ClassicalValuation",
    "EvalOutcome",
    "TautologyResult",
    "ParadoxReport",
]
