"""
app/services/conditioning/alternatives.py

The quantum Law of Alternatives and conditioning on a Boolean algebra.

LAW OF ALTERNATIVES
-------------------
For pairwise disjoint y₁ … y_k with y = ∨ yᵢ:

    p(x | y) = Σᵢ p(x | yᵢ)·p(yᵢ | y)  +  Σ_{i≠j} tr(yᵢ w yⱼ x)/tr(wy)
               └──── classical part ───┘   └──── interference part ────┘

The interference part vanishes when x commutes with every yᵢ.

CONDITIONING ON AN ALGEBRA
--------------------------
For a partition of I into cells yᵢ the conditioned density is Σ yᵢ w yᵢ, the
mixture of the Lüders states with weights p(yᵢ). Null cells contribute the
zero matrix.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ...models import ConditionReport, Projection, State, Tolerance, default_tolerance
from ..shared.errors import BadShapeError, DimMismatchError, NotDisjointError, NotPartitionError
from ..shared.guards import inf_norm
from .luders import luders


def _require_family(p: State, ys: Sequence[Projection]) -> None:
    if not ys:
        raise BadShapeError("Need at least one projection")
    for y in ys:
        if y.dim != p.dim:
            raise DimMismatchError(f"State has dimension {p.dim}, projection has {y.dim}", state=p.dim, projection=y.dim)


def _disjointness_residual(ys: Sequence[Projection]) -> tuple[float, tuple[int, int] | None]:
    worst, pair = 0.0, None
    for i in range(len(ys)):
        for j in range(i + 1, len(ys)):
            residual = inf_norm(ys[i].matrix @ ys[j].matrix)
            if residual > worst:
                worst, pair = residual, (i, j)
    return worst, pair


def join_all(ys: Sequence[Projection], tol: Tolerance | float | None = None) -> Projection:
    """
    ∨ yᵢ of pairwise disjoint projections (their sum).

    RAISES
    ------
    NotDisjointError
        When some yᵢyⱼ exceeds eps in ∞-norm.
    """
    eps = default_tolerance(tol).eps
    if not ys:
        raise BadShapeError("join_all needs at least one projection")
    residual, pair = _disjointness_residual(ys)
    if residual > eps:
        raise NotDisjointError(
            "Projections are not pairwise disjoint",
            pair=list(pair) if pair else None,
            residual=residual,
        )
    return Projection(sum(y.matrix for y in ys))


def law_of_alternatives(
    p: State,
    x: Projection,
    ys: Sequence[Projection],
    tol: Tolerance | float | None = None,
) -> ConditionReport:
    """
    Split p(x | ∨yᵢ) into its classical and interference parts.

    RETURNS
    -------
    ConditionReport
        conditioned = Lüders state on y = ∨yᵢ, normalizer = tr(wy), the two
        parts, and the directly computed tr(ywyx)/tr(wy).

    RAISES
    ------
    NotDisjointError
    ZeroProbabilityConditionError
        When p(y) ≤ eps.

    EXAMPLES
    --------
    x commuting with every yᵢ   -> interference_part = 0
    ys = (y₁,)                  -> classical_part = p(x | y₁), interference 0
    """
    eps = default_tolerance(tol).eps
    _require_family(p, ys)
    if x.dim != p.dim:
        raise DimMismatchError(f"State has dimension {p.dim}, projection has {x.dim}", state=p.dim, projection=x.dim)

    y = join_all(ys, eps)
    conditioned = luders(p, y, eps)
    normalizer = float(np.trace(p.density @ y.matrix).real)

    w = p.density
    classical = 0.0
    interference = 0.0
    for i, yi in enumerate(ys):
        for j, yj in enumerate(ys):
            term = float(np.trace(yi.matrix @ w @ yj.matrix @ x.matrix).real) / normalizer
            if i == j:
                classical += term
            else:
                interference += term
    direct = float(np.trace(y.matrix @ w @ y.matrix @ x.matrix).real) / normalizer

    return ConditionReport(
        conditioned=conditioned,
        normalizer=normalizer,
        classical_part=classical,
        interference_part=interference,
        direct=direct,
    )


def condition_on_algebra(
    p: State,
    ys: Sequence[Projection],
    tol: Tolerance | float | None = None,
) -> State:
    """
    p(· | B) with density Σ yᵢ w yᵢ.

    A state that already commutes with every cell (Σ yᵢ w yᵢ = w within eps)
    is returned as is, so p(· | B) applied twice equals one application
    exactly.

    RAISES
    ------
    NotPartitionError
        When the cells are not pairwise disjoint or do not sum to I.

    EXAMPLES
    --------
    ys = (I,)                                      -> p
    pure (e₁+e₂)/√2 on {diag(1,0), diag(0,1)}      -> I/2
    """
    eps = default_tolerance(tol).eps
    _require_family(p, ys)

    residual, pair = _disjointness_residual(ys)
    if residual > eps:
        raise NotPartitionError("Partition cells overlap", pair=list(pair) if pair else None, residual=residual)
    total = sum(y.matrix for y in ys)
    gap = inf_norm(total - np.eye(p.dim))
    if gap > eps:
        raise NotPartitionError("Partition cells do not sum to the identity", residual=gap)

    density = sum(y.matrix @ p.density @ y.matrix for y in ys)
    if inf_norm(density - p.density) <= eps:
        return p
    return State((density + density.conj().T) / 2)
