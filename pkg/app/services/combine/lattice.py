"""
app/services/combine/lattice.py

Every property of a combined system as a lattice formula over product
properties.

PURPOSE
-------
A rank-1 projection P_Γ on C^d1 ⊗ C^d2 is rewritten, by induction on the
Schmidt rank n of Γ, as

    P_Γ = (P_{x+} ∨ P_{x−}) ∧ (P_{y+} ∨ P_{y−})

where x±, y± have Schmidt rank n − 1. The base case n = 1 is a product leaf
P_{φ⊗ψ}. Writing Γ = Σ cᵢ φᵢ⊗ψᵢ and eᵢⱼ = φᵢ⊗ψⱼ:

    n = 2:  Θ = −c₂e₁₁ + c₁e₂₂
            x₊ = c₂Γ + c₁Θ,  x₋ = c₁Γ − c₂Θ
    n > 2:  Θ = c₁e₃₁ + c₂e₂₃ + c₃e₁₃ + Σ_{i>3} cᵢeᵢ₁
            x± = (Γ ± Θ)/√2
    all n:  Δ = c₁e₂₁ + c₂e₁₂ + Σ_{i≥3} cᵢeᵢ₂
            y± = (Γ ± Δ)/√2

CHECKS DURING CONSTRUCTION
--------------------------
- Γ, Θ, Δ pairwise orthogonal unit vectors
- x₊ ⊥ x₋ and y₊ ⊥ y₋ (so each pair of projections commutes)
- each of x±, y± has Schmidt rank exactly n − 1

A failed check raises OrthogonalityViolationError: it means the construction
is wrong, not the input.

PUBLIC API
----------
- gamma_formula(gamma, d1, d2, tol)
- direct_sum_membership(x, d1, d2, tol)
- evaluate_lattice(formula, tol)
- lattice_depth(formula)
- lattice_leaves(formula)
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from ...models import LatticeJoin, LatticeLeaf, LatticeMeet, Projection, SchmidtForm, Tolerance, default_tolerance
from ...reports.instrumentation import timed_event
from ..boolean_complex.algebra import join, meet
from ..shared.errors import BadShapeError, OrthogonalityViolationError
from ..shared.guards import inf_norm, require_commuting, require_projection, require_unit_vector
from .schmidt import decisive_schmidt, schmidt

_SQRT_HALF = math.sqrt(0.5)


def _basis_product(form: SchmidtForm, i: int, j: int) -> np.ndarray:
    return np.kron(form.left(i), form.right(j))


def _theta(form: SchmidtForm) -> np.ndarray:
    c = form.coefficients
    if form.rank == 2:
        return -c[1] * _basis_product(form, 0, 0) + c[0] * _basis_product(form, 1, 1)
    theta = (
        c[0] * _basis_product(form, 2, 0)
        + c[1] * _basis_product(form, 1, 2)
        + c[2] * _basis_product(form, 0, 2)
    )
    for i in range(3, form.rank):
        theta = theta + c[i] * _basis_product(form, i, 0)
    return theta


def _delta(form: SchmidtForm) -> np.ndarray:
    c = form.coefficients
    delta = c[0] * _basis_product(form, 1, 0) + c[1] * _basis_product(form, 0, 1)
    for i in range(2, form.rank):
        delta = delta + c[i] * _basis_product(form, i, 1)
    return delta


def _check_orthonormal(vectors: dict[str, np.ndarray], eps: float) -> None:
    names = list(vectors)
    for name in names:
        norm = float(np.linalg.norm(vectors[name]))
        if abs(norm - 1.0) > eps:
            raise OrthogonalityViolationError(f"{name} is not a unit vector", vector=name, norm=norm)
    for index, first in enumerate(names):
        for second in names[index + 1 :]:
            overlap = abs(complex(np.vdot(vectors[first], vectors[second])))
            if overlap > eps:
                raise OrthogonalityViolationError(
                    f"{first} and {second} are not orthogonal",
                    pair=[first, second],
                    overlap=overlap,
                )


def _recursion_vectors(gamma: np.ndarray, form: SchmidtForm, eps: float) -> dict[str, np.ndarray]:
    """
    x₊, x₋, y₊, y₋ for a Γ of Schmidt rank ≥ 2, after checking Γ, Θ, Δ.
    """
    c = form.coefficients
    theta = _theta(form)
    delta = _delta(form)
    _check_orthonormal({"Gamma": gamma, "Theta": theta, "Delta": delta}, eps)

    if form.rank == 2:
        x_plus = c[1] * gamma + c[0] * theta
        x_minus = c[0] * gamma - c[1] * theta
    else:
        x_plus = (gamma + theta) * _SQRT_HALF
        x_minus = (gamma - theta) * _SQRT_HALF
    y_plus = (gamma + delta) * _SQRT_HALF
    y_minus = (gamma - delta) * _SQRT_HALF

    vectors = {"x+": x_plus, "x-": x_minus, "y+": y_plus, "y-": y_minus}
    vectors = {name: v / np.linalg.norm(v) for name, v in vectors.items()}
    _check_orthonormal({"x+": vectors["x+"], "x-": vectors["x-"]}, eps)
    _check_orthonormal({"y+": vectors["y+"], "y-": vectors["y-"]}, eps)
    return vectors


def _build(gamma: np.ndarray, d1: int, d2: int, eps: float, tol: Tolerance) -> Any:
    form = decisive_schmidt(gamma, d1, d2, tol)
    if form.rank == 1:
        return LatticeLeaf(left=form.left(0), right=form.right(0))

    vectors = _recursion_vectors(form.vector(), form, eps)
    for name, vector in vectors.items():
        rank = schmidt(vector, d1, d2, tol).rank
        if rank != form.rank - 1:
            raise OrthogonalityViolationError(
                f"{name} has Schmidt rank {rank}, expected {form.rank - 1}",
                vector=name,
                rank=rank,
                expected=form.rank - 1,
            )

    children = {name: _build(vector, d1, d2, eps, tol) for name, vector in vectors.items()}
    return LatticeMeet(
        (
            LatticeJoin((children["x+"], children["x-"])),
            LatticeJoin((children["y+"], children["y-"])),
        )
    )


def gamma_formula(gamma: Any, d1: int, d2: int, tol: Tolerance | float | None = None) -> Any:
    """
    Lattice formula over product projections whose value is P_Γ.

    PARAMETERS
    ----------
    gamma:
        Unit vector of length d1·d2 (row-major product basis).
    d1, d2:
        Factor dimensions.

    RETURNS
    -------
    LatticeFormula
        A leaf for product vectors; otherwise
        Meet(Join(x₊-tree, x₋-tree), Join(y₊-tree, y₋-tree)).

    RAISES
    ------
    NotUnitVectorError, BadShapeError
    RankDetectionFailureError
        A Schmidt coefficient sits too close to the rank tolerance.
    OrthogonalityViolationError
        A constructed vector failed its checks.

    EXAMPLES
    --------
    φ ⊗ ψ        -> LatticeLeaf(φ, ψ)
    singlet      -> evaluates to (S_z = 0) ∧ (S_x = 0)
    """
    scale = default_tolerance(tol)
    vector = require_unit_vector(gamma, scale.eps)
    with timed_event("GAMMA_FORMULA_BUILT", d1=d1, d2=d2) as extra:
        formula = _build(vector, d1, d2, scale.scaled(10).eps, scale)
        extra["leaves"] = len(lattice_leaves(formula))
        extra["depth"] = lattice_depth(formula)
    return formula


def evaluate_lattice(formula: Any, tol: Tolerance | float | None = None) -> Projection:
    """
    Evaluate a lattice formula, re-checking commutation at every node.

    RAISES
    ------
    NonCommutingGeneratorsError
        When two children of one node do not commute.
    BadShapeError
        For an interior node without children.
    """
    scale = default_tolerance(tol)
    if isinstance(formula, LatticeLeaf):
        return Projection.onto(np.kron(formula.left, formula.right))
    if not isinstance(formula, (LatticeMeet, LatticeJoin)):
        raise TypeError(f"Not a lattice formula: {type(formula).__name__}")
    if not formula.children:
        raise BadShapeError("Lattice node without children")

    values = [evaluate_lattice(child, scale) for child in formula.children]
    bound = scale.scaled(10).eps
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            require_commuting(values[i].matrix, values[j].matrix, bound, children=[i, j])

    combine = meet if isinstance(formula, LatticeMeet) else join
    result = values[0]
    for value in values[1:]:
        result = combine(result, value, bound)
    return result


def direct_sum_membership(x: Any, d1: int, d2: int, tol: Tolerance | float | None = None) -> Any:
    """
    Lattice formula over product properties for an arbitrary projection.

    x is split into rank-1 pieces along one orthonormal eigenbasis of its
    range; each piece gets a gamma_formula and the pieces are joined. The zero
    projection is written as the meet of two orthogonal product leaves.

    RAISES
    ------
    NotProjectionError, BadShapeError
    plus everything gamma_formula raises
    """
    scale = default_tolerance(tol)
    matrix = Projection(require_projection(x.matrix if isinstance(x, Projection) else x, scale.eps)).matrix
    if matrix.shape[0] != d1 * d2:
        raise BadShapeError(
            f"Projection of size {matrix.shape[0]} does not factor as {d1}x{d2}",
            size=int(matrix.shape[0]),
            d1=d1,
            d2=d2,
        )

    values, vectors = np.linalg.eigh((matrix + matrix.conj().T) / 2)
    pieces = [vectors[:, index] for index in range(values.shape[0]) if values[index] > 0.5]
    if not pieces:
        if d1 * d2 < 2:
            raise BadShapeError("The zero projection on a one-dimensional space has no product form")
        first = np.eye(d1 * d2, dtype=np.complex128)[0]
        second = np.eye(d1 * d2, dtype=np.complex128)[1]
        return LatticeMeet(
            (
                LatticeLeaf(*_split_basis_vector(first, d1, d2)),
                LatticeLeaf(*_split_basis_vector(second, d1, d2)),
            )
        )

    formulas = tuple(gamma_formula(piece, d1, d2, scale) for piece in pieces)
    if len(formulas) == 1:
        return formulas[0]
    return LatticeJoin(formulas)


def _split_basis_vector(vector: np.ndarray, d1: int, d2: int) -> tuple[np.ndarray, np.ndarray]:
    index = int(np.argmax(np.abs(vector)))
    left = np.zeros(d1, dtype=np.complex128)
    right = np.zeros(d2, dtype=np.complex128)
    left[index // d2] = 1.0
    right[index % d2] = 1.0
    return left, right


def lattice_depth(formula: Any) -> int:
    if isinstance(formula, LatticeLeaf):
        return 0
    return 1 + max((lattice_depth(child) for child in formula.children), default=0)


def lattice_leaves(formula: Any) -> list[LatticeLeaf]:
    if isinstance(formula, LatticeLeaf):
        return [formula]
    leaves: list[LatticeLeaf] = []
    for child in formula.children:
        leaves.extend(lattice_leaves(child))
    return leaves


def lattice_residual(formula: Any, target: Projection, tol: Tolerance | float | None = None) -> float:
    """
    ‖evaluate_lattice(formula) − target‖∞.
    """
    return inf_norm(evaluate_lattice(formula, tol).matrix - target.matrix)
