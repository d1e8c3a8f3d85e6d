"""
app/services/boolean_complex/algebra.py

Boolean algebras of pairwise-commuting projections.

PURPOSE
-------
This module builds and queries finite Boolean algebras of projections:

- complement / meet / join on commuting projections
- generate_algebra     closure of a commuting generator family
- common_subalgebra    intersection of two algebras by matrix equality
- triple_algebra       B_xyz for a spin-1 triple experiment on a frame
- algebra_contains / element_mask   membership without materializing

HOW CLOSURE IS COMPUTED
-----------------------
For commuting projections the generated algebra is determined by its atoms.
Starting from the single atom I, each generator G splits every current atom A
into A·G and A·(I − G); zero pieces are dropped. The surviving pieces are the
atoms, and the algebra is every join (sum) of a subset of them. This never
enumerates elements, so the element cap is checked up front from the atom
count.

IMPORTANT
---------
Meet and join are only defined for commuting operands. Non-commuting operands
raise NonCommutingGeneratorsError rather than returning a lattice value.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

import numpy as np

from ...models import BooleanAlgebra, Projection, Tolerance, default_tolerance
from ..shared.errors import AlgebraTooLargeError, DimMismatchError, NotOrthogonalFrameError
from ..shared.guards import inf_norm, require_commuting, require_projection
from ..shared.runtime_config import setting
from .spin import spin1_square


def complement(x: Projection) -> Projection:
    return x.complement()


def meet(x: Projection, y: Projection, tol: Tolerance | float | None = None) -> Projection:
    """
    x ∧ y = xy for commuting projections.
    """
    eps = default_tolerance(tol).eps
    require_commuting(x.matrix, y.matrix, eps)
    product = x.matrix @ y.matrix
    return Projection((product + product.conj().T) / 2)


def join(x: Projection, y: Projection, tol: Tolerance | float | None = None) -> Projection:
    """
    x ∨ y = x + y − xy for commuting projections.
    """
    eps = default_tolerance(tol).eps
    require_commuting(x.matrix, y.matrix, eps)
    product = x.matrix @ y.matrix
    return Projection(x.matrix + y.matrix - (product + product.conj().T) / 2)


def projection_equal(x: Projection, y: Projection, tol: Tolerance | float | None = None) -> bool:
    eps = default_tolerance(tol).eps
    if x.dim != y.dim:
        return False
    return inf_norm(x.matrix - y.matrix) <= eps


def _check_cap(atom_count: int) -> None:
    cap = int(setting("ALGEBRA_ELEMENT_CAP", 2**20))
    if 2**atom_count > cap:
        raise AlgebraTooLargeError(
            f"Algebra would have 2^{atom_count} elements, above the cap of {cap}",
            atoms=atom_count,
            cap=cap,
        )


def algebra_from_atoms(
    atoms: Sequence[Projection],
    dim: int,
    label: str = "",
) -> BooleanAlgebra:
    _check_cap(len(atoms))
    return BooleanAlgebra(atoms=tuple(atoms), dim=dim, label=label)


def generate_algebra(
    generators: Iterable[Projection | Any],
    tol: Tolerance | float | None = None,
    label: str = "",
    dim: int | None = None,
) -> BooleanAlgebra:
    """
    Smallest Boolean algebra containing the generators, 0 and I.

    PARAMETERS
    ----------
    generators:
        Pairwise-commuting projections (Projection values or raw matrices).
    tol:
        Tolerance for projection, commutation and zero checks.
    label:
        Optional display name stored on the result.
    dim:
        Ambient dimension; required only when `generators` is empty.

    RETURNS
    -------
    BooleanAlgebra
        With 2^(number of atoms) elements.

    RAISES
    ------
    NonCommutingGeneratorsError
        With `details` {"pair": [i, j], "commutator_norm": ...}.
    DimMismatchError, NotProjectionError, AlgebraTooLargeError

    EXAMPLES
    --------
    generate_algebra([P])                 -> {0, P, I−P, I}
    generate_algebra([S_x², S_y², S_z²])  -> 8 elements (spin-1)
    """
    eps = default_tolerance(tol).eps
    matrices = [
        require_projection(g.matrix if isinstance(g, Projection) else g, eps) for g in generators
    ]

    if matrices:
        dims = {m.shape[0] for m in matrices}
        if len(dims) != 1:
            raise DimMismatchError("Generators have different dimensions", dims=sorted(dims))
        dim = matrices[0].shape[0]
    elif dim is None:
        raise ValueError("dim is required when no generators are given")

    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            require_commuting(matrices[i], matrices[j], eps, pair=[i, j])

    atoms = [np.eye(dim, dtype=np.complex128)]
    for generator in matrices:
        refined = []
        for atom in atoms:
            inside = atom @ generator
            inside = (inside + inside.conj().T) / 2
            outside = atom - inside
            for piece in (inside, outside):
                if inf_norm(piece) > eps:
                    refined.append(piece)
        atoms = refined

    return algebra_from_atoms([Projection(a) for a in atoms], dim, label=label)


def element_mask(
    algebra: BooleanAlgebra,
    x: Projection,
    tol: Tolerance | float | None = None,
) -> int | None:
    """
    Bitmask of the atoms below `x`, or None when `x` is not an element.

    The candidate mask takes atom i when tr(aᵢ x)/tr(aᵢ) > 1/2; membership is
    then decided by matrix equality of the candidate element with `x`.
    """
    eps = default_tolerance(tol).eps
    if x.dim != algebra.dim:
        return None
    mask = 0
    for index, atom in enumerate(algebra.atoms):
        weight = np.trace(atom.matrix @ x.matrix).real / max(atom.rank, 1)
        if weight > 0.5:
            mask |= 1 << index
    if inf_norm(algebra.element(mask).matrix - x.matrix) <= eps:
        return mask
    return None


def algebra_contains(
    algebra: BooleanAlgebra,
    x: Projection,
    tol: Tolerance | float | None = None,
) -> bool:
    return element_mask(algebra, x, tol) is not None


def common_subalgebra(
    a: BooleanAlgebra,
    b: BooleanAlgebra,
    tol: Tolerance | float | None = None,
) -> BooleanAlgebra:
    """
    Intersection a ∩ b by matrix equality within tol.

    Every element of the smaller algebra is tested for membership in the
    other; the common elements are closed under meet and complement, and the
    minimal nonzero ones are the atoms of the result.

    RAISES
    ------
    DimMismatchError
    """
    eps = default_tolerance(tol).eps
    if a.dim != b.dim:
        raise DimMismatchError(
            f"Algebras live on different dimensions ({a.dim} vs {b.dim})",
            left=a.dim,
            right=b.dim,
        )

    small, large = (a, b) if a.atom_count <= b.atom_count else (b, a)
    common = [
        mask
        for mask in range(1, small.size)
        if algebra_contains(large, small.element(mask), eps)
    ]

    atoms = [
        mask
        for mask in common
        if not any(other != mask and other & mask == other for other in common)
    ]
    return algebra_from_atoms([small.element(mask) for mask in atoms], small.dim)


def _frame_is_orthonormal(frame: Sequence[np.ndarray], eps: float) -> tuple[bool, float]:
    worst = 0.0
    for i, u in enumerate(frame):
        worst = max(worst, abs(float(np.dot(u, u)) - 1.0))
        for v in frame[i + 1 :]:
            worst = max(worst, abs(float(np.dot(u, v))))
    return worst <= eps, worst


def triple_algebra(
    x: Any,
    y: Any,
    z: Any,
    tol: Tolerance | float | None = None,
) -> BooleanAlgebra:
    """
    B_xyz = algebra generated by S_x², S_y², S_z² for the spin-1 frame (x,y,z).

    RAISES
    ------
    NotOrthogonalFrameError
        When the three vectors are not unit and pairwise orthogonal within tol.

    EXAMPLES
    --------
    triple_algebra(e₁, e₂, e₃)  -> 8 elements, atoms I−S_x², I−S_y², I−S_z²
    """
    eps = default_tolerance(tol).eps
    frame = [np.asarray(v, dtype=np.float64).reshape(3) for v in (x, y, z)]
    ok, worst = _frame_is_orthonormal(frame, eps)
    if not ok:
        raise NotOrthogonalFrameError(
            f"Frame is not orthonormal (worst residual {worst:.3e})",
            residual=worst,
        )
    squares = [spin1_square(v) for v in frame]
    return generate_algebra(squares, eps, label="B_xyz")
