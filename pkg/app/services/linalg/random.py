"""
app/services/linalg/random.py

Seeded random operators for property sweeps and demos.

All functions take an explicit `numpy.random.Generator`; nothing touches the
global numpy random state.
"""

from __future__ import annotations

import numpy as np
from scipy.stats import unitary_group

from ...models import Projection


def random_unit_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    vector = rng.normal(size=n) + 1j * rng.normal(size=n)
    return vector / np.linalg.norm(vector)


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + g.conj().T) / 2


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-distributed n × n unitary.
    """
    if n == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return np.asarray(unitary_group.rvs(n, random_state=rng), dtype=np.complex128)


def random_density(n: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """
    Random density operator of the given rank (full rank by default).
    """
    rank = n if rank is None else rank
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    w = g @ g.conj().T
    return w / np.trace(w).real


def random_projection(n: int, rng: np.random.Generator, rank: int | None = None) -> Projection:
    rank = int(rng.integers(0, n + 1)) if rank is None else rank
    u = random_unitary(n, rng)
    basis = u[:, :rank]
    return Projection(basis @ basis.conj().T)


def random_commuting_family(
    n: int,
    count: int,
    rng: np.random.Generator,
) -> list[Projection]:
    """
    `count` projections diagonal in one random basis, hence pairwise commuting.
    """
    u = random_unitary(n, rng)
    family = []
    for _ in range(count):
        mask = rng.random(n) < 0.5
        family.append(Projection((u * mask) @ u.conj().T))
    return family
