"""
app/models/states.py

States, observables and the finite Borel sets used to query spectral measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .helpers import frozen_matrix
from .operators import SpectralDecomposition


@dataclass(frozen=True, eq=False)
class State:
    """
    A state given by its density operator w.

    Build validated instances with `app.services.states.state_from_density`;
    direct construction skips the positivity/trace checks.
    """

    density: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "density", frozen_matrix(self.density))

    @property
    def dim(self) -> int:
        return int(self.density.shape[0])


@dataclass(frozen=True, eq=False)
class Observable:
    """
    Hermitian operator A together with its spectral decomposition.
    """

    operator: np.ndarray
    spectrum: SpectralDecomposition

    def __post_init__(self) -> None:
        object.__setattr__(self, "operator", frozen_matrix(self.operator))

    @property
    def dim(self) -> int:
        return int(self.operator.shape[0])


@dataclass(frozen=True)
class Interval:
    """
    Real interval with independently open or closed ends.

    Unbounded ends use ±inf and are always treated as open.
    """

    lower: float
    upper: float
    closed_lower: bool = False
    closed_upper: bool = False

    def __post_init__(self) -> None:
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise ValueError("Interval bounds must not be NaN")
        if self.lower > self.upper:
            raise ValueError(f"Interval lower bound {self.lower} exceeds upper bound {self.upper}")
        if math.isinf(self.lower):
            object.__setattr__(self, "closed_lower", False)
        if math.isinf(self.upper):
            object.__setattr__(self, "closed_upper", False)

    @property
    def empty(self) -> bool:
        if self.lower < self.upper:
            return False
        return not (self.closed_lower and self.closed_upper)

    def contains(self, value: float) -> bool:
        if value < self.lower or value > self.upper:
            return False
        if value == self.lower and not self.closed_lower:
            return False
        if value == self.upper and not self.closed_upper:
            return False
        return True


def _disjoint_and_ordered(left: Interval, right: Interval) -> bool:
    if left.upper < right.lower:
        return True
    if left.upper == right.lower:
        return not (left.closed_upper and right.closed_lower)
    return False


@dataclass(frozen=True)
class BorelSet:
    """
    Finite union of pairwise disjoint intervals, sorted by lower bound.
    """

    intervals: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        intervals = tuple(i for i in self.intervals if not i.empty)
        for left, right in zip(intervals, intervals[1:]):
            if not _disjoint_and_ordered(left, right):
                raise ValueError("BorelSet intervals must be pairwise disjoint and sorted")
        object.__setattr__(self, "intervals", intervals)

    def contains(self, value: float) -> bool:
        return any(interval.contains(value) for interval in self.intervals)
