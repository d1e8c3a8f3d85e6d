"""
app/services/dynamics/classical_limit.py

Averaged observables over n non-interacting replicas.

PURPOSE
-------
For a one-particle observable A the n-replica average is

    Ā = (A⊗I⊗…⊗I + … + I⊗…⊗I⊗A) / n

In a product state Φ = φ⊗…⊗φ its variance is (ΔA)²/n, and the uncertainty of
i[Ā, B̄] decays to zero, so the averaged observables commute in the limit.

IMPORTANT
---------
The report measures the decay exponent of Δ[Ā, B̄] by a log-log fit and
stores it; it does not assume a rate. For product states the measured value
is about −1.5.

The variance scaling and the decay are recorded as checks on the report;
failed checks are logged as CLASSICAL_LIMIT_CHECK_FAILED.

Operators are applied to Φ site by site through tensor reshapes, so the
scaling study never materializes the dⁿ × dⁿ matrices. Only
`averaged_observable` (which returns a diagonalized Observable) builds the
full operator.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Sequence

import numpy as np
from scipy.stats import linregress

from ...models import ClassicalLimitReport, ClassicalLimitRow, Observable, Tolerance, default_tolerance
from ...reports.instrumentation import log_event
from ..linalg import kron_all
from ..shared.errors import BadShapeError, DimCapExceededError, DimMismatchError
from ..shared.guards import require_hermitian, require_unit_vector
from ..shared.operation_results import AssertionLog
from ..shared.runtime_config import setting
from ..states import observable


def _check_cap(dim: int, n: int) -> int:
    if n < 1:
        raise BadShapeError(f"Replica count must be positive, got {n}", n=n)
    cap = int(setting("TENSOR_DIM_CAP", 4096))
    total = dim**n
    if total > cap:
        raise DimCapExceededError(
            f"{dim}^{n} = {total} exceeds the tensor dimension cap of {cap}",
            dim=dim,
            n=n,
            cap=cap,
        )
    return total


def averaged_operator(a: Any, n: int, tol: Tolerance | float | None = None) -> np.ndarray:
    """
    The dense n-site average Ā.

    RAISES
    ------
    NotHermitianError, DimCapExceededError
    """
    matrix = require_hermitian(a, default_tolerance(tol).eps)
    dim = matrix.shape[0]
    total = _check_cap(dim, n)
    eye = np.eye(dim, dtype=np.complex128)
    result = np.zeros((total, total), dtype=np.complex128)
    for site in range(n):
        result += kron_all([matrix if index == site else eye for index in range(n)])
    return result / n


def averaged_observable(a: Any, n: int, tol: Tolerance | float | None = None) -> Observable:
    """
    Ā as an Observable.

    EXAMPLES
    --------
    n = 1                    -> a itself
    s_z (spin-1/2), n = 3    -> eigenvalues {−1/2, −1/6, 1/6, 1/2}
    """
    return observable(averaged_operator(a, n, tol), tol)


def _apply_averaged(a: np.ndarray, vector: np.ndarray, dim: int, n: int) -> np.ndarray:
    """
    Ā·vector for vector in (C^dim)^⊗n without building Ā.
    """
    tensor = vector.reshape((dim,) * n)
    result = np.zeros_like(tensor)
    for site in range(n):
        moved = np.tensordot(a, tensor, axes=([1], [site]))
        result += np.moveaxis(moved, 0, site)
    return result.reshape(-1) / n


def _moments(values: np.ndarray, state: np.ndarray) -> float:
    mean = float(np.vdot(state, values).real)
    return max(float(np.vdot(values, values).real) - mean * mean, 0.0)


def decay_exponent(ns: Sequence[int], values: Sequence[float]) -> float:
    """
    Least-squares slope of log(values) against log(ns).

    RAISES
    ------
    BadShapeError
        Fewer than two points, or non-positive inputs.
    """
    xs = np.asarray(ns, dtype=np.float64)
    ys = np.asarray(values, dtype=np.float64)
    if xs.shape != ys.shape or xs.size < 2 or np.any(xs <= 0) or np.any(ys <= 0):
        raise BadShapeError("decay_exponent needs at least two strictly positive points")
    return float(linregress(np.log(xs), np.log(ys)).slope)


def classical_limit_report(
    a: Any,
    b: Any,
    phi: Any,
    n_values: Sequence[int],
    tol: Tolerance | float | None = None,
) -> ClassicalLimitReport:
    """
    (ΔĀ)² and Δ(i[Ā, B̄]) in Φ = φ^⊗n for each n.

    PARAMETERS
    ----------
    a, b:
        Hermitian one-particle operators of equal dimension d.
    phi:
        One-particle unit vector of length d.
    n_values:
        Replica counts; each dⁿ must respect TENSOR_DIM_CAP.

    RETURNS
    -------
    ClassicalLimitReport
        Rows in input order plus the fitted exponent and scaling flags.

    EXAMPLES
    --------
    a = s_z, b = s_x, φ = φ⁺_x, n = 1..6   -> var_abar = 1/(4n), exponent ≈ −1.5
    commuting a, b                         -> delta_comm = 0 for every n
    """
    scale = default_tolerance(tol)
    eps = scale.eps
    left = require_hermitian(a, eps)
    right = require_hermitian(b, eps)
    if left.shape != right.shape:
        raise DimMismatchError("Observables must share one dimension", left=left.shape[0], right=right.shape[0])
    dim = left.shape[0]
    single = require_unit_vector(phi, eps)
    if single.shape[0] != dim:
        raise DimMismatchError(
            "State vector length differs from the observable dimension",
            state=single.shape[0],
            observable=dim,
        )

    rows = []
    for n in n_values:
        _check_cap(dim, int(n))
        product = kron_all([single.reshape(-1, 1)] * int(n)).reshape(-1)
        a_phi = _apply_averaged(left, product, dim, int(n))
        b_phi = _apply_averaged(right, product, dim, int(n))
        comm_phi = 1j * (_apply_averaged(left, b_phi, dim, int(n)) - _apply_averaged(right, a_phi, dim, int(n)))
        rows.append(
            ClassicalLimitRow(
                n=int(n),
                var_abar=_moments(a_phi, product),
                delta_comm=math.sqrt(_moments(comm_phi, product)),
            )
        )

    base = _moments(left @ single, single)
    bound = scale.scaled(10).eps
    checks = AssertionLog("classical-limit")
    variance_ok = all(
        [checks.close_to(f"(ΔĀ)²·n equals (ΔA)² at n = {row.n}", base, row.var_abar * row.n, bound) for row in rows]
    )

    ordered = sorted(rows, key=lambda row: row.n)
    if ordered and ordered[0].delta_comm <= eps:
        monotone = all(row.delta_comm <= eps for row in ordered)
    else:
        monotone = all(later.delta_comm < earlier.delta_comm for earlier, later in zip(ordered, ordered[1:]))
    checks.check(
        "Δ(i[Ā, B̄]) decreases with n",
        "strictly decreasing or identically zero",
        [row.delta_comm for row in ordered],
        monotone,
    )
    failures = [check.description for check in checks.assertions if not check.passed]
    if failures:
        log_event(
            "CLASSICAL_LIMIT_CHECK_FAILED",
            {"failed": failures, "n_values": [row.n for row in ordered]},
            logging.WARNING,
        )

    positive = [row for row in ordered if row.delta_comm > eps]
    exponent = None
    if len({row.n for row in positive}) >= 2:
        exponent = decay_exponent([row.n for row in positive], [row.delta_comm for row in positive])

    final_ratio = None
    if ordered and ordered[0].delta_comm > eps:
        final_ratio = ordered[-1].delta_comm / ordered[0].delta_comm

    return ClassicalLimitReport(
        rows=tuple(rows),
        exponent=exponent,
        variance_scaling_ok=variance_ok,
        monotone_decreasing=monotone,
        final_ratio=final_ratio,
        checks=tuple(checks.assertions),
    )
