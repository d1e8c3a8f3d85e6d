"""
app/scenarios/two_slit.py

Two-slit interference on a ring of lattice sites.

MODEL
-----
- N sites with periodic boundary, H = I − ½(S + S⁻¹) for the unit shift S.
- Two slit regions of `slit_width` sites, centred `separation` sites apart
  around the middle of the ring; y₁, y₂ are the diagonal projections onto
  them.
- The initial wave is uniform over both slits with phase e^{ik·site}.
- The detector screen is reached after evolution time t = `distance`. The
  detector property at site s is x_s = U†|s⟩⟨s|U (pulled back to t = 0), so
  the Law of Alternatives is evaluated on the initial state.

ASSERTIONS
----------
- t = 0, detector on slit 1: interference term 0.
- After evolution, at the site with the largest |interference|: the term is
  nonzero and classical + interference equals the direct conditional.
- Registered slits (conditioning on {y₁, y₂, I − y₁ − y₂}) remove the term.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ..models import Projection, Tolerance, default_tolerance
from ..services.conditioning import condition_on_algebra, law_of_alternatives
from ..services.dynamics import evolution_spec, evolution_unitary
from ..services.shared.errors import BadGeometryError
from ..services.shared.operation_results import ScenarioResult
from ..services.shared.runtime_config import setting
from ..services.states import prob, pure_state
from .runner import finish, start

DEFAULT_SEPARATION = 16
DEFAULT_WAVENUMBER = 0.0
DEFAULT_DISTANCE = 24.0
DEFAULT_SLIT_WIDTH = 4
INTERFERENCE_FLOOR = 1e-3
ZERO_INTERFERENCE_ATOL = 1e-12


class SlitGeometry(NamedTuple):
    sites: int
    first: range
    second: range


def slit_geometry(sites: int, separation: int, slit_width: int) -> SlitGeometry:
    """
    Site ranges of the two slits.

    RAISES
    ------
    BadGeometryError
        Non-positive sizes, overlapping slits, or slits that leave the ring.

    EXAMPLES
    --------
    slit_geometry(256, 16, 4)   -> slits 118..121 and 134..137
    slit_geometry(256, 2, 4)    -> BadGeometryError (overlap)
    """
    if sites <= 0 or separation <= 0 or slit_width <= 0:
        raise BadGeometryError(
            "Sites, separation and slit width must be positive",
            sites=sites,
            separation=separation,
            slit_width=slit_width,
        )
    if separation < slit_width:
        raise BadGeometryError(
            f"Slits overlap: separation {separation} < width {slit_width}",
            separation=separation,
            slit_width=slit_width,
        )
    centre = sites // 2
    starts = (centre - separation // 2 - slit_width // 2, centre - separation // 2 - slit_width // 2 + separation)
    if starts[0] < 0 or starts[1] + slit_width > sites:
        raise BadGeometryError(
            f"Slits do not fit on {sites} sites",
            sites=sites,
            separation=separation,
            slit_width=slit_width,
        )
    return SlitGeometry(sites, range(starts[0], starts[0] + slit_width), range(starts[1], starts[1] + slit_width))


def _region(sites: int, region: range) -> Projection:
    diagonal = np.zeros(sites)
    diagonal[list(region)] = 1.0
    return Projection(np.diag(diagonal).astype(np.complex128))


def ring_hamiltonian(sites: int) -> np.ndarray:
    shift = np.roll(np.eye(sites), 1, axis=0)
    return np.eye(sites) - 0.5 * (shift + shift.T)


def initial_wave(geometry: SlitGeometry, wavenumber: float) -> np.ndarray:
    psi = np.zeros(geometry.sites, dtype=np.complex128)
    occupied = list(geometry.first) + list(geometry.second)
    psi[occupied] = np.exp(1j * wavenumber * np.asarray(occupied, dtype=np.float64))
    return psi / np.linalg.norm(psi)


def scenario_two_slit(
    separation: int = DEFAULT_SEPARATION,
    wavenumber: float = DEFAULT_WAVENUMBER,
    distance: float = DEFAULT_DISTANCE,
    slit_width: int = DEFAULT_SLIT_WIDTH,
    sites: int | None = None,
    tol: Tolerance | float | None = None,
) -> ScenarioResult:
    eps = default_tolerance(tol).eps
    sites = int(setting("TWO_SLIT_SITES", 256)) if sites is None else int(sites)
    if not (math.isfinite(distance) and distance > 0 and math.isfinite(wavenumber)):
        raise BadGeometryError(
            "Distance must be positive and wavenumber finite",
            distance=distance,
            wavenumber=wavenumber,
        )
    geometry = slit_geometry(sites, int(separation), int(slit_width))
    log, instrumentation = start("two-slit")

    instrumentation.start_stage("prepare")
    psi = initial_wave(geometry, wavenumber)
    state = pure_state(psi, tol)
    y1, y2 = _region(sites, geometry.first), _region(sites, geometry.second)

    at_screen = law_of_alternatives(state, y1, [y1, y2], tol)
    log.at_most("interference term is zero at t = 0 on slit 1", ZERO_INTERFERENCE_ATOL, abs(at_screen.interference_part))

    instrumentation.start_stage("evolve")
    with instrumentation.timed_detail("propagator", sites=sites):
        u = evolution_unitary(evolution_spec(ring_hamiltonian(sites), tol=tol), distance, tol)
    from_first = u @ (y1.matrix @ psi)
    from_second = u @ (y2.matrix @ psi)
    screen = np.abs(from_first + from_second) ** 2
    interference = 2 * np.real(from_first * np.conj(from_second))
    detector = int(np.argmax(np.abs(interference)))

    instrumentation.start_stage("alternatives")
    site = np.zeros(sites, dtype=np.complex128)
    site[detector] = 1.0
    x = Projection.onto(u.conj().T @ site)
    report = law_of_alternatives(state, x, [y1, y2], tol)
    log.at_least("interference term is nonzero after evolution", INTERFERENCE_FLOOR, abs(report.interference_part))
    log.at_most(
        "classical + interference equals the direct conditional",
        eps,
        abs(report.classical_part + report.interference_part - report.direct),
    )
    log.close_to("screen profile is normalized", 1.0, float(screen.sum()), eps)

    instrumentation.start_stage("registered")
    rest = Projection(np.eye(sites) - y1.matrix - y2.matrix)
    registered = condition_on_algebra(state, [y1, y2, rest], tol)
    registered_report = law_of_alternatives(registered, x, [y1, y2], tol)
    log.at_most(
        "registered slits: interference term vanishes",
        eps,
        abs(registered_report.interference_part),
    )
    log.close_to(
        "registered slits: detection probability equals the classical part",
        report.classical_part,
        prob(registered, x, tol),
        eps,
    )

    log.artifact("screen_profile", screen.tolist())
    log.artifact("interference_profile", interference.tolist())
    log.artifact("detector_region", [detector, detector + 1])
    log.artifact("slits", [[geometry.first.start, geometry.first.stop], [geometry.second.start, geometry.second.stop]])
    return finish(log, instrumentation)
