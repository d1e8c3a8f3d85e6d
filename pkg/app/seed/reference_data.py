"""
app/seed/reference_data.py

Loaders for bundled reference data.

PURPOSE
-------
This module contains the file-facing logic that turns bundled JSON documents
into engine values. Constant operators stay in `app.seed.defaults`.

LOADED DATA
-----------
- Kochen-Specker instances (directions + orthogonal triples)

IMPORTANT
---------
Loaders validate the instance before returning it, so a corrupted data file
fails at load time rather than deep inside a search.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..interchange.serialization import decode_ks_instance
from ..models import KSInstance
from ..reports.instrumentation import log_event
from ..services.shared.errors import BadShapeError
from ..services.shared.runtime_config import setting
from .defaults import BUNDLED_KS_INSTANCE


def load_ks_instance(path: str | Path) -> KSInstance:
    """
    Read and validate a KS instance from a JSON file.

    RAISES
    ------
    BadShapeError
        If the file is not valid JSON or does not follow the instance schema.
    NotOrthogonalFrameError
        If a listed triple is not pairwise orthogonal.
    """
    source = Path(path)
    try:
        document = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise BadShapeError(f"{source.name} is not valid JSON: {exc.msg}", path=str(source)) from exc

    from ..services.boolean_complex.kochen_specker import validate_instance

    instance = decode_ks_instance(document)
    if not instance.name:
        instance = KSInstance(directions=instance.directions, triples=instance.triples, name=source.stem)
    validate_instance(instance)
    log_event(
        "KS_INSTANCE_LOADED",
        {"name": instance.name, "directions": instance.direction_count, "triples": len(instance.triples)},
    )
    return instance


def bundled_instance_path() -> Path:
    return Path(setting("SEED_DATA_DIR", Path(__file__).parent / "data")) / BUNDLED_KS_INSTANCE


def load_bundled_ks_instance() -> KSInstance:
    """
    The bundled unsatisfiable instance (33 core rays completed to 57
    directions and 40 orthogonal triples).
    """
    return load_ks_instance(bundled_instance_path())
