"""
app/interchange/__init__.py

JSON interchange for engine values (see `serialization` for the schemas).
"""

from __future__ import annotations

from .serialization import (
    canonical,
    decode_ks_instance,
    decode_lattice,
    decode_matrix,
    decode_mesh,
    decode_operator,
    decode_valuation,
    decode_vector,
    dumps_canonical,
    encode_assertion,
    encode_classical_limit,
    encode_colorability,
    encode_eval_outcome,
    encode_condition_report,
    encode_ks_instance,
    encode_lattice,
    encode_matrix,
    encode_mesh,
    encode_operator,
    encode_paradox,
    encode_projection,
    encode_realization,
    encode_scenario_result,
    encode_spectral,
    encode_tautology,
    encode_state,
    encode_vector,
    round_float,
)

__all__ = [
    "round_float",
    "canonical",
    "dumps_canonical",
    "encode_matrix",
    "decode_matrix",
    "encode_vector",
    "decode_vector",
    "encode_state",
    "encode_operator",
    "decode_operator",
    "encode_projection",
    "encode_spectral",
    "encode_ks_instance",
    "decode_ks_instance",
    "encode_colorability",
    "encode_eval_outcome",
    "encode_tautology",
    "encode_paradox",
    "encode_condition_report",
    "encode_lattice",
    "decode_lattice",
    "encode_mesh",
    "decode_mesh",
    "encode_realization",
    "encode_assertion",
    "encode_classical_limit",
    "decode_valuation",
    "encode_scenario_result",
]
