"""
app/services/__init__.py

Canonical services package.

PURPOSE
-------
This package groups the engine's operations by domain. Every public operation
is a pure function over immutable values from `app.models`.

PACKAGE GROUPS
--------------
- app.services.linalg            dense linear algebra substrate
- app.services.boolean_complex   Boolean algebras, σ-complexes, KS search
- app.services.states            states, observables, Borel sets
- app.services.conditioning      Lüders rule, Law of Alternatives
- app.services.combine           Schmidt form, Γ lattice formulas
- app.services.dynamics          symmetries, evolution, classical limit
- app.services.reck              interferometer mesh compiler
- app.services.qlogic            formulas over projections
- app.services.shared            errors, guards, runtime config, results

IMPORTANT
---------
This file intentionally exports nothing.
Callers should import from the concrete package they need.
"""

from __future__ import annotations
