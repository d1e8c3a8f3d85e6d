"""
app/services/qlogic/fixtures.py

Prebuilt formulas and quantum substitutions.

- excluded_middle_formula          x | !x
- four_dim_ks_formula/valuation    the two-spin-½ proposition that is
                                   classically valid but evaluates to 0
- singlet_correlation_fixtures     perfect anticorrelation of the singlet
                                   along z and along x
- ks_valuation                     spin-1 atoms for ks_proposition variables
"""

from __future__ import annotations

from typing import NamedTuple

from ...models import Formula, KSInstance, Projection, Valuation
from ...seed.defaults import DOWN_X, DOWN_Z, UP_X, UP_Z
from ..boolean_complex import direction_classes, spin1_atom
from ..combine import embed_left, embed_right
from .classical import ks_variable
from .syntax import parse_formula


class LogicFixture(NamedTuple):
    name: str
    formula: Formula
    valuation: Valuation


def excluded_middle_formula() -> Formula:
    return parse_formula("x | !x")


def four_dim_ks_formula() -> Formula:
    return parse_formula("((x <-> y) <-> (z <-> w)) <-> ((x <-> z) <-> (y <-> w))")


def four_dim_ks_valuation() -> dict[str, Projection]:
    """
    x: s_z ⊗ I = ½,  y: I ⊗ s_z = ½,  w: s_x ⊗ I = ½,  z: I ⊗ s_x = ½.

    Every connective then acts on commuting operands; the two sides of the
    outer biconditional come out as complementary projections, so the whole
    formula evaluates to 0.
    """
    up_z, up_x = Projection.onto(UP_Z), Projection.onto(UP_X)
    return {
        "x": embed_left(up_z, 2),
        "y": embed_right(up_z, 2),
        "w": embed_left(up_x, 2),
        "z": embed_right(up_x, 2),
    }


def singlet_correlation_fixtures() -> list[LogicFixture]:
    """
    (s_n ⊗ I = ½) <-> (I ⊗ s_n = −½) for n = z and n = x.

    Both evaluate to projections containing the singlet.
    """
    fixtures = []
    for axis, up, down in (("z", UP_Z, DOWN_Z), ("x", UP_X, DOWN_X)):
        valuation = {
            "a": embed_left(Projection.onto(up), 2),
            "b": embed_right(Projection.onto(down), 2),
        }
        fixtures.append(LogicFixture(f"singlet_{axis}", parse_formula("a <-> b"), valuation))
    return fixtures


def ks_valuation(instance: KSInstance) -> dict[str, Projection]:
    """
    d<class> ↦ projection onto the S_n = 0 eigenvector of that class's
    first direction.
    """
    classes = direction_classes(instance)
    valuation: dict[str, Projection] = {}
    for index, class_id in enumerate(classes):
        name = ks_variable(class_id)
        if name not in valuation:
            valuation[name] = spin1_atom(instance.directions[index])
    return valuation
