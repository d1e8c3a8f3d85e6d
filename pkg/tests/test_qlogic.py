import numpy as np
import pytest

from app.models import And, Iff, KSInstance, Not, Or, Projection, Var, Xor
from app.seed import SINGLET, UP_X, UP_Z, load_bundled_ks_instance
from app.services.boolean_complex import brute_force_colorings, ks_colorable
from app.services.linalg import inf_norm, random_commuting_family, random_projection
from app.services.qlogic import (
    check_paradox,
    classical_eval,
    classical_satisfiable,
    classical_tautology,
    count_models,
    eval_quantum,
    exactly_one,
    excluded_middle_formula,
    find_model,
    format_formula,
    four_dim_ks_formula,
    four_dim_ks_valuation,
    ks_proposition,
    ks_valuation,
    parse_formula,
    singlet_correlation_fixtures,
    solver_tautology,
    tautology_check,
    variables,
)
from app.services.shared.errors import (
    BadShapeError,
    DimMismatchError,
    FormulaSyntaxError,
    TooManyVariablesError,
    UnboundVariableError,
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x", Var("x")),
        ("!x", Not(Var("x"))),
        ("x | !x", Or(Var("x"), Not(Var("x")))),
        ("a & b | c", Or(And(Var("a"), Var("b")), Var("c"))),
        ("a ^ b & c", Xor(Var("a"), And(Var("b"), Var("c")))),
        ("a | b ^ c", Or(Var("a"), Xor(Var("b"), Var("c")))),
        ("a <-> b <-> c", Iff(Var("a"), Iff(Var("b"), Var("c")))),
        ("!(a & b)", Not(And(Var("a"), Var("b")))),
        ("  x1&x2 ", And(Var("x1"), Var("x2"))),
    ],
)
def test_parse_formula(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize(
    "text,column",
    [
        ("a & ", 5),
        ("a & )", 5),
        ("(a | b", 7),
        ("a b", 3),
        ("a + b", 3),
        ("", 1),
    ],
)
def test_syntax_errors_report_their_column(text, column):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.details["column"] == column


def test_format_is_fully_parenthesized():
    formula = parse_formula("a & b | !c <-> d")
    assert format_formula(formula) == "(((a & b) | !c) <-> d)"
    assert parse_formula(format_formula(formula)) == formula


def test_variables_are_sorted_and_unique():
    assert variables(parse_formula("z & a | z ^ m")) == ("a", "m", "z")


def test_classical_eval():
    formula = parse_formula("a ^ b")
    assert classical_eval(formula, {"a": True, "b": False})
    assert not classical_eval(formula, {"a": True, "b": True})
    with pytest.raises(UnboundVariableError) as info:
        classical_eval(formula, {"a": True})
    assert info.value.details["missing"] == ["b"]


def test_excluded_middle_is_a_tautology():
    result = classical_tautology(excluded_middle_formula())
    assert result.tautology
    assert result.countermodel is None
    assert result.assignments_checked == 2


def test_contradiction_has_a_countermodel():
    result = classical_tautology(parse_formula("x & !x"))
    assert not result.tautology
    assert result.countermodel == {"x": False}
    assert result.assignments_checked == 1


def test_four_variable_formula_is_a_tautology():
    result = classical_tautology(four_dim_ks_formula())
    assert result.tautology
    assert result.assignments_checked == 16


def test_tautology_variable_cap(app):
    app.config["TAUTOLOGY_VARIABLE_CAP"] = 3
    wide = parse_formula("a | b | c | d | !a")
    with pytest.raises(TooManyVariablesError):
        classical_tautology(wide)
    result = tautology_check(wide)
    assert result.tautology
    assert result.assignments_checked == 0


def test_solver_agrees_with_enumeration():
    for text in ["x | !x", "x & !x", "a | b", "a ^ b ^ a <-> b"]:
        formula = parse_formula(text)
        assert solver_tautology(formula).tautology == classical_tautology(formula).tautology


def test_models_and_satisfiability():
    assert count_models(parse_formula("a | b")) == 3
    assert not classical_satisfiable(parse_formula("a & !a"))
    model = find_model(parse_formula("a & !b"))
    assert model == {"a": True, "b": False}


def test_exactly_one_truth_table():
    formula = exactly_one(Var("x"), Var("y"), Var("z"))
    for bits in range(8):
        assignment = {name: bool(bits >> i & 1) for i, name in enumerate("xyz")}
        assert classical_eval(formula, assignment) == (sum(assignment.values()) == 1)


def test_quantum_excluded_middle_is_identity(rng):
    x = Projection.onto(rng.normal(size=3) + 1j * rng.normal(size=3))
    outcome = eval_quantum(excluded_middle_formula(), {"x": x})
    assert outcome.defined
    assert inf_norm(outcome.value.matrix - np.eye(3)) < 1e-12


def test_non_commuting_conjunction_is_undefined():
    formula = parse_formula("x & y")
    outcome = eval_quantum(formula, {"x": Projection.onto(UP_Z), "y": Projection.onto(UP_X)})
    assert not outcome.defined
    assert outcome.offending == (Var("x"), Var("y"))
    assert outcome.commutator_norm == pytest.approx(0.5)


def test_quantum_evaluation_checks_its_valuation():
    with pytest.raises(UnboundVariableError):
        eval_quantum(parse_formula("x & y"), {"x": Projection.identity(2)})
    with pytest.raises(DimMismatchError):
        eval_quantum(parse_formula("x & y"), {"x": Projection.identity(2), "y": Projection.identity(3)})


def test_commuting_connectives_match_lattice_operations():
    x = Projection(np.diag([1.0, 1.0, 0.0, 0.0]))
    y = Projection(np.diag([1.0, 0.0, 1.0, 0.0]))
    expected = {
        "x & y": [1, 0, 0, 0],
        "x | y": [1, 1, 1, 0],
        "x ^ y": [0, 1, 1, 0],
        "x <-> y": [1, 0, 0, 1],
        "!x": [0, 0, 1, 1],
    }
    for text, diagonal in expected.items():
        outcome = eval_quantum(parse_formula(text), {"x": x, "y": y})
        assert inf_norm(outcome.value.matrix - np.diag(diagonal)) < 1e-12


def test_double_negation_is_the_identity(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 6))
        x, y = random_commuting_family(dim, 2, rng)
        valuation = {"x": x, "y": y, "z": random_projection(dim, rng)}
        for text in ("x", "z", "x & y", "x ^ y"):
            once = eval_quantum(parse_formula(text), valuation)
            twice = eval_quantum(Not(Not(parse_formula(text))), valuation)
            assert twice.defined
            assert inf_norm(twice.value.matrix - once.value.matrix) < 1e-14
    undefined = eval_quantum(parse_formula("!!(x & y)"), {"x": Projection.onto(UP_Z), "y": Projection.onto(UP_X)})
    assert not undefined.defined


def test_de_morgan_duality_for_commuting_operands(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 6))
        x, y = random_commuting_family(dim, 2, rng)
        valuation = {"x": x, "y": y}
        pairs = [("!(x & y)", "!x | !y"), ("!(x | y)", "!x & !y")]
        for left, right in pairs:
            lhs = eval_quantum(parse_formula(left), valuation).value.matrix
            rhs = eval_quantum(parse_formula(right), valuation).value.matrix
            assert inf_norm(lhs - rhs) < 1e-12


def test_four_dimensional_paradox():
    report = check_paradox(four_dim_ks_formula(), four_dim_ks_valuation())
    assert report.tautology.tautology
    assert report.outcome.defined
    assert report.distance_from_identity > 0.5
    assert report.paradox


def test_excluded_middle_is_no_paradox():
    report = check_paradox(excluded_middle_formula(), {"x": Projection.onto(UP_X)})
    assert report.tautology.tautology
    assert not report.differs_from_identity
    assert not report.paradox


def test_singlet_correlations_contain_the_singlet():
    singlet = Projection.onto(SINGLET).matrix
    fixtures = singlet_correlation_fixtures()
    assert [f.name for f in fixtures] == ["singlet_z", "singlet_x"]
    for fixture in fixtures:
        outcome = eval_quantum(fixture.formula, fixture.valuation)
        assert outcome.defined
        assert inf_norm(outcome.value.matrix @ singlet - singlet) < 1e-12


def test_ks_proposition_negation_counts_colorings():
    directions = np.vstack([np.eye(3), [[0.0, np.sqrt(0.5), np.sqrt(0.5)], [0.0, np.sqrt(0.5), -np.sqrt(0.5)]]])
    shared_axis = KSInstance(directions=directions, triples=((0, 1, 2), (0, 3, 4)), name="shared")
    formula = ks_proposition(shared_axis)
    assert variables(formula) == ("d0", "d1", "d2", "d3", "d4")
    assert count_models(Not(formula)) == len(brute_force_colorings(shared_axis))


def test_ks_proposition_matches_colorability_search():
    instance = load_bundled_ks_instance()
    formula = ks_proposition(instance)
    assert not classical_satisfiable(Not(formula))
    assert ks_colorable(instance).status == "UNSAT"


def test_bundled_instance_is_a_quantum_paradox():
    instance = load_bundled_ks_instance()
    report = check_paradox(ks_proposition(instance), ks_valuation(instance))
    assert report.tautology.tautology
    assert report.tautology.assignments_checked == 0
    assert report.outcome.defined
    assert report.outcome.value.rank == 0
    assert report.paradox


def test_ks_proposition_needs_triples():
    with pytest.raises(BadShapeError):
        ks_proposition(KSInstance(directions=np.eye(3), triples=(), name="bare"))
