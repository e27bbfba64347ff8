from fractions import Fraction
from types import SimpleNamespace

import pytest
import sympy

from octajones.diagram import Diagram
from octajones.errors import InsufficientData
from octajones.geometry.curve import solve_grid, unit_circle
from octajones.geometry.solver import SolverOptions
from octajones.quantum.recursion import (PRIMES, SHIFT_E, UPPER_Q, WINDOWS, RecursionOperator,
                                         aj_check, content_free, control_polynomial, e_part,
                                         escalation_schedule, guess_recursion,
                                         qfact_annihilators, qfact_values,
                                         rational_reconstruction, required_values,
                                         search_recursion, specialize_q1, verify_recursion)
from octajones.quantum.state_sum import colored_jones_table

# (1 - qQ) E - (1 - q^2 Q)
UNKNOT_OPERATOR = RecursionOperator(({(0, 0): -1, (2, 1): 1}, {(0, 0): 1, (1, 1): -1}))


def _values(diagram: Diagram, n_max: int) -> list:
    table = colored_jones_table(diagram, n_max)
    return [table[n] for n in range(n_max + 1)]


def _reciprocal_factorials(q: Fraction, n_max: int) -> list:
    values, current = [], Fraction(1)
    for n in range(n_max + 1):
        values.append(current)
        current /= 1 - q ** (n + 1)
    return values


class TestOperators:
    def test_factorial_annihilator(self) -> None:
        factorial, _ = qfact_annihilators()
        assert verify_recursion(factorial, qfact_values(15))

    def test_reciprocal_annihilator(self) -> None:
        _, reciprocal = qfact_annihilators()
        q = Fraction(2, 5)
        assert verify_recursion(reciprocal, _reciprocal_factorials(q, 15), q=q)

    def test_perturbed_operator_fails(self) -> None:
        factorial, _ = qfact_annihilators()
        assert not verify_recursion(factorial.perturbed(0, (0, 0)), qfact_values(15))
        assert not verify_recursion(UNKNOT_OPERATOR.perturbed(1, (1, 1), delta=2),
                                    qfact_values(10))

    def test_zero_operator_never_verifies(self) -> None:
        assert not verify_recursion(RecursionOperator(({},)), qfact_values(5))

    def test_apply(self, unknot: Diagram) -> None:
        values = _values(unknot, 6)
        for n in range(6):
            assert not UNKNOT_OPERATOR.apply(values, n)

    def test_content_free(self) -> None:
        doubled = RecursionOperator(tuple({key: -2 * value for key, value in c.items()}
                                          for c in UNKNOT_OPERATOR.coefficients))
        assert content_free(doubled) == UNKNOT_OPERATOR

    def test_json(self) -> None:
        data = UNKNOT_OPERATOR.to_json()
        assert data["order"] == 1
        assert RecursionOperator.from_json(data) == UNKNOT_OPERATOR

    def test_text(self) -> None:
        expr = sympy.sympify(str(UNKNOT_OPERATOR),
                             locals={"q": sympy.Symbol("q"), "Q": UPPER_Q, "E": SHIFT_E})
        assert sympy.expand(expr - UNKNOT_OPERATOR.to_sympy()) == 0


class TestReconstruction:
    @pytest.mark.parametrize("fraction", [Fraction(3, 7), Fraction(-5, 11), Fraction(12)])
    def test_rational_reconstruction(self, fraction: Fraction) -> None:
        prime = PRIMES[0]
        value = fraction.numerator * pow(fraction.denominator, -1, prime) % prime
        assert rational_reconstruction(value, prime) == fraction

    def test_required_values(self) -> None:
        assert required_values((1, 1, 2)) == 25
        assert required_values((3, 8, 20), margin=2) == 1478
        assert required_values((1, 1, 2), rule=WINDOWS) == 9
        assert required_values((3, 8, 20), margin=2, rule=WINDOWS) == 15
        with pytest.raises(ValueError):
            required_values((1, 1, 2), rule="guess")


class TestGuessing:
    def test_unknot(self, unknot: Diagram) -> None:
        assert guess_recursion(_values(unknot, 24), 1, 1, 2) == UNKNOT_OPERATOR
        assert guess_recursion(_values(unknot, 12), 1, 1, 2, rule=WINDOWS) == UNKNOT_OPERATOR

    def test_q_factorials(self) -> None:
        op = guess_recursion(qfact_values(16), 1, 2, 2, rule=WINDOWS)
        assert op is not None
        assert op.order == 1
        assert verify_recursion(op, qfact_values(25))

    def test_trivial_nullspace(self, trefoil: Diagram) -> None:
        assert guess_recursion(_values(trefoil, 10), 1, 1, 1, rule=WINDOWS) is None

    def test_insufficient_data(self, unknot: Diagram) -> None:
        with pytest.raises(InsufficientData) as excinfo:
            guess_recursion(_values(unknot, 12), 1, 1, 2)
        assert excinfo.value.minimum == 25
        with pytest.raises(InsufficientData) as excinfo:
            guess_recursion(_values(unknot, 4), 1, 1, 2, rule=WINDOWS)
        assert excinfo.value.minimum == 9

    def test_schedule_order(self) -> None:
        assert escalation_schedule([1, 2], [1], [2, 4]) == [(1, 1, 2), (2, 1, 2), (1, 1, 4),
                                                             (2, 1, 4)]

    def test_search(self, unknot: Diagram) -> None:
        op, bounds = search_recursion(_values(unknot, 12), [(0, 1, 1), (3, 9, 9), (1, 1, 2)],
                                      rule=WINDOWS)
        assert op == UNKNOT_OPERATOR
        assert bounds == (1, 1, 2)

    @pytest.mark.slow
    def test_trefoil(self, trefoil: Diagram) -> None:
        values = _values(trefoil, 30)
        op = guess_recursion(values[:21], 2, 5, 10, rule=WINDOWS)
        assert op is not None
        assert verify_recursion(op, values)


class TestSpecialization:
    def test_unknot_at_q1(self) -> None:
        poly = specialize_q1(UNKNOT_OPERATOR)
        assert sympy.expand(poly.as_expr() - (1 - UPPER_Q) * (SHIFT_E - 1)) == 0
        assert sympy.expand(e_part(poly).as_expr() - (SHIFT_E - 1)) == 0

    def test_control_polynomial(self) -> None:
        poly = sympy.Poly(SHIFT_E ** 2 - UPPER_Q ** 3 * SHIFT_E + 1, UPPER_Q, SHIFT_E)
        control = control_polynomial(poly, seed=3)
        assert sorted(control.monoms()) == sorted(poly.monoms())
        assert control == control_polynomial(poly, seed=3)

    def test_aj_check_picks_sign(self, trefoil: Diagram) -> None:
        poly = sympy.Poly(SHIFT_E - UPPER_Q, UPPER_Q, SHIFT_E)
        solution = SimpleNamespace(w_mu=2 + 0j, s_value=-2 + 0j)
        report = aj_check(trefoil, poly, [solution])
        assert report.max_residual == pytest.approx(0.0)
        assert report.signs == [-1]

    def test_aj_check_without_solutions(self, trefoil: Diagram) -> None:
        poly = sympy.Poly(SHIFT_E - 1, UPPER_Q, SHIFT_E)
        assert aj_check(trefoil, poly, []).max_residual == float("inf")


@pytest.mark.slow
@pytest.mark.parametrize("knot,n_max,bounds", [("trefoil", 30, (2, 5, 10)),
                                               ("figure_eight", 20, (3, 8, 20))])
def test_aj_on_gluing_solutions(request: pytest.FixtureRequest, knot: str, n_max: int,
                                bounds: tuple) -> None:
    diagram = request.getfixturevalue(knot)
    op = guess_recursion(_values(diagram, n_max), *bounds, rule=WINDOWS)
    assert op is not None
    poly = e_part(specialize_q1(op))
    solutions = [solution for _, found in solve_grid(diagram, unit_circle(20), SolverOptions())
                 for solution in found]
    assert len(solutions) >= 20
    assert aj_check(diagram, poly, solutions).max_residual < 1e-6
    control = aj_check(diagram, control_polynomial(poly), solutions)
    assert control.max_residual > 1e-2
