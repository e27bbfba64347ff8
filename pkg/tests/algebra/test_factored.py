from typing import Dict, List, Tuple
from fractions import Fraction
import cmath

from hypothesis import given, strategies as st
import numpy as np
import pytest

from octajones.algebra.factored import (FactoredRational, irreducible_factors, Monomial, product,
                                        shape_triple)
from octajones.errors import BranchAmbiguity, PoleHit, ZeroBinding, ZeroInverse

from tests.utils.helpers import relative_error

NAMES = ("x", "y", "z")
POINT = {"x": 0.7 + 0.4j, "y": -1.3 + 0.2j, "z": 0.1 - 1.7j}

monomials = st.builds(lambda constant, exps: Monomial(constant, dict(zip(NAMES, exps))),
                      st.sampled_from([1, -1, 2, Fraction(1, 3)]),
                      st.tuples(*[st.integers(-2, 2)] * 3))
binomials = st.builds(lambda exps: Monomial(1, dict(zip(NAMES, exps))),
                      st.tuples(*[st.integers(-2, 2)] * 3)).filter(lambda m: not m.is_constant())
rationals = st.builds(FactoredRational,
                      monomials, st.lists(st.tuples(binomials, st.integers(-2, 2)), max_size=3))


def rational_points(count: int = 50, seed: int = 0) -> List[Dict[str, Fraction]]:
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        numerators = rng.integers(2, 12, len(NAMES)) * rng.choice([-1, 1], len(NAMES))
        denominators = rng.integers(1, 8, len(NAMES))
        points.append({name: Fraction(int(n), int(d))
                       for name, n, d in zip(NAMES, numerators, denominators)})
    return points


RATIONAL_POINTS = rational_points()


def values_agree(a: FactoredRational, b: FactoredRational) -> bool:
    compared = 0
    for point in RATIONAL_POINTS:
        try:
            left, right = a.evaluate(point), b.evaluate(point)
        except PoleHit:
            continue
        if left != right:
            return False
        compared += 1
    return compared > 0


def split_pair(mono: Monomial, power: int, scale: int) -> Tuple[FactoredRational,
                                                                 FactoredRational]:
    """``1 - s^2 m^(2j)`` together with its product ``(1 - s m^j)(1 + s m^j)``."""
    root = (mono ** power).scale(scale)
    whole = FactoredRational.one_minus(root * root)
    return whole, FactoredRational.one_minus(root) * FactoredRational.one_minus(-root)


split_pairs = st.builds(split_pair, binomials, st.integers(1, 3), st.sampled_from([1, -1, 2, 3]))


class TestCanonicalForm:
    @given(rationals, rationals)
    def test_multiplication_commutes(self, a: FactoredRational, b: FactoredRational) -> None:
        assert a * b == b * a

    @given(rationals, rationals, rationals)
    def test_multiplication_associates(self, a: FactoredRational, b: FactoredRational,
                                       c: FactoredRational) -> None:
        assert (a * b) * c == a * (b * c)

    @given(rationals)
    def test_inverse(self, a: FactoredRational) -> None:
        assert (a * a.inverse()).is_one()

    @given(rationals, rationals)
    def test_canonical_form_respects_values(self, a: FactoredRational, b: FactoredRational
                                            ) -> None:
        try:
            expected = a.eval_complex(POINT) * b.eval_complex(POINT)
        except PoleHit:
            return
        assert relative_error((a * b).eval_complex(POINT), expected) < 1e-9

    @given(split_pairs, rationals)
    def test_split_binomials_compare_equal(self, pair: Tuple[FactoredRational, FactoredRational],
                                           scale: FactoredRational) -> None:
        whole, split = pair[0] * scale, pair[1] * scale
        assert whole == split
        assert hash(whole) == hash(split)
        assert values_agree(whole, split)

    @given(rationals, rationals)
    def test_equality_agrees_with_values(self, a: FactoredRational, b: FactoredRational
                                         ) -> None:
        assert (a == b) == values_agree(a, b)

    def test_difference_of_squares(self) -> None:
        w = Monomial.var("w")
        assert FactoredRational.one_minus(w * w) == (FactoredRational.one_minus(w)
                                                     * FactoredRational.one_minus(-w))
        half = Monomial.var("q", Fraction(1, 2))
        assert FactoredRational.one_minus(Monomial.var("q")) == (
            FactoredRational.one_minus(half) * FactoredRational.one_minus(-half))
        assert FactoredRational.one_minus(w * w) != FactoredRational.one_minus(w, 2)

    def test_cancelled_split_is_a_monomial(self) -> None:
        x = Monomial.var("x")
        ratio = FactoredRational(x, [(x * x, 1), (x, -1), (-x, -1)])
        assert ratio.is_monomial()
        assert ratio == FactoredRational.var("x")

    def test_irreducible_factors(self) -> None:
        root = Monomial.var("x", Fraction(1, 2))
        cube = irreducible_factors(Monomial.var("x", Fraction(3, 2)))
        assert set(cube) == {((root, (1, -1)), 1), ((root, (1, 1, 1)), 1)}
        assert set(irreducible_factors(Monomial.var("x"))) == {((root, (1, -1)), 1),
                                                              ((root, (1, 1)), 1)}
        assert {coefficients for (_, coefficients), _ in irreducible_factors(
            Monomial(4, {"x": 2}))} == {(1, 0, -2), (1, 0, 2)}
        assert irreducible_factors(Monomial(-3, {"x": 1, "y": -1})) == (
            ((Monomial(1, {"x": Fraction(1, 2), "y": Fraction(-1, 2)}), (1, 0, 3)), 1),)

    def test_orientation_of_binomials(self) -> None:
        x = Monomial.var("x")
        flipped = FactoredRational.one_minus(x.inverse())
        assert flipped == FactoredRational(-x.inverse(), [(x, 1)])
        assert flipped.factors == ((x, 1),)

    def test_constant_binomials_fold_into_the_lead(self) -> None:
        value = FactoredRational(Monomial.var("x"), [(Monomial(3), 2)])
        assert value.lead == Monomial(4, {"x": 1})
        assert value.is_monomial()

    def test_zero_binomial(self) -> None:
        assert FactoredRational.one_minus(Monomial()).is_zero()
        with pytest.raises(ZeroInverse):
            FactoredRational.one_minus(Monomial(), -1)

    def test_string_form(self) -> None:
        value = FactoredRational(Monomial(-1, {"x": Fraction(1, 2)}), [(Monomial.var("y"), -2)])
        assert str(value) == "-x^(1/2) * (1 - y)^-2"


class TestShapes:
    def test_product_of_shape_triple(self) -> None:
        z, z_prime, z_double_prime = shape_triple("z")
        assert z * z_prime * z_double_prime == FactoredRational.constant(-1)

    def test_triple_relations(self) -> None:
        z, z_prime, z_double_prime = shape_triple("z")
        assert z_prime == FactoredRational.one_minus(Monomial.var("z"), -1)
        assert z_double_prime == FactoredRational.one_minus(Monomial.var("z").inverse())

    def test_product_of_nothing(self) -> None:
        assert product([]).is_one()
        assert product([FactoredRational.var("x"), FactoredRational.zero()]).is_zero()


class TestEvaluation:
    def test_substitute(self) -> None:
        value = FactoredRational(Monomial.var("x", 2), [(Monomial(1, {"x": 1, "y": 1}), 1)])
        bound = value.substitute({"y": Monomial.var("x", -1)})
        assert bound.is_zero()
        half = FactoredRational.var("x", Fraction(1, 2)).substitute({"x": Monomial.var("y", 2)})
        assert half == FactoredRational.var("y")

    def test_substitute_zero(self) -> None:
        with pytest.raises(ZeroBinding):
            FactoredRational.var("x").substitute({"x": Monomial(0)})

    def test_exact_evaluation(self) -> None:
        value = FactoredRational(Monomial(2, {"x": -1}), [(Monomial.var("x"), -1)])
        assert value.evaluate({"x": Fraction(1, 2)}) == 8
        with pytest.raises(PoleHit):
            value.evaluate({"x": 1})

    def test_half_integer_evaluation(self) -> None:
        value = FactoredRational.var("x", Fraction(1, 2))
        with pytest.raises(BranchAmbiguity):
            value.eval_complex({"x": -1})
        assert value.eval_complex({"x": -1}, allow_half=True) == pytest.approx(1j)

    @given(rationals)
    def test_log_gradient(self, value: FactoredRational) -> None:
        if not value.is_integral() or value.is_zero():
            return
        names = list(NAMES)
        try:
            base = value.eval_complex(POINT)
            gradient = value.log_gradient(POINT, names)
        except PoleHit:
            return
        step = 1e-6
        for name, derivative in zip(names, gradient):
            moved = dict(POINT, **{name: POINT[name] * cmath.exp(step)})
            numeric = (cmath.log(value.eval_complex(moved) / base)) / step
            assert abs(numeric - derivative) < 1e-3 * max(1.0, abs(derivative))

    def test_log_gradient_at_a_pole(self) -> None:
        value = FactoredRational.one_minus(Monomial(1, {"x": 1, "y": -1}), -1)
        with pytest.raises(PoleHit):
            value.log_gradient({"x": 2, "y": 2}, ["x", "y"])
