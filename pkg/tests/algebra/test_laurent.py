from fractions import Fraction

from hypothesis import given, strategies as st
import pytest
import sympy

from octajones.algebra.laurent import (LaurentPoly, annihilator_checks, q_pochhammer_range,
                                       qbinomial, qfact)
from octajones.errors import NotDivisible

from tests.utils.helpers import q_poly

coefficients = st.one_of(st.integers(-20, 20),
                         st.fractions(min_value=-5, max_value=5, max_denominator=7))
polys = st.dictionaries(st.integers(-12, 12), coefficients, max_size=6).map(LaurentPoly)


class TestRingLaws:
    @given(polys, polys)
    def test_addition_commutes(self, a: LaurentPoly, b: LaurentPoly) -> None:
        assert a + b == b + a

    @given(polys, polys, polys)
    def test_multiplication_associates(self, a: LaurentPoly, b: LaurentPoly, c: LaurentPoly
                                       ) -> None:
        assert (a * b) * c == a * (b * c)

    @given(polys, polys, polys)
    def test_distributes(self, a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> None:
        assert a * (b + c) == a * b + a * c

    @given(polys)
    def test_additive_inverse(self, a: LaurentPoly) -> None:
        assert (a - a).is_zero()
        assert a + LaurentPoly.zero() == a
        assert a * LaurentPoly.one() == a

    @given(polys, polys)
    def test_exact_division_undoes_multiplication(self, a: LaurentPoly, b: LaurentPoly
                                                  ) -> None:
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a

    @given(polys)
    def test_equal_polys_hash_equal(self, a: LaurentPoly) -> None:
        assert hash(a) == hash(LaurentPoly(dict(a.items())))


class TestLaurentPoly:
    def test_zero_coefficients_are_dropped(self) -> None:
        poly = LaurentPoly({0: 1, 2: 0, -4: Fraction(0)})
        assert len(poly) == 1
        assert poly == 1

    def test_q_exponents_are_doubled(self) -> None:
        poly = LaurentPoly.q_power(3, 2)
        assert list(poly.items()) == [(6, 2)]
        assert poly.q_coefficient(3) == 2
        assert LaurentPoly.q_power(Fraction(1, 2)).min_exponent == 1

    def test_rejects_quarter_powers(self) -> None:
        with pytest.raises(ValueError):
            LaurentPoly.q_power(Fraction(1, 4))

    def test_negative_power_of_monomial(self) -> None:
        assert LaurentPoly.v_power(3, 2) ** -2 == LaurentPoly({-6: Fraction(1, 4)})
        with pytest.raises(NotDivisible):
            _ = LaurentPoly.one_minus_q(1) ** -1

    def test_not_divisible(self) -> None:
        with pytest.raises(NotDivisible):
            q_poly({0: 1, 2: 1}).exact_div(q_poly({0: 1, 1: 1}))

    def test_integrality(self) -> None:
        assert q_poly({-3: 1, 2: -4}).is_integral()
        assert not LaurentPoly.v_power(1).is_integral()
        assert not LaurentPoly({0: Fraction(1, 2)}).is_integral()

    @pytest.mark.parametrize("bits", [8, 16, 64])
    def test_pack_keeps_negative_coefficients(self, bits: int) -> None:
        poly = q_poly({-4: 1, -2: -1, 0: 3, 5: -7})
        offset, value = poly.pack(bits)
        assert offset == -8
        assert LaurentPoly.unpack(offset, value, bits) == poly

    def test_evaluate_q(self) -> None:
        poly = q_poly({-1: 1, 0: 2, 2: -1})
        assert poly.evaluate_q(2) == Fraction(1, 2) + 2 - 4
        with pytest.raises(ValueError):
            LaurentPoly.v_power(1).evaluate_q(2)

    def test_string_form(self) -> None:
        assert str(q_poly({-4: -1, -2: 1, -1: 1, 0: 1})) == "-q^-4 + q^-2 + q^-1 + 1"
        assert str(LaurentPoly.v_power(1, 3)) == "3*q^(1/2)"
        assert str(LaurentPoly.zero()) == "0"


class TestQFactorials:
    def test_factorial_values(self) -> None:
        assert qfact(0).value == 1
        assert qfact(2).value == (LaurentPoly.one_minus_q(1) * LaurentPoly.one_minus_q(2))
        assert qfact(-1).vanishes and qfact(-1).value.is_zero()

    def test_reciprocal_of_negative_factorial_vanishes(self) -> None:
        q = sympy.Symbol("q")
        assert qfact(-3).reciprocal(q) == 0
        assert sympy.simplify(qfact(1).reciprocal(q) * (1 - q) - 1) == 0

    def test_empty_pochhammer_range(self) -> None:
        assert q_pochhammer_range(5, 4) == 1

    @pytest.mark.parametrize("b,k,expected", [
        (2, 1, {0: 1, 1: 1}),
        (4, 2, {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}),
        (3, 0, {0: 1}),
        (3, 3, {0: 1}),
        (3, 4, {}),
        (3, -1, {}),
    ])
    def test_gaussian_binomial(self, b: int, k: int, expected: dict) -> None:
        assert qbinomial(b, k) == q_poly(expected)

    @given(st.integers(0, 12), st.integers(0, 12))
    def test_gaussian_binomial_is_a_quotient(self, b: int, k: int) -> None:
        if k > b:
            return
        assert (qbinomial(b, k) * qfact(k).value * qfact(b - k).value) == qfact(b).value

    def test_annihilator_checks(self) -> None:
        report = annihilator_checks(-5, 12)
        assert report.ok
        assert len(report.checks) == 18
