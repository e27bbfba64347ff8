# octajones - Colored Jones state sums and octahedral gluing equations of knot diagrams
# Copyright (C) 2026 The octajones developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""Exact Laurent polynomials in ``v = q^(1/2)`` and the q-factorials built from them."""
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union
from fractions import Fraction
from functools import lru_cache
import numbers

import sympy

from ..errors import NotDivisible

Coefficient = Union[int, Fraction]
Exponent = Union[int, Fraction]


def _q_to_v(exponent: Exponent) -> int:
    doubled = Fraction(exponent) * 2
    if doubled.denominator != 1:
        raise ValueError(f"q-exponent {exponent} is not a half-integer")
    return int(doubled)


class LaurentPoly:
    """A Laurent polynomial in ``v = q^(1/2)`` with rational coefficients.

    Exponents are stored in units of ``v``, so ``q^k`` lives under the key ``2k``. Zero
    coefficients are never stored and the terms are kept in ascending exponent order.
    """

    __slots__ = ("_terms", "_hash")

    _terms: Dict[int, Fraction]

    def __init__(self, terms: Optional[Mapping[int, Coefficient]] = None) -> None:
        clean: Dict[int, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[int(exp)] = coeff
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[int, Fraction]) -> 'LaurentPoly':
        poly = cls.__new__(cls)
        poly._terms = dict(sorted((e, c) for e, c in terms.items() if c))
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls._from_clean({})

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls._from_clean({0: Fraction(1)})

    @classmethod
    def v_power(cls, exponent: int, coeff: Coefficient = 1) -> 'LaurentPoly':
        return cls({exponent: coeff})

    @classmethod
    def q_power(cls, exponent: Exponent, coeff: Coefficient = 1) -> 'LaurentPoly':
        return cls({_q_to_v(exponent): coeff})

    @classmethod
    def from_q_terms(cls, terms: Mapping[Exponent, Coefficient]) -> 'LaurentPoly':
        result: Dict[int, Fraction] = {}
        for exp, coeff in terms.items():
            key = _q_to_v(exp)
            result[key] = result.get(key, Fraction(0)) + Fraction(coeff)
        return cls._from_clean(result)

    @classmethod
    def one_minus_q(cls, exponent: Exponent) -> 'LaurentPoly':
        """Returns ``1 - q^exponent``."""
        return cls.one() - cls.q_power(exponent)

    # region Inspection

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def q_items(self) -> Iterator[Tuple[Fraction, Fraction]]:
        for exp, coeff in self._terms.items():
            yield Fraction(exp, 2), coeff

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def q_coefficient(self, exponent: Exponent) -> Fraction:
        return self.coefficient(_q_to_v(exponent))

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return next(iter(self._terms))

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return next(reversed(self._terms.keys()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_integral(self) -> bool:
        """Whether this is an element of ``Z[q, q^-1]``."""
        return all(exp % 2 == 0 and coeff.denominator == 1
                   for exp, coeff in self._terms.items())

    def has_integer_coefficients(self) -> bool:
        return all(coeff.denominator == 1 for coeff in self._terms.values())

    def l1_norm(self) -> Fraction:
        return sum((abs(coeff) for coeff in self._terms.values()), Fraction(0))

    # endregion
    # region Arithmetic

    @staticmethod
    def _coerce(other: object) -> Optional['LaurentPoly']:
        if isinstance(other, LaurentPoly):
            return other
        elif isinstance(other, (numbers.Rational, int)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other: object) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            result[exp] = result.get(exp, 0) + coeff
        return LaurentPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly._from_clean({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other: object) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            return other * self
        result: Dict[int, Fraction] = {}
        for exp2, coeff2 in other._terms.items():
            for exp1, coeff1 in self._terms.items():
                key = exp1 + exp2
                result[key] = result.get(key, 0) + coeff1 * coeff2
        return LaurentPoly._from_clean(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> 'LaurentPoly':
        if power < 0:
            if not self.is_monomial():
                raise NotDivisible(f"cannot invert the non-monomial {self}")
            (exp, coeff), = self._terms.items()
            return LaurentPoly({exp * power: Fraction(1) / coeff ** -power})
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, exponent: int) -> 'LaurentPoly':
        """Multiplies by ``v^exponent``."""
        return LaurentPoly._from_clean({exp + exponent: coeff
                                        for exp, coeff in self._terms.items()})

    def scale(self, factor: Coefficient) -> 'LaurentPoly':
        factor = Fraction(factor)
        return LaurentPoly._from_clean({exp: coeff * factor for exp, coeff in self._terms.items()})

    def invert_variable(self) -> 'LaurentPoly':
        """Substitutes ``v -> 1/v`` (equivalently ``q -> 1/q``)."""
        return LaurentPoly._from_clean({-exp: coeff for exp, coeff in self._terms.items()})

    def divmod(self, divisor: 'LaurentPoly') -> Tuple['LaurentPoly', 'LaurentPoly']:
        """Long division in ``Q[v]`` after clearing the lowest powers of both operands."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        shift = self.min_exponent - divisor.min_exponent
        rem = dict(self.shift(-self.min_exponent)._terms)
        div = divisor.shift(-divisor.min_exponent)
        top, lead = div.max_exponent, div._terms[div.max_exponent]
        quotient: Dict[int, Fraction] = {}
        while rem and max(rem) >= top:
            exp = max(rem)
            factor = rem[exp] / lead
            quotient[exp - top] = factor
            for dexp, dcoeff in div._terms.items():
                key = exp - top + dexp
                value = rem.get(key, 0) - factor * dcoeff
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        remainder = LaurentPoly._from_clean(rem).shift(self.min_exponent)
        return LaurentPoly._from_clean(quotient).shift(shift), remainder

    def exact_div(self, divisor: 'LaurentPoly') -> 'LaurentPoly':
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise NotDivisible(f"{self} is not divisible by {divisor}")
        return quotient

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # endregion
    # region Evaluation and conversion

    def evaluate(self, v: Union[Fraction, complex, float]) -> Union[Fraction, complex, float]:
        """Evaluates at a numeric ``v``; rationals stay exact."""
        if isinstance(v, (int, numbers.Rational)):
            v = Fraction(v)
        return sum((coeff * v ** exp for exp, coeff in self._terms.items()), Fraction(0) * v)

    def evaluate_q(self, q: Union[Fraction, complex, float]) -> Union[Fraction, complex, float]:
        if not all(exp % 2 == 0 for exp in self._terms):
            raise ValueError("cannot evaluate half-integer powers of q at a q-value")
        if isinstance(q, (int, numbers.Rational)):
            q = Fraction(q)
        return sum((coeff * q ** (exp // 2) for exp, coeff in self._terms.items()),
                   Fraction(0) * q)

    def to_sympy(self, q: sympy.Symbol) -> sympy.Expr:
        return sympy.Add(*(sympy.Rational(coeff.numerator, coeff.denominator)
                           * q ** sympy.Rational(exp, 2) for exp, coeff in self._terms.items()))

    def pack(self, bits: int) -> Tuple[int, int]:
        """Evaluates at ``v = 2^bits`` after shifting the lowest term to degree zero.

        Returns the shift and the integer value. Only integer coefficients can be packed.
        """
        if not self._terms:
            return 0, 0
        offset = self.min_exponent
        value = 0
        for exp, coeff in self._terms.items():
            if coeff.denominator != 1:
                raise ValueError("only integer coefficients can be packed")
            value += coeff.numerator << (bits * (exp - offset))
        return offset, value

    @classmethod
    def unpack(cls, offset: int, value: int, bits: int) -> 'LaurentPoly':
        """Inverse of :meth:`pack` for coefficients of absolute value below ``2^(bits-1)``."""
        terms: Dict[int, Fraction] = {}
        base = 1 << bits
        half = base >> 1
        mask = base - 1
        exp = offset
        while value:
            digit = value & mask
            if digit >= half:
                digit -= base
            if digit:
                terms[exp] = Fraction(digit)
            value = (value - digit) >> bits
            exp += 1
        return cls._from_clean(terms)

    def to_json(self) -> List[List[int]]:
        return [[exp, coeff.numerator, coeff.denominator] for exp, coeff in self._terms.items()]

    @classmethod
    def from_json(cls, data: List[List[int]]) -> 'LaurentPoly':
        return cls({exp: Fraction(num, den) for exp, num, den in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exp, coeff in self._terms.items():
            q_exp = Fraction(exp, 2)
            if q_exp == 0:
                var = ""
            elif q_exp == 1:
                var = "q"
            elif q_exp.denominator == 1:
                var = f"q^{q_exp.numerator}"
            else:
                var = f"q^({q_exp})"
            magnitude = abs(coeff)
            if not var:
                body = str(magnitude)
            elif magnitude == 1:
                body = var
            else:
                body = f"{magnitude}*{var}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # endregion


class ExtendedQFactorial(NamedTuple):
    """``(q)_n`` with the vanishing conventions for negative ``n`` on both the value and
    its reciprocal."""

    n: int
    value: LaurentPoly

    @property
    def vanishes(self) -> bool:
        return self.n < 0

    def reciprocal(self, q: sympy.Symbol) -> sympy.Expr:
        if self.n < 0:
            return sympy.Integer(0)
        return 1 / self.value.to_sympy(q)


@lru_cache(maxsize=None)
def q_pochhammer_range(low: int, high: int) -> LaurentPoly:
    """Returns ``prod_{i=low}^{high} (1 - q^i)``, which is 1 for an empty range."""
    if high < low:
        return LaurentPoly.one()
    return q_pochhammer_range(low, high - 1) * LaurentPoly.one_minus_q(high)


def qfact(n: int) -> ExtendedQFactorial:
    if n < 0:
        return ExtendedQFactorial(n, LaurentPoly.zero())
    return ExtendedQFactorial(n, q_pochhammer_range(1, n))


@lru_cache(maxsize=None)
def qbinomial(b: int, k: int) -> LaurentPoly:
    """The Gaussian binomial ``(q)_b / ((q)_{b-k} (q)_k)``, zero outside ``0 <= k <= b``."""
    if k < 0 or k > b:
        return LaurentPoly.zero()
    if k == 0 or k == b:
        return LaurentPoly.one()
    return qbinomial(b - 1, k - 1) + LaurentPoly.q_power(k) * qbinomial(b - 1, k)


class AnnihilatorCheck(NamedTuple):
    n: int
    factorial_holds: bool
    reciprocal_holds: bool


class AnnihilatorReport(NamedTuple):
    checks: List[AnnihilatorCheck]

    @property
    def ok(self) -> bool:
        return all(check.factorial_holds and check.reciprocal_holds for check in self.checks)


def annihilator_checks(low: int = -5, high: int = 20) -> AnnihilatorReport:
    """Checks that ``(1-qQ)(E-(1-qQ))`` kills ``(q)_n`` and ``(1-qQ)E-1`` kills ``1/(q)_n``
    for every ``n`` in ``[low, high]`` under the extended conventions."""
    q = sympy.Symbol("q")
    checks = []
    for n in range(low, high + 1):
        factor = LaurentPoly.one_minus_q(n + 1)
        current, shifted = qfact(n), qfact(n + 1)
        factorial = factor * (shifted.value - factor * current.value)
        reciprocal = sympy.cancel(factor.to_sympy(q) * shifted.reciprocal(q)
                                  - current.reciprocal(q))
        checks.append(AnnihilatorCheck(n, factorial.is_zero(), reciprocal == 0))
    return AnnihilatorReport(checks)
