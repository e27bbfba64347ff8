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
"""Closed-form rational functions ``c * m * prod (1 - m_i)^e_i`` over named variables.

Every shape parameter, region equation, loop equation and ratio of the state summand is a
product of a monomial with binomials ``1 - m``. Keeping that shape explicit gives a canonical
form that can be compared exactly; only binomials of non-primitive monomials are ever factored.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union
from fractions import Fraction
import functools
import logging
import math
import re

import sympy

from ..errors import BranchAmbiguity, PoleHit, ZeroBinding, ZeroInverse

log: logging.Logger = logging.getLogger("octajones.algebra")

Exponent = Union[int, Fraction]
Number = Union[int, Fraction, complex, float]

_NAME_RE = re.compile(r"^(.*?)(\d*)$")
_PRIORITY = {"q": 0, "Q": 1, "w_mu": 1, "w": 2}


def variable_key(name: str) -> Tuple[int, str, int]:
    """Sort key placing ``q``, ``Q``/``w_mu`` first and ordering numbered names naturally."""
    prefix, suffix = _NAME_RE.match(name).groups()
    return _PRIORITY.get(prefix, 10), prefix, int(suffix) if suffix else -1


def _double(exponent: Exponent) -> int:
    doubled = Fraction(exponent) * 2
    if doubled.denominator != 1:
        raise ValueError(f"exponent {exponent} is not a half-integer")
    return int(doubled)


class Monomial:
    """``constant * prod var^e`` with half-integer exponents stored doubled."""

    __slots__ = ("constant", "_exponents", "_hash")

    constant: Fraction
    _exponents: Tuple[Tuple[str, int], ...]

    def __init__(self, constant: Union[int, Fraction] = 1,
                 exponents: Optional[Mapping[str, Exponent]] = None) -> None:
        doubled = {name: _double(exp) for name, exp in (exponents or {}).items()}
        self._set(Fraction(constant), doubled)

    def _set(self, constant: Fraction, doubled: Mapping[str, int]) -> None:
        self.constant = constant
        self._exponents = tuple(sorted(((name, exp) for name, exp in doubled.items() if exp),
                                       key=lambda item: variable_key(item[0])))
        self._hash = None

    @classmethod
    def _make(cls, constant: Fraction, doubled: Mapping[str, int]) -> 'Monomial':
        mono = cls.__new__(cls)
        mono._set(constant, doubled)
        return mono

    @classmethod
    def var(cls, name: str, exponent: Exponent = 1) -> 'Monomial':
        return cls(1, {name: exponent})

    @property
    def doubled_exponents(self) -> Dict[str, int]:
        return dict(self._exponents)

    @property
    def exponents(self) -> Dict[str, Fraction]:
        return {name: Fraction(exp, 2) for name, exp in self._exponents}

    def exponent(self, name: str) -> Fraction:
        return Fraction(dict(self._exponents).get(name, 0), 2)

    @property
    def variables(self) -> Set[str]:
        return {name for name, _ in self._exponents}

    def is_constant(self) -> bool:
        return not self._exponents

    def is_integral(self) -> bool:
        return all(exp % 2 == 0 for _, exp in self._exponents)

    def leading_sign(self) -> int:
        """Sign of the first nonzero exponent in variable order; 0 for constants."""
        if not self._exponents:
            return 0
        return 1 if self._exponents[0][1] > 0 else -1

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        doubled = dict(self._exponents)
        for name, exp in other._exponents:
            doubled[name] = doubled.get(name, 0) + exp
        return Monomial._make(self.constant * other.constant, doubled)

    def inverse(self) -> 'Monomial':
        if not self.constant:
            raise ZeroInverse("cannot invert a zero monomial")
        return Monomial._make(1 / self.constant, {name: -exp for name, exp in self._exponents})

    def __truediv__(self, other: 'Monomial') -> 'Monomial':
        return self * other.inverse()

    def __pow__(self, power: Exponent) -> 'Monomial':
        power = Fraction(power)
        if power.denominator == 1:
            if power < 0 and not self.constant:
                raise ZeroInverse("cannot invert a zero monomial")
            constant = self.constant ** int(power)
        elif self.constant == 1:
            constant = Fraction(1)
        else:
            raise ValueError(f"cannot take a fractional power of the constant {self.constant}")
        doubled = {}
        for name, exp in self._exponents:
            new = exp * power
            if new.denominator != 1:
                raise ValueError(f"{name}^{Fraction(exp, 2)} to the power {power} leaves the "
                                 "half-integer lattice")
            doubled[name] = int(new)
        return Monomial._make(constant, doubled)

    def __neg__(self) -> 'Monomial':
        return Monomial._make(-self.constant, dict(self._exponents))

    def scale(self, factor: Union[int, Fraction]) -> 'Monomial':
        return Monomial._make(self.constant * Fraction(factor), dict(self._exponents))

    def substitute(self, bindings: Mapping[str, 'Monomial']) -> 'Monomial':
        result = Monomial._make(self.constant, {})
        for name, exp in self._exponents:
            if name in bindings:
                binding = bindings[name]
                if not binding.constant:
                    raise ZeroBinding(f"{name} is bound to zero")
                result = result * binding ** Fraction(exp, 2)
            else:
                result = result * Monomial._make(Fraction(1), {name: exp})
        return result

    def evaluate(self, point: Mapping[str, Number]) -> Number:
        value: Number = self.constant
        for name, exp in self._exponents:
            base = point[name]
            if exp % 2 == 0:
                value = value * base ** (exp // 2)
            else:
                value = value * complex(base) ** (exp / 2)
        return value

    def sort_key(self) -> tuple:
        return (tuple((variable_key(name), exp) for name, exp in self._exponents),
                self.constant)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.constant == other.constant and self._exponents == other._exponents

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.constant, self._exponents))
        return self._hash

    def _vars_str(self) -> str:
        parts = []
        for name, exp in self._exponents:
            value = Fraction(exp, 2)
            if value == 1:
                parts.append(name)
            elif value.denominator == 1:
                parts.append(f"{name}^{value.numerator}")
            else:
                parts.append(f"{name}^({value})")
        return " * ".join(parts)

    def __str__(self) -> str:
        body = self._vars_str()
        if not body:
            return str(self.constant)
        if self.constant == 1:
            return body
        if self.constant == -1:
            return f"-{body}"
        return f"{self.constant} * {body}"

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def to_json(self) -> dict:
        return {
            "constant": [self.constant.numerator, self.constant.denominator],
            "exponents": {name: str(Fraction(exp, 2)) for name, exp in self._exponents},
        }


Factors = Tuple[Tuple[Monomial, int], ...]
Irreducible = Tuple[Monomial, Tuple[Fraction, ...]]

_T = sympy.Symbol("t")


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    numerator, denominator = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if numerator ** 2 != value.numerator or denominator ** 2 != value.denominator:
        return None
    return Fraction(numerator, denominator)


@functools.lru_cache(maxsize=None)
def irreducible_factors(mono: Monomial) -> Tuple[Tuple[Irreducible, int], ...]:
    """Factors ``1 - c t^k`` over the rationals, where ``t`` is the primitive monomial with
    ``mono = c t^k`` and a positive leading exponent.

    Each factor is ``(t, coefficients)`` with the coefficients of increasing powers of ``t``
    normalized to a constant term of 1, so the product of the factors is exactly ``1 - mono``.
    """
    doubled = mono.doubled_exponents
    if not doubled:
        raise ValueError("a constant binomial has no factorization over a monomial")
    k = math.gcd(*doubled.values())
    base = Monomial._make(Fraction(1), {name: exp // k for name, exp in doubled.items()})
    if base.leading_sign() < 0:
        raise ValueError(f"(1 - {mono}) is not oriented")
    if k == 1:
        return (((base, (Fraction(1), -mono.constant)), 1),)
    if k == 2:
        root = _rational_sqrt(mono.constant)
        if root is None:
            return (((base, (Fraction(1), Fraction(0), -mono.constant)), 1),)
        return (((base, (Fraction(1), -root)), 1), ((base, (Fraction(1), root)), 1))
    constant = sympy.Rational(mono.constant.numerator, mono.constant.denominator)
    _, factors = sympy.Poly(1 - constant * _T ** k, _T, domain="QQ").factor_list()
    result = []
    for factor, multiplicity in factors:
        coefficients = [sympy.Rational(c) for c in reversed(factor.all_coeffs())]
        normalized = tuple(Fraction(int(ratio.p), int(ratio.q))
                           for ratio in (c / coefficients[0] for c in coefficients))
        result.append(((base, normalized), int(multiplicity)))
    return tuple(result)


class FactoredRational:
    """A rational function ``lead * prod (1 - m)^e`` in canonical form.

    Canonical means: no constant binomials (they are folded into the lead), every binomial
    monomial has a positive leading exponent in variable order (``1 - m`` with a negative one
    is rewritten as ``-m (1 - 1/m)``), equal binomials are merged and zero exponents dropped.
    Equality and hashing compare the lead together with the irreducible factors of every
    binomial over its primitive monomial, so two forms are equal exactly when the rational
    functions are.
    """

    __slots__ = ("lead", "factors", "_hash", "_key")

    lead: Monomial
    factors: Factors

    def __init__(self, lead: Optional[Monomial] = None,
                 factors: Iterable[Tuple[Monomial, int]] = ()) -> None:
        lead = lead if lead is not None else Monomial()
        merged: Dict[Monomial, int] = {}
        for mono, exp in factors:
            if not exp:
                continue
            if mono.is_constant():
                value = 1 - mono.constant
                if not value:
                    if exp > 0:
                        lead = Monomial(0)
                        merged = {}
                        break
                    raise ZeroInverse(f"(1 - {mono})^{exp} divides by zero")
                lead = lead.scale(value ** exp)
                continue
            if mono.leading_sign() < 0:
                lead = lead * (-mono) ** exp
                mono = mono.inverse()
            merged[mono] = merged.get(mono, 0) + exp
        if not lead.constant:
            self.lead = Monomial(0)
            self.factors = ()
        else:
            self.lead = lead
            self.factors = tuple(sorted(((mono, exp) for mono, exp in merged.items() if exp),
                                        key=lambda item: item[0].sort_key()))
        self._hash = None
        self._key = None

    @classmethod
    def one(cls) -> 'FactoredRational':
        return cls()

    @classmethod
    def zero(cls) -> 'FactoredRational':
        return cls(Monomial(0))

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> 'FactoredRational':
        return cls(Monomial(value))

    @classmethod
    def var(cls, name: str, exponent: Exponent = 1) -> 'FactoredRational':
        return cls(Monomial.var(name, exponent))

    @classmethod
    def monomial(cls, mono: Monomial) -> 'FactoredRational':
        return cls(mono)

    @classmethod
    def one_minus(cls, mono: Union[Monomial, 'FactoredRational'], exponent: int = 1
                  ) -> 'FactoredRational':
        """Returns ``(1 - mono)^exponent``."""
        return cls(Monomial(), [(_as_monomial(mono), exponent)])

    def is_zero(self) -> bool:
        return not self.lead.constant

    def is_one(self) -> bool:
        return self == _ONE

    def is_monomial(self) -> bool:
        return not self.factors or not self.canonical_key()

    def is_integral(self) -> bool:
        return self.lead.is_integral() and all(mono.is_integral() for mono, _ in self.factors)

    @property
    def variables(self) -> Set[str]:
        names = set(self.lead.variables)
        for mono, _ in self.factors:
            names |= mono.variables
        return names

    def lead_exponent(self, name: str) -> Fraction:
        return self.lead.exponent(name)

    def __mul__(self, other: object) -> 'FactoredRational':
        if isinstance(other, (int, Fraction)):
            other = FactoredRational.constant(other)
        elif isinstance(other, Monomial):
            other = FactoredRational(other)
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return FactoredRational.zero()
        return FactoredRational(self.lead * other.lead, self.factors + other.factors)

    __rmul__ = __mul__

    def inverse(self) -> 'FactoredRational':
        if self.is_zero():
            raise ZeroInverse("cannot invert zero")
        return FactoredRational(self.lead.inverse(), [(mono, -exp) for mono, exp in self.factors])

    def __truediv__(self, other: object) -> 'FactoredRational':
        if isinstance(other, (int, Fraction)):
            other = FactoredRational.constant(other)
        elif isinstance(other, Monomial):
            other = FactoredRational(other)
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> 'FactoredRational':
        if isinstance(other, (int, Fraction)):
            return FactoredRational.constant(other) * self.inverse()
        return NotImplemented

    def __neg__(self) -> 'FactoredRational':
        return FactoredRational(-self.lead, self.factors)

    def __pow__(self, power: Exponent) -> 'FactoredRational':
        power = Fraction(power)
        if self.is_zero():
            if power <= 0:
                raise ZeroInverse("cannot raise zero to a non-positive power")
            return self
        factors = []
        for mono, exp in self.factors:
            new = exp * power
            if new.denominator != 1:
                raise ValueError(f"(1 - {mono})^{exp} to the power {power} is not a binomial "
                                 "power")
            factors.append((mono, int(new)))
        return FactoredRational(self.lead ** power, factors)

    def substitute(self, bindings: Mapping[str, Union[Monomial, 'FactoredRational']]
                   ) -> 'FactoredRational':
        monos = {name: _as_monomial(value) for name, value in bindings.items()}
        for name, mono in monos.items():
            if not mono.constant:
                raise ZeroBinding(f"{name} is bound to zero")
        if self.is_zero():
            return self
        return FactoredRational(self.lead.substitute(monos),
                                [(mono.substitute(monos), exp) for mono, exp in self.factors])

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact evaluation at a rational point; requires integral exponents."""
        if not self.is_integral():
            raise BranchAmbiguity("exact evaluation needs integral exponents")
        value = Fraction(self.lead.evaluate({k: Fraction(v) for k, v in point.items()}))
        for mono, exp in self.factors:
            base = 1 - Fraction(mono.evaluate({k: Fraction(v) for k, v in point.items()}))
            if not base:
                if exp < 0:
                    raise PoleHit(f"1 - {mono} vanishes at {dict(point)}")
                return Fraction(0)
            value *= base ** exp
        return value

    def eval_complex(self, point: Mapping[str, complex], allow_half: bool = False) -> complex:
        """Numeric evaluation; half-integer exponents use the principal branch and are refused
        unless ``allow_half`` is set."""
        if not self.is_integral():
            if not allow_half:
                raise BranchAmbiguity(f"{self} has half-integer exponents")
            log.debug("Evaluating %s on the principal branch", self)
        value = complex(self.lead.evaluate(point))
        for mono, exp in self.factors:
            base = 1 - complex(mono.evaluate(point))
            if base == 0:
                if exp < 0:
                    raise PoleHit(f"1 - {mono} vanishes at the evaluation point")
                return 0j
            value *= base ** exp
        return value

    def log_gradient(self, point: Mapping[str, complex], names: List[str]) -> List[complex]:
        """``d log f / d log x`` for each named variable, which is exact for this form."""
        gradient = [complex(self.lead.exponent(name)) for name in names]
        for mono, exp in self.factors:
            value = complex(mono.evaluate(point))
            if value == 1:
                raise PoleHit(f"1 - {mono} vanishes at the evaluation point")
            weight = -exp * value / (1 - value)
            for i, name in enumerate(names):
                degree = mono.exponent(name)
                if degree:
                    gradient[i] += weight * float(degree)
        return gradient

    def to_sympy(self, symbols: Optional[Mapping[str, sympy.Symbol]] = None) -> sympy.Expr:
        symbols = dict(symbols or {})

        def mono_expr(mono: Monomial) -> sympy.Expr:
            expr = sympy.Rational(mono.constant.numerator, mono.constant.denominator)
            for name, exp in mono.exponents.items():
                sym = symbols.setdefault(name, sympy.Symbol(name))
                expr *= sym ** sympy.Rational(exp.numerator, exp.denominator)
            return expr

        result = mono_expr(self.lead)
        for mono, exp in self.factors:
            result *= (1 - mono_expr(mono)) ** exp
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FactoredRational.constant(other)
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if self.lead != other.lead:
            return False
        return self.factors == other.factors or self.canonical_key() == other.canonical_key()

    def canonical_key(self) -> Tuple[Tuple[Irreducible, int], ...]:
        """The irreducible factors of all binomials with their summed exponents."""
        if self._key is None:
            exponents: Dict[Irreducible, int] = {}
            for mono, exp in self.factors:
                for factor, multiplicity in irreducible_factors(mono):
                    exponents[factor] = exponents.get(factor, 0) + exp * multiplicity
            self._key = tuple(sorted(((factor, exp) for factor, exp in exponents.items() if exp),
                                     key=lambda item: (item[0][0].sort_key(), item[0][1])))
        return self._key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.lead, self.canonical_key()))
        return self._hash

    def __str__(self) -> str:
        parts = [str(self.lead)] if not self.lead.is_constant() or not self.factors \
            or self.lead.constant != 1 else []
        for mono, exp in self.factors:
            parts.append(f"(1 - {mono})" if exp == 1 else f"(1 - {mono})^{exp}")
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"FactoredRational({self})"

    def to_json(self) -> dict:
        return {
            "lead": self.lead.to_json(),
            "factors": [{"monomial": mono.to_json(), "exponent": exp}
                        for mono, exp in self.factors],
        }


_ONE = FactoredRational()


def _as_monomial(value: Union[Monomial, FactoredRational]) -> Monomial:
    if isinstance(value, Monomial):
        return value
    if not value.is_monomial():
        raise ValueError(f"{value} is not a monomial")
    return value.lead


def shape_triple(z: Union[str, Monomial, FactoredRational]
                 ) -> Tuple[FactoredRational, FactoredRational, FactoredRational]:
    """Returns ``(z, 1/(1-z), 1-1/z)`` as canonical forms."""
    if isinstance(z, str):
        z = Monomial.var(z)
    mono = _as_monomial(z)
    z_prime = FactoredRational.one_minus(mono, -1)
    z_double_prime = FactoredRational(-mono.inverse(), [(mono, 1)])
    return FactoredRational(mono), z_prime, z_double_prime


def product(values: Iterable[FactoredRational]) -> FactoredRational:
    lead = Monomial()
    factors: List[Tuple[Monomial, int]] = []
    for value in values:
        if value.is_zero():
            return FactoredRational.zero()
        lead = lead * value.lead
        factors.extend(value.factors)
    return FactoredRational(lead, factors)
