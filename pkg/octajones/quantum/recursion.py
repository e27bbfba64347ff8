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
"""Guessing and checking linear recursions of the colored Jones polynomial.

An operator ``sum_j c_j(q, Q) E^j`` acts on a sequence by
``(P f)(n) = sum_j c_j(q, q^n) f(n + j)``. Candidates are found by exact linear algebra on
computed values: the nullspace is computed modulo a few word-sized primes, lifted by CRT and
rational reconstruction, and the lifted operator is then checked exactly on every value.
"""
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple
from fractions import Fraction
from math import gcd, isqrt
import itertools
import logging

from attr import dataclass
import numpy as np
import sympy

from ..algebra.laurent import LaurentPoly, qfact
from ..diagram import Diagram
from ..errors import InsufficientData

log: logging.Logger = logging.getLogger("octajones.recursion")

PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)

Bounds = Tuple[int, int, int]
Coefficient = Dict[Tuple[int, int], int]

LOWER_Q = sympy.Symbol("q")
UPPER_Q = sympy.Symbol("Q")
SHIFT_E = sympy.Symbol("E")


@dataclass(frozen=True)
class RecursionOperator:
    """``coefficients[j]`` maps ``(q exponent, Q exponent)`` to an integer."""

    coefficients: Tuple[Coefficient, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def coefficient_at(self, j: int, n: int) -> LaurentPoly:
        """``c_j(q, q^n)``."""
        terms: Dict[int, Fraction] = {}
        for (alpha, beta), value in self.coefficients[j].items():
            exp = 2 * (alpha + n * beta)
            terms[exp] = terms.get(exp, 0) + value
        return LaurentPoly(terms)

    def coefficient_value(self, j: int, q: Fraction, n: int) -> Fraction:
        return sum((value * q ** (alpha + n * beta)
                    for (alpha, beta), value in self.coefficients[j].items()), Fraction(0))

    def apply(self, values: Sequence[LaurentPoly], n: int) -> LaurentPoly:
        total = LaurentPoly.zero()
        for j in range(self.order + 1):
            if self.coefficients[j]:
                total = total + self.coefficient_at(j, n) * values[n + j]
        return total

    def to_sympy(self) -> sympy.Expr:
        return sum((value * LOWER_Q ** alpha * UPPER_Q ** beta * SHIFT_E ** j
                    for j, coefficient in enumerate(self.coefficients)
                    for (alpha, beta), value in coefficient.items()), sympy.Integer(0))

    def perturbed(self, j: int, key: Tuple[int, int], delta: int = 1) -> 'RecursionOperator':
        coefficients = [dict(coefficient) for coefficient in self.coefficients]
        coefficients[j][key] = coefficients[j].get(key, 0) + delta
        return RecursionOperator(tuple(coefficients))

    def __str__(self) -> str:
        return str(sympy.collect(sympy.expand(self.to_sympy()), SHIFT_E))

    def to_json(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "coefficients": [[[alpha, beta, value]
                              for (alpha, beta), value in sorted(coefficient.items())]
                             for coefficient in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'RecursionOperator':
        return cls(tuple({(alpha, beta): value for alpha, beta, value in coefficient}
                         for coefficient in data["coefficients"]))


UNKNOWNS = "unknowns"
WINDOWS = "windows"
DATA_RULES = (UNKNOWNS, WINDOWS)


def required_values(bounds: Bounds, margin: int = 5, rule: str = UNKNOWNS) -> int:
    """Smallest sequence length accepted for ``bounds``.

    ``unknowns`` asks for one value per unknown coefficient, ``(d_E+1)(d_Q+1)(2d_q+1)``, plus the
    held-out ``margin``. ``windows`` only asks that every shift and every power of ``Q`` be pinned
    by at least one fitted window.
    """
    d_e, d_big_q, d_q = bounds
    if rule == UNKNOWNS:
        return (d_e + 1) * (d_big_q + 1) * (2 * d_q + 1) + margin
    elif rule == WINDOWS:
        return (d_e + 1) + (d_big_q + 1) + margin
    raise ValueError(f"unknown data rule {rule!r}, expected one of {', '.join(DATA_RULES)}")


def _column(bounds: Bounds, j: int, alpha: int, beta: int) -> int:
    _, d_big_q, d_q = bounds
    return (j * (d_big_q + 1) + beta) * (d_q + 1) + alpha


def _block(values: Sequence[LaurentPoly], n: int, bounds: Bounds, prime: int) -> np.ndarray:
    """Rows of the equations ``sum_j c_j(q, q^n) J(n + j) = 0``, one per power of ``v``."""
    d_e, d_big_q, d_q = bounds
    columns = (d_e + 1) * (d_big_q + 1) * (d_q + 1)
    shifted = values[n:n + d_e + 1]
    low = min(value.min_exponent for value in shifted if value)
    high = max(value.max_exponent for value in shifted if value) + 2 * (d_q + n * d_big_q)
    block = np.zeros((high - low + 1, columns), dtype=np.int64)
    for j, value in enumerate(shifted):
        if not value:
            continue
        dense = np.zeros(value.max_exponent - value.min_exponent + 1, dtype=np.int64)
        for exp, coeff in value.items():
            dense[exp - value.min_exponent] = int(coeff) % prime
        start = value.min_exponent - low
        for alpha, beta in itertools.product(range(d_q + 1), range(d_big_q + 1)):
            offset = start + 2 * (alpha + n * beta)
            column = _column(bounds, j, alpha, beta)
            block[offset:offset + len(dense), column] = dense
    return block[np.any(block, axis=1)]


def _rref(matrix: np.ndarray, prime: int) -> Tuple[np.ndarray, List[int]]:
    m = matrix % prime
    rows, columns = m.shape
    pivots: List[int] = []
    row = 0
    for column in range(columns):
        if row == rows:
            break
        candidates = np.nonzero(m[row:, column])[0]
        if not candidates.size:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            m[[row, pivot]] = m[[pivot, row]]
        m[row] = m[row] * pow(int(m[row, column]), prime - 2, prime) % prime
        factors = m[:, column].copy()
        factors[row] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            m[targets] = (m[targets] - np.outer(factors[targets], m[row]) % prime) % prime
        pivots.append(column)
        row += 1
    return m[:row], pivots


def _modular_nullspace(values: Sequence[LaurentPoly], bounds: Bounds, prime: int
                       ) -> Tuple[List[int], List[List[int]]]:
    d_e, d_big_q, d_q = bounds
    columns = (d_e + 1) * (d_big_q + 1) * (d_q + 1)
    basis = np.zeros((0, columns), dtype=np.int64)
    pivots: List[int] = []
    for n in range(len(values) - d_e):
        if not any(values[n:n + d_e + 1]):
            continue
        basis, pivots = _rref(np.vstack([basis, _block(values, n, bounds, prime)]), prime)
        if len(pivots) == columns:
            break
    free = [column for column in range(columns) if column not in pivots]
    vectors = []
    for column in free:
        vector = [0] * columns
        vector[column] = 1
        for row, pivot in enumerate(pivots):
            vector[pivot] = int(-basis[row, column]) % prime
        vectors.append(vector)
    return pivots, vectors


def rational_reconstruction(value: int, modulus: int) -> Optional[Fraction]:
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, value % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        quotient = r0 // r1
        r0, r1 = r1, r0 - quotient * r1
        s0, s1 = s1, s0 - quotient * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _crt(residues: Sequence[int], moduli: Sequence[int]) -> Tuple[int, int]:
    value, modulus = 0, 1
    for residue, prime in zip(residues, moduli):
        step = (residue - value) * pow(modulus, -1, prime) % prime
        value += modulus * step
        modulus *= prime
    return value, modulus


def _to_operator(vector: Sequence[Fraction], bounds: Bounds) -> RecursionOperator:
    d_e, d_big_q, d_q = bounds
    denominator = 1
    for value in vector:
        denominator = denominator * value.denominator // gcd(denominator, value.denominator)
    coefficients: List[Coefficient] = []
    for j in range(d_e + 1):
        current = {}
        for alpha, beta in itertools.product(range(d_q + 1), range(d_big_q + 1)):
            value = vector[_column(bounds, j, alpha, beta)] * denominator
            if value:
                current[(alpha, beta)] = int(value)
        coefficients.append(current)
    while len(coefficients) > 1 and not coefficients[-1]:
        coefficients.pop()
    return content_free(RecursionOperator(tuple(coefficients)))


def content_free(op: RecursionOperator) -> RecursionOperator:
    """Divides out the gcd of the coefficients in ``Z[q, Q]`` and makes the lowest term of the
    leading coefficient positive."""
    polys = [sympy.Poly(sum((value * LOWER_Q ** alpha * UPPER_Q ** beta
                             for (alpha, beta), value in coefficient.items()),
                            sympy.Integer(0)), LOWER_Q, UPPER_Q)
             for coefficient in op.coefficients]
    content = sympy.Poly(0, LOWER_Q, UPPER_Q)
    for poly in polys:
        content = poly if content.is_zero else sympy.gcd(content, poly)
    if content.is_zero:
        return op
    coefficients = []
    for poly in polys:
        quotient = sympy.div(poly, content)[0] if not poly.is_zero else poly
        coefficients.append({(int(alpha), int(beta)): int(value)
                             for (alpha, beta), value in quotient.terms() if value})
    leading = coefficients[-1]
    if leading and leading[min(leading)] < 0:
        coefficients = [{key: -value for key, value in coefficient.items()}
                        for coefficient in coefficients]
    return RecursionOperator(tuple(coefficients))


def verify_recursion(op: RecursionOperator, values: Sequence, q: Optional[Fraction] = None
                     ) -> bool:
    """Exact check on every ``n`` the values reach. ``values`` are Laurent polynomials, or
    rational numbers when ``q`` gives the point they were evaluated at."""
    if op.is_zero:
        return False
    for n in range(len(values) - op.order):
        if q is None:
            residual = op.apply(values, n)
        else:
            residual = sum((op.coefficient_value(j, q, n) * values[n + j]
                            for j in range(op.order + 1)), Fraction(0))
        if residual:
            log.debug("Operator fails at n=%d", n)
            return False
    return True


def _lift(vectors_by_prime: Dict[int, List[List[int]]], bounds: Bounds,
          values: Sequence[LaurentPoly]) -> Optional[RecursionOperator]:
    primes = list(vectors_by_prime)
    count = len(vectors_by_prime[primes[0]])
    found: List[RecursionOperator] = []
    for index in range(count):
        for used in range(1, len(primes) + 1):
            moduli = primes[:used]
            lifted = []
            for entry in range(len(vectors_by_prime[primes[0]][index])):
                value, modulus = _crt([vectors_by_prime[p][index][entry] for p in moduli],
                                      moduli)
                lifted.append(rational_reconstruction(value, modulus))
            if any(value is None for value in lifted):
                continue
            op = _to_operator(lifted, bounds)
            if verify_recursion(op, values):
                found.append(op)
                break
    if not found:
        return None
    return min(found, key=lambda op: (op.order, sum(len(c) for c in op.coefficients)))


def guess_recursion(values: Sequence[LaurentPoly], d_e: int, d_big_q: int, d_q: int,
                    margin: int = 5, primes: Sequence[int] = PRIMES, rule: str = UNKNOWNS
                    ) -> Optional[RecursionOperator]:
    """Finds ``sum_j c_j(q, Q) E^j`` with ``j <= d_e``, ``deg_Q <= d_big_q`` and
    ``deg_q <= d_q`` annihilating ``values``.

    The last ``margin`` values are held out of the fit and only used for verification. ``rule``
    picks how much data is demanded, see :func:`required_values`.
    Returns ``None`` when the nullspace is trivial.
    """
    bounds = (d_e, d_big_q, d_q)
    minimum = required_values(bounds, margin, rule)
    if len(values) < minimum:
        raise InsufficientData(f"bounds {bounds} with margin {margin} ({rule} rule)", minimum)
    if not any(values):
        log.warning("Refusing to guess a recursion for the zero sequence")
        return None
    fit = values[:len(values) - margin]
    reference: Optional[List[int]] = None
    vectors_by_prime: Dict[int, List[List[int]]] = {}
    for prime in primes:
        pivots, vectors = _modular_nullspace(fit, bounds, prime)
        if not vectors:
            log.debug("Trivial nullspace for bounds %s", bounds)
            return None
        if reference is None:
            reference = pivots
        elif pivots != reference:
            log.debug("Skipping unlucky prime %d", prime)
            continue
        vectors_by_prime[prime] = vectors
    op = _lift(vectors_by_prime, bounds, values)
    if op is None:
        log.warning("Nullspace for bounds %s did not lift to an exact annihilator", bounds)
    else:
        log.info("Found an order %d annihilating operator within bounds %s", op.order, bounds)
    return op


def escalation_schedule(orders: Iterable[int], q_big_degrees: Iterable[int],
                        q_degrees: Iterable[int]) -> List[Bounds]:
    return sorted(itertools.product(orders, q_big_degrees, q_degrees),
                  key=lambda bounds: (sum(bounds), bounds))


def search_recursion(values: Sequence[LaurentPoly], schedule: Sequence[Bounds],
                     margin: int = 5, rule: str = UNKNOWNS
                     ) -> Tuple[Optional[RecursionOperator], Optional[Bounds]]:
    """Tries ``schedule`` in order and stops at the first verified operator. Bounds the data
    cannot support are skipped."""
    for bounds in schedule:
        if len(values) < required_values(bounds, margin, rule):
            log.debug("Not enough values for bounds %s", bounds)
            continue
        op = guess_recursion(values, *bounds, margin=margin, rule=rule)
        if op is not None:
            return op, bounds
    log.warning("No annihilating operator within %d bound choices", len(schedule))
    return None, None


def specialize_q1(op: RecursionOperator) -> sympy.Poly:
    """``sum_j c_j(1, Q) E^j`` with the integer content removed."""
    expr = sum((value * UPPER_Q ** beta * SHIFT_E ** j
                for j, coefficient in enumerate(op.coefficients)
                for (_, beta), value in coefficient.items()), sympy.Integer(0))
    poly = sympy.Poly(expr, UPPER_Q, SHIFT_E)
    if poly.is_zero:
        log.warning("Operator vanishes identically at q = 1")
        return poly
    return poly.primitive()[1]


def e_part(poly: sympy.Poly) -> sympy.Poly:
    """``poly`` divided by the gcd of its coefficients in ``Q[Q]`` as a polynomial in ``E``."""
    coefficients = sympy.Poly(poly.as_expr(), SHIFT_E).all_coeffs()
    content = sympy.gcd_list([coefficient for coefficient in coefficients if coefficient != 0])
    reduced = sympy.Poly(sympy.cancel(poly.as_expr() / content), UPPER_Q, SHIFT_E)
    if sympy.Poly(reduced.as_expr(), SHIFT_E, UPPER_Q).LC() < 0:
        reduced = -reduced
    return reduced


def qfact_annihilators() -> Tuple[RecursionOperator, RecursionOperator]:
    """``(1 - qQ)(E - (1 - qQ))`` for ``(q)_n`` and ``(1 - qQ)E - 1`` for ``1/(q)_n``."""
    factorial = RecursionOperator(({(0, 0): -1, (1, 1): 2, (2, 2): -1},
                                   {(0, 0): 1, (1, 1): -1}))
    reciprocal = RecursionOperator(({(0, 0): -1}, {(0, 0): 1, (1, 1): -1}))
    return factorial, reciprocal


def qfact_values(n_max: int) -> List[LaurentPoly]:
    return [qfact(n).value for n in range(n_max + 1)]


@dataclass(frozen=True)
class AJReport:
    residuals: List[float]
    signs: List[int]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=float("inf"))

    def to_json(self) -> Dict[str, Any]:
        return {"max_residual": self.max_residual, "residuals": self.residuals,
                "signs": self.signs}


def _normalized(poly: sympy.Poly, big_q: complex, e: complex) -> float:
    terms = [complex(coeff) * big_q ** int(i) * e ** int(j)
             for (i, j), coeff in poly.terms()]
    scale = sum(abs(term) for term in terms)
    return abs(sum(terms)) / scale if scale else 0.0


def aj_check(diagram: Diagram, poly: sympy.Poly, solutions: Sequence[Any]) -> AJReport:
    """Evaluates ``poly(w_mu, s)`` at every gluing solution with both signs of ``s``.

    The residual is ``|P|`` over the sum of the absolute values of its terms. ``solutions`` are
    :class:`octajones.geometry.solver.GluingSolution` objects.
    """
    residuals, signs = [], []
    for solution in solutions:
        plus = _normalized(poly, solution.w_mu, solution.s_value)
        minus = _normalized(poly, solution.w_mu, -solution.s_value)
        residuals.append(min(plus, minus))
        signs.append(1 if plus <= minus else -1)
    report = AJReport(residuals=residuals, signs=signs)
    log.info("AJ check of %s over %d solutions: max residual %.3e", diagram.name or "diagram",
             len(solutions), report.max_residual)
    return report


def control_polynomial(poly: sympy.Poly, seed: int = 0) -> sympy.Poly:
    """A polynomial with the support of ``poly`` and random nonzero integer coefficients."""
    rng = np.random.default_rng(seed)
    expr = sympy.Integer(0)
    for (i, j), _ in poly.terms():
        value = int(rng.integers(1, 10)) * (1 if rng.random() < 0.5 else -1)
        expr += value * UPPER_Q ** int(i) * SHIFT_E ** int(j)
    return sympy.Poly(expr, UPPER_Q, SHIFT_E)
