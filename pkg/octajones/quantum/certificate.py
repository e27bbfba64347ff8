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
"""Checking telescoping certificates of the state summand.

A certificate is ``P = P~(E, Q) + sum_i (E_i - 1) R_i`` where ``E_i`` shifts ``k0`` (``i = 0``) or
``k_c``. If ``P`` kills the summand then summing over ``k`` telescopes the ``R_i`` part away,
so ``phi(P) = P~`` kills the colored Jones polynomial.
"""
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple
from fractions import Fraction
import itertools
import logging

from attr import dataclass

from ..algebra.laurent import LaurentPoly
from ..diagram import Diagram
from .recursion import RecursionOperator, verify_recursion
from .state_sum import colored_jones_table, is_admissible, make_coloring, summand

log: logging.Logger = logging.getLogger("octajones.recursion")

Point = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class ShiftTerm:
    """``coefficient(q, Q, Q0, Q1, ...) * E^shift``.

    ``coefficient`` maps exponent tuples over ``(q, Q, Q0, Q1, ...)`` to integers and ``shift``
    is ``(n, k0, k1, ...)``.
    """

    coefficient: Dict[Tuple[int, ...], int]
    shift: Tuple[int, ...]

    def coefficient_at(self, n: int, k: Tuple[int, ...]) -> LaurentPoly:
        point = (1, n) + k
        terms: Dict[int, Fraction] = {}
        for exps, value in self.coefficient.items():
            exp = 2 * sum(e * x for e, x in zip(exps, point))
            terms[exp] = terms.get(exp, 0) + value
        return LaurentPoly(terms)


@dataclass(frozen=True)
class CertificateOperator:
    main: RecursionOperator
    parts: Dict[int, List[ShiftTerm]]

    @classmethod
    def lift(cls, op: RecursionOperator) -> 'CertificateOperator':
        return cls(main=op, parts={})

    @classmethod
    def trivial(cls, diagram: Diagram) -> 'CertificateOperator':
        """``(E0 - 1) * 1``, which telescopes but has ``phi(P) = 0``."""
        size = diagram.crossing_count
        unit = ShiftTerm({(0,) * (size + 3): 1}, (0,) * (size + 2))
        return cls(main=RecursionOperator(({},)), parts={0: [unit]})

    @property
    def reach(self) -> int:
        shifts = [abs(value) for terms in self.parts.values() for term in terms
                  for value in term.shift]
        return max(shifts, default=0) + 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "main": self.main.to_json(),
            "parts": {str(index): [{"coefficient": [[*exps, value]
                                                    for exps, value in term.coefficient.items()],
                                    "shift": list(term.shift)} for term in terms]
                      for index, terms in self.parts.items()},
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'CertificateOperator':
        parts = {int(index): [ShiftTerm({tuple(row[:-1]): row[-1] for row in term["coefficient"]},
                                        tuple(term["shift"])) for term in terms]
                 for index, terms in data.get("parts", {}).items()}
        return cls(main=RecursionOperator.from_json(data["main"]), parts=parts)


class _Summand:
    def __init__(self, diagram: Diagram) -> None:
        self.diagram = diagram
        self.cache: Dict[Point, LaurentPoly] = {}

    def __call__(self, n: int, k: Tuple[int, ...]) -> LaurentPoly:
        try:
            return self.cache[(n, k)]
        except KeyError:
            pass
        value = LaurentPoly.zero()
        if n >= 0 and all(shift >= 0 for shift in k[1:]):
            coloring = make_coloring(self.diagram, k[0], k[1:])
            if is_admissible(coloring, n):
                value = summand(self.diagram, n, coloring).value
        self.cache[(n, k)] = value
        return value


def _apply_terms(terms: List[ShiftTerm], summand_at: _Summand, n: int, k: Tuple[int, ...]
                 ) -> LaurentPoly:
    total = LaurentPoly.zero()
    for term in terms:
        shifted_n = n + term.shift[0]
        shifted_k = tuple(a + b for a, b in zip(k, term.shift[1:]))
        value = summand_at(shifted_n, shifted_k)
        if value:
            total = total + term.coefficient_at(n, k) * value
    return total


def _telescoping_part(cert: CertificateOperator, summand_at: _Summand, n: int,
                      k: Tuple[int, ...]) -> LaurentPoly:
    total = LaurentPoly.zero()
    for index, terms in cert.parts.items():
        moved = tuple(value + (1 if i == index else 0) for i, value in enumerate(k))
        total = (total + _apply_terms(terms, summand_at, n, moved)
                 - _apply_terms(terms, summand_at, n, k))
    return total


def apply_certificate(cert: CertificateOperator, summand_at: _Summand, n: int,
                      k: Tuple[int, ...]) -> LaurentPoly:
    total = _telescoping_part(cert, summand_at, n, k)
    for j, coefficient in enumerate(cert.main.coefficients):
        if coefficient:
            total = total + cert.main.coefficient_at(j, n) * summand_at(n + j, k)
    return total


def _box(diagram: Diagram, n: int, margin: int) -> Iterator[Tuple[int, ...]]:
    side = range(-margin, n + margin + 1)
    return itertools.product(side, repeat=diagram.crossing_count + 1)


@dataclass(frozen=True)
class CertificateReport:
    summand_ok: bool
    telescopes: bool
    phi_ok: bool
    good: bool
    points: int

    @property
    def ok(self) -> bool:
        return self.summand_ok and self.phi_ok

    def to_json(self) -> Dict[str, Any]:
        return {"ok": self.ok, "summand_ok": self.summand_ok, "telescopes": self.telescopes,
                "phi_ok": self.phi_ok, "good": self.good, "points": self.points}


def verify_certificate(cert: CertificateOperator, diagram: Diagram,
                       samples: Optional[Sequence[Point]] = None, n_max: int = 2,
                       values: Optional[Sequence[LaurentPoly]] = None) -> CertificateReport:
    """Checks ``P w = 0`` at the sample points (by default every point of a box around the
    support for ``n <= n_max``), that the ``(E_i - 1) R_i`` part sums to zero over ``k``, and
    that ``phi(P)`` kills the colored Jones values."""
    summand_at = _Summand(diagram)
    margin = cert.reach
    if samples is None:
        samples = [(n, k) for n in range(n_max + 1) for k in _box(diagram, n, margin)]
    summand_ok = all(not apply_certificate(cert, summand_at, n, k) for n, k in samples)
    telescopes = True
    for n in sorted({n for n, _ in samples}):
        total = LaurentPoly.zero()
        for k in _box(diagram, n, margin):
            total = total + _telescoping_part(cert, summand_at, n, k)
        telescopes = telescopes and not total
    good = not cert.main.is_zero
    if good:
        if values is None:
            values = list(colored_jones_table(diagram, cert.main.order + 6).values())
        phi_ok = verify_recursion(cert.main, values)
    else:
        phi_ok = True
    report = CertificateReport(summand_ok=summand_ok, telescopes=telescopes, phi_ok=phi_ok,
                               good=good, points=len(samples))
    log.debug("Certificate report for %s: %s", diagram.name or "diagram", report)
    return report
