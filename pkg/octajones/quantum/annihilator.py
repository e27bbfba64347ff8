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
"""Ratio operators of the colored Jones state summand and their ``q = 1`` limits.

A ratio operator is the closed form of ``summand(shifted) / summand`` for one of the shifts
``n -> n + 1`` (``E``), ``k0 -> k0 + 1`` (``E0``) and ``k_c -> k_c + 1`` (``E<c>``). It lives
over the lattice variables ``q``, ``Q = q^n``, ``Q0 = q^k0`` and ``Q<c> = q^k_c``; the color of
an arc is the monomial ``Q_a`` built like the gluing arc parameters, so ``psi`` turns ``Q_a``
into ``z_a``.
"""
from typing import Any, Dict, List, NamedTuple, Optional, Tuple
from fractions import Fraction
import logging
import random

from attr import dataclass

from ..algebra.factored import FactoredRational, Monomial, product
from ..algebra.laurent import LaurentPoly
from ..diagram import FULL_KNOT, Diagram
from ..errors import (InconsistentQStar, MatchFailure, PoleAtOne, PoleHit, ResidualQ,
                      ZeroInverse)
from ..geometry.gluing import (BASE, MU, crossing_var, loop_equation_by_winding,
                               random_points, region_equations, sqrt_s, variables)
from .state_sum import Coloring, enumerate_colorings, make_coloring, summand

log: logging.Logger = logging.getLogger("octajones.annihilator")

Q_VAR = "q"
N_VAR = "Q"
BASE_VAR = "Q0"

Sample = Tuple[int, Coloring]


def lattice_var(crossing: int) -> str:
    return f"Q{crossing}"


def lattice_arcs(diagram: Diagram) -> Dict[int, Monomial]:
    """``Q_[l, l+1]`` for every label ``l``, mirroring the gluing arc parameters."""
    diagram.require_labels()
    current = Monomial.var(BASE_VAR)
    arcs = {1: current}
    for label, step in enumerate(diagram.passes[1:], start=2):
        factor = Monomial.var(lattice_var(step.crossing))
        current = current * factor if step.over else current / factor
        arcs[label] = current
    return arcs


class ArcColors(NamedTuple):
    a: Monomial
    a_out: Monomial
    b: Monomial
    b_out: Monomial


def _crossing_colors(diagram: Diagram) -> Dict[int, ArcColors]:
    arcs = lattice_arcs(diagram)
    count = len(diagram.passes)
    return {crossing.id: ArcColors(a=arcs[(crossing.over_label - 2) % count + 1],
                                   a_out=arcs[crossing.over_label],
                                   b=arcs[(crossing.under_label - 2) % count + 1],
                                   b_out=arcs[crossing.under_label])
            for crossing in diagram.crossings}


def _om(mono: Monomial) -> FactoredRational:
    return FactoredRational.one_minus(mono)


def _fr(mono: Monomial) -> FactoredRational:
    return FactoredRational(mono)


@dataclass(frozen=True)
class RatioOperator:
    kind: str
    formula: FactoredRational
    crossing: Optional[int] = None
    qstar: Optional[Monomial] = None

    @property
    def name(self) -> str:
        return self.kind if self.crossing is None else f"E{self.crossing}"

    @property
    def full(self) -> FactoredRational:
        if self.qstar is None:
            raise InconsistentQStar(f"{self.name} has not been calibrated")
        return self.formula * self.qstar

    def shift(self, diagram: Diagram, n: int, coloring: Coloring) -> Sample:
        if self.kind == "E":
            return n + 1, coloring
        k0, shifts = coloring.k0, list(coloring.shifts)
        if self.kind == "E0":
            k0 += 1
        else:
            shifts[self.crossing - 1] += 1
            # the base arc [1, 2] lies on the loop of the crossing labeled 1
            if diagram.crossing(self.crossing).j == 1:
                k0 -= 1
        return n, make_coloring(diagram, k0, tuple(shifts))

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "formula": str(self.formula),
            "qstar": str(self.qstar) if self.qstar is not None else None,
        }


def ratio_E(diagram: Diagram) -> RatioOperator:
    q, big_q = Monomial.var(Q_VAR), Monomial.var(N_VAR)
    colors = _crossing_colors(diagram)
    factors = []
    for crossing in diagram.crossings:
        arc = colors[crossing.id]
        shift = Monomial.var(lattice_var(crossing.id))
        factors.append(_fr((arc.a * arc.b) ** Fraction(crossing.sign, 2)
                           * shift ** Fraction(-1, 2)))
        factors.append(_om(q * big_q / arc.a) / _om(q * big_q / arc.a_out))
    return RatioOperator(kind="E", formula=product(factors))


def ratio_E0(diagram: Diagram) -> RatioOperator:
    q, big_q = Monomial.var(Q_VAR), Monomial.var(N_VAR)
    colors = _crossing_colors(diagram)
    factors = []
    for crossing in diagram.crossings:
        arc = colors[crossing.id]
        factors.append(_fr((big_q / (arc.a * arc.b)) ** crossing.sign))
        factors.append(_om(big_q / arc.a_out) * _om(q * arc.b)
                       / (_om(big_q / arc.a) * _om(q * arc.b_out)))
    return RatioOperator(kind="E0", formula=product(factors))


def _f_factor(crossing_sign: int, first_over: bool, arc: ArcColors, shift: Monomial
              ) -> FactoredRational:
    q, big_q = Monomial.var(Q_VAR), Monomial.var(N_VAR)
    low = (arc.a * arc.b_out) ** Fraction(-1, 2)
    high = (arc.a_out * arc.b) ** Fraction(1, 2) / big_q
    if first_over:
        rest = _om(q * arc.b) * _om(big_q / arc.a_out) / _om(q * shift)
        lead = low if crossing_sign > 0 else -high
    else:
        rest = _om(arc.b_out) * _om(q * big_q / arc.a) / _om(q * shift)
        lead = high if crossing_sign > 0 else -low
    return _fr(lead) * rest


def ratio_Ec(diagram: Diagram, crossing: int) -> RatioOperator:
    """The ``k_c`` shift. Which of the two closed forms applies depends on whether the smaller
    label ``j`` of the crossing is an overpass."""
    q, big_q = Monomial.var(Q_VAR), Monomial.var(N_VAR)
    colors = _crossing_colors(diagram)
    current = diagram.crossing(crossing)
    first_over = current.first_is_over
    orientation = 1 if first_over else -1
    factors = [_f_factor(current.sign, first_over, colors[crossing],
                         Monomial.var(lattice_var(crossing)))]
    for label in range(current.j + 1, current.j_prime):
        step = diagram.pass_at(label)
        arc = colors[step.crossing]
        half = Fraction(orientation * diagram.crossing(step.crossing).sign, 2)
        if step.over:
            mono = (big_q / (arc.b * arc.b_out)) ** half
            if first_over:
                rest = _om(big_q / arc.a_out) / _om(big_q / arc.a)
            else:
                rest = _om(q * big_q / arc.a) / _om(q * big_q / arc.a_out)
        else:
            mono = (big_q / (arc.a * arc.a_out)) ** half
            if first_over:
                rest = _om(q * arc.b) / _om(q * arc.b_out)
            else:
                rest = _om(arc.b_out) / _om(arc.b)
        factors.append(_fr(mono) * rest)
    return RatioOperator(kind="Ec", crossing=crossing, formula=product(factors))


def ratio_operators(diagram: Diagram) -> List[RatioOperator]:
    return ([ratio_E(diagram), ratio_E0(diagram)]
            + [ratio_Ec(diagram, crossing.id) for crossing in diagram.crossings])


def specialize(expr: FactoredRational, n: int, coloring: Coloring
               ) -> Tuple[LaurentPoly, LaurentPoly]:
    """Numerator and denominator in ``v`` of ``expr`` at a lattice point.

    Raises :class:`ZeroInverse` when a denominator factor vanishes there.
    """
    bindings = {N_VAR: Monomial.var(Q_VAR, n), BASE_VAR: Monomial.var(Q_VAR, coloring.k0)}
    for index, shift in enumerate(coloring.shifts, start=1):
        bindings[lattice_var(index)] = Monomial.var(Q_VAR, shift)
    value = expr.substitute(bindings)
    if value.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()
    numerator = LaurentPoly.v_power(value.lead.doubled_exponents.get(Q_VAR, 0),
                                    value.lead.constant)
    denominator = LaurentPoly.one()
    for mono, exp in value.factors:
        base = LaurentPoly.one() - LaurentPoly.v_power(mono.doubled_exponents.get(Q_VAR, 0),
                                                       mono.constant)
        if exp > 0:
            numerator = numerator * base ** exp
        else:
            denominator = denominator * base ** -exp
    return numerator, denominator


class QuotientCheck(NamedTuple):
    n: int
    coloring: Coloring
    shifted: LaurentPoly
    scaled: LaurentPoly

    def qstar(self) -> Optional[Monomial]:
        """The monomial ``q^(m/2)`` with ``shifted == q^(m/2) * scaled``, if there is one."""
        if self.scaled.is_zero() or self.shifted.is_zero():
            return None
        offset = self.shifted.min_exponent - self.scaled.min_exponent
        ratio = (self.shifted.coefficient(self.shifted.min_exponent)
                 / self.scaled.coefficient(self.scaled.min_exponent))
        if self.shifted != self.scaled.shift(offset).scale(ratio):
            return None
        return Monomial(ratio, {Q_VAR: Fraction(offset, 2)})


def quotient_check(diagram: Diagram, op: RatioOperator, n: int, coloring: Coloring
                   ) -> Optional[QuotientCheck]:
    """Cross-multiplied comparison of ``summand(shift) * den`` with ``summand * num``.

    Returns ``None`` when the summand vanishes at either point or a denominator of the formula
    vanishes.
    """
    base = summand(diagram, n, coloring).value
    if base.is_zero():
        return None
    shifted_n, shifted_coloring = op.shift(diagram, n, coloring)
    shifted = summand(diagram, shifted_n, shifted_coloring).value
    if shifted.is_zero():
        return None
    try:
        numerator, denominator = specialize(op.formula, n, coloring)
    except ZeroInverse:
        return None
    return QuotientCheck(n, coloring, shifted * denominator, base * numerator)


def interior_samples(diagram: Diagram, op: RatioOperator, count: int = 10, n_min: int = 2,
                     n_max: int = 6, seed: int = 0) -> List[Sample]:
    """Lattice points where the summand, its shift and the formula's denominators are all
    nonzero, drawn reproducibly from ``n_min <= n <= n_max``."""
    rng = random.Random(seed)
    pool: List[Sample] = []
    for n in range(n_min, n_max + 1):
        candidates = list(enumerate_colorings(diagram, n))
        rng.shuffle(candidates)
        found = 0
        for coloring in candidates:
            if found == count:
                break
            if quotient_check(diagram, op, n, coloring) is not None:
                pool.append((n, coloring))
                found += 1
        if len(pool) >= 4 * count:
            break
    rng.shuffle(pool)
    chosen = pool[:count]
    log.debug("Picked %d of %d candidate samples for %s", len(chosen), len(pool), op.name)
    return chosen


def calibrate_qstar(diagram: Diagram, op: RatioOperator, samples: List[Sample]) -> Monomial:
    if len(samples) < 2:
        raise InconsistentQStar(f"{op.name}: calibration needs at least two samples")
    found: Optional[Monomial] = None
    for n, coloring in samples:
        check = quotient_check(diagram, op, n, coloring)
        if check is None:
            raise InconsistentQStar(f"{op.name}: sample n={n}, k={coloring.shifts} is not "
                                    "interior")
        qstar = check.qstar()
        if qstar is None:
            raise InconsistentQStar(f"{op.name}: quotient at n={n}, k0={coloring.k0}, "
                                    f"k={coloring.shifts} is not a monomial multiple")
        if found is None:
            found = qstar
        elif qstar != found:
            raise InconsistentQStar(f"{op.name}: q* = {qstar} at n={n}, k={coloring.shifts} "
                                    f"but {found} before")
    log.debug("q* for %s is %s", op.name, found)
    return found


def calibrated(diagram: Diagram, op: RatioOperator, samples: int = 10, n_max: int = 6,
               seed: int = 0) -> RatioOperator:
    chosen = interior_samples(diagram, op, count=samples, n_max=n_max, seed=seed)
    return RatioOperator(kind=op.kind, crossing=op.crossing, formula=op.formula,
                         qstar=calibrate_qstar(diagram, op, chosen))


def verify_ratio(diagram: Diagram, op: RatioOperator, samples: List[Sample]) -> bool:
    """Exact check of ``formula * q* == summand(shift) / summand`` at every sample."""
    for n, coloring in samples:
        check = quotient_check(diagram, op, n, coloring)
        if check is None:
            continue
        if check.shifted != check.scaled * LaurentPoly.v_power(
                op.qstar.doubled_exponents.get(Q_VAR, 0), op.qstar.constant):
            log.debug("%s fails at n=%d, k0=%d, k=%s", op.name, n, coloring.k0, coloring.shifts)
            return False
    return True


def ev_q1(expr: FactoredRational) -> FactoredRational:
    """Sets ``q = 1`` and keeps the other lattice variables free."""
    try:
        return expr.substitute({Q_VAR: Monomial()})
    except ZeroInverse as e:
        raise PoleAtOne(f"{expr} has a pole at q = 1") from e


def psi(expr: FactoredRational) -> FactoredRational:
    """``Q -> w_mu``, ``Q0 -> w0`` and ``Q<c> -> w<c>``."""
    if Q_VAR in expr.variables:
        raise ResidualQ(f"{expr} still depends on q")
    bindings = {N_VAR: Monomial.var(MU), BASE_VAR: Monomial.var(BASE)}
    for name in expr.variables:
        if name.startswith(N_VAR) and name[len(N_VAR):].isdigit() and name != BASE_VAR:
            bindings[name] = Monomial.var(crossing_var(int(name[len(N_VAR):])))
    return expr.substitute(bindings)


@dataclass(frozen=True)
class MatchEntry:
    generator: str
    expected: str
    lhs: FactoredRational
    rhs: FactoredRational
    symbolic: Optional[bool]
    residual: float
    qstar: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "generator": self.generator,
            "expected": self.expected,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "symbolic": self.symbolic,
            "residual": self.residual,
            "qstar": self.qstar,
        }


@dataclass(frozen=True)
class MatchReport:
    name: str
    entries: List[MatchEntry]
    tolerance: float

    @property
    def ok(self) -> bool:
        return all(entry.symbolic is not False and entry.residual < self.tolerance
                   for entry in self.entries)

    @property
    def max_residual(self) -> float:
        return max((entry.residual for entry in self.entries), default=0.0)

    def to_json(self) -> Dict[str, Any]:
        return {
            "diagram": self.name,
            "ok": self.ok,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "generators": [entry.to_json() for entry in self.entries],
        }


def _numeric_residual(generator: str, lhs: FactoredRational, rhs: FactoredRational,
                      points: List[Dict[str, complex]]) -> float:
    worst = 0.0
    for point in points:
        try:
            left = lhs.eval_complex(point, allow_half=not lhs.is_integral())
            right = rhs.eval_complex(point, allow_half=not rhs.is_integral())
        except PoleHit:
            log.debug("Skipping a pole of %s", generator)
            continue
        worst = max(worst, abs(left - right) / max(1.0, abs(right)))
    return worst


def verify_match(diagram: Diagram, points: int = 25, tolerance: float = 1e-9, samples: int = 4,
                 n_max: int = 4, seed: int = 0, symbolic: bool = True, strict: bool = True
                 ) -> MatchReport:
    """Checks that ``psi(ev_q1(R))`` is ``s``, ``psi(ev_q1(R0))`` is ``L0`` and
    ``psi(ev_q1(R<c>))`` is ``L<c>`` or its inverse, depending on whether the smaller label of
    ``c`` is an overpass.

    The canonical forms are compared when ``symbolic`` is set; the numeric comparison at
    ``points`` random points always runs. Raises :class:`MatchFailure` with a witness on the
    first generator that disagrees, unless ``strict`` is off.
    """
    name = diagram.name or "diagram"
    regions = region_equations(diagram)
    evaluation_points = random_points(variables(diagram), points, seed)
    entries = []
    for op in ratio_operators(diagram):
        op = calibrated(diagram, op, samples=samples, n_max=n_max, seed=seed)
        lhs = psi(ev_q1(op.full))
        if op.kind == "E":
            expected, rhs = "s", sqrt_s(diagram)
        elif op.kind == "E0":
            expected, rhs = "L0", loop_equation_by_winding(diagram, FULL_KNOT, regions)
        else:
            loop = loop_equation_by_winding(diagram, op.crossing, regions)
            if diagram.crossing(op.crossing).first_is_over:
                expected, rhs = f"L{op.crossing}", loop
            else:
                expected, rhs = f"1/L{op.crossing}", loop.inverse()
        equal = (lhs == rhs) if symbolic else None
        residual = _numeric_residual(op.name, lhs, rhs, evaluation_points)
        entry = MatchEntry(generator=op.name, expected=expected, lhs=lhs, rhs=rhs,
                           symbolic=equal, residual=residual, qstar=str(op.qstar))
        entries.append(entry)
        if strict and (equal is False or residual >= tolerance):
            witness = {"lhs": str(lhs), "rhs": str(rhs), "residual": residual,
                       "point": {key: [value.real, value.imag]
                                 for key, value in evaluation_points[0].items()}}
            raise MatchFailure(op.name, f"psi(ev(R)) differs from {expected} on {name}",
                               witness)
        log.debug("%s matches %s on %s (residual %.2e)", op.name, expected, name, residual)
    report = MatchReport(name=name, entries=entries, tolerance=tolerance)
    log.info("%d generators checked on %s, max residual %.2e", len(entries), name,
             report.max_residual)
    return report
