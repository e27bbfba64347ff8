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
"""Gluing equations of the octahedral decomposition of a knot diagram.

Everything is expressed in the reduced variables ``w_mu`` (meridian), ``w0`` (base arc) and
one ``w<c>`` per crossing. The arc parameter of ``[1, 2]`` is ``w0`` and passing over (under)
crossing ``c`` multiplies (divides) it by ``w<c>``.
"""
from typing import Any, Dict, List, Optional, Tuple
from fractions import Fraction
import logging

from attr import dataclass
import numpy as np
import sympy

from ..algebra.factored import FactoredRational, Monomial, product, shape_triple
from ..diagram import FULL_KNOT, Diagram, loop_of_crossing, writhe
from ..errors import NonIntegralExponent, PoleHit, VerificationError

log: logging.Logger = logging.getLogger("octajones.gluing")

MU = "w_mu"
BASE = "w0"
PRIME, DOUBLE_PRIME = 1, 2

# (sign, upper strand, lower strand) -> which of z'/z'' to take for (w, upper, lower)
CORNER_RULE: Dict[Tuple[int, str, str], Tuple[int, int, int]] = {
    (1, "uo", "lo"): (PRIME, DOUBLE_PRIME, DOUBLE_PRIME),
    (1, "uo", "li"): (DOUBLE_PRIME, PRIME, PRIME),
    (1, "ui", "li"): (PRIME, DOUBLE_PRIME, DOUBLE_PRIME),
    (1, "ui", "lo"): (DOUBLE_PRIME, PRIME, PRIME),
    (-1, "uo", "lo"): (DOUBLE_PRIME, PRIME, PRIME),
    (-1, "uo", "li"): (PRIME, DOUBLE_PRIME, DOUBLE_PRIME),
    (-1, "ui", "li"): (DOUBLE_PRIME, PRIME, PRIME),
    (-1, "ui", "lo"): (PRIME, DOUBLE_PRIME, DOUBLE_PRIME),
}


def crossing_var(crossing: int) -> str:
    return f"w{crossing}"


def variables(diagram: Diagram) -> List[str]:
    return [MU, BASE] + [crossing_var(c.id) for c in diagram.crossings]


def arc_parameters(diagram: Diagram) -> Dict[int, Monomial]:
    """Monomial ``z_[l, l+1]`` for every label ``l``."""
    diagram.require_labels()
    current = Monomial.var(BASE)
    params = {1: current}
    for label, step in enumerate(diagram.passes[1:], start=2):
        factor = Monomial.var(crossing_var(step.crossing))
        current = current * factor if step.over else current / factor
        params[label] = current
    return params


def _om(mono: Monomial, exponent: int = 1) -> FactoredRational:
    return FactoredRational.one_minus(mono, exponent)


def _fr(mono: Monomial) -> FactoredRational:
    return FactoredRational(mono)


@dataclass(frozen=True)
class CrossingShapes:
    crossing: int
    sign: int
    z_a: Monomial
    z_a_out: Monomial
    z_b: Monomial
    z_b_out: Monomial
    w: FactoredRational
    z_ui: FactoredRational
    z_uo: FactoredRational
    z_li: FactoredRational
    z_lo: FactoredRational

    @property
    def w_var(self) -> Monomial:
        return self.w.lead

    def shape(self, strand: str) -> FactoredRational:
        return {"w": self.w, "ui": self.z_ui, "uo": self.z_uo, "li": self.z_li,
                "lo": self.z_lo}[strand]

    def triple(self, strand: str) -> Tuple[FactoredRational, FactoredRational, FactoredRational]:
        return shape_triple(self.shape(strand))


def build_shapes(diagram: Diagram) -> Dict[int, CrossingShapes]:
    params = arc_parameters(diagram)
    count = len(diagram.passes)
    mu = Monomial.var(MU)
    shapes = {}
    for crossing in diagram.crossings:
        z_a = params[(crossing.over_label - 2) % count + 1]
        z_a_out = params[crossing.over_label]
        z_b = params[(crossing.under_label - 2) % count + 1]
        z_b_out = params[crossing.under_label]
        shapes[crossing.id] = CrossingShapes(
            crossing=crossing.id, sign=crossing.sign, z_a=z_a, z_a_out=z_a_out, z_b=z_b,
            z_b_out=z_b_out, w=FactoredRational.var(crossing_var(crossing.id)),
            z_ui=_fr(z_a / mu), z_uo=_fr(mu / z_a_out), z_li=_fr(z_b.inverse()), z_lo=_fr(z_b_out))
    return shapes


def check_triangles(shapes: Dict[int, CrossingShapes]) -> None:
    for current in shapes.values():
        if not (current.w * current.z_ui * current.z_uo).is_one() \
                or not (current.w * current.z_li * current.z_lo).is_one():
            raise VerificationError(f"triangle relation fails at crossing {current.crossing}")


def corner_factor(diagram: Diagram, crossing: int, position: int,
                  shapes: Optional[Dict[int, CrossingShapes]] = None) -> FactoredRational:
    """Product of the three spine corners at the diagram corner between ``position`` and
    ``position + 1``."""
    shapes = shapes or build_shapes(diagram)
    current = diagram.crossing(crossing)
    strands = (current.strand(position), current.strand((position + 1) % 4))
    upper = next(strand for strand in strands if strand[0] == "u")
    lower = next(strand for strand in strands if strand[0] == "l")
    kinds = CORNER_RULE[(current.sign, upper, lower)]
    parts = shapes[crossing]
    return product(shape_triple(value)[kind]
                   for value, kind in zip((parts.w, parts.shape(upper), parts.shape(lower)),
                                          kinds))


def big_region_equation(diagram: Diagram, face: int,
                        shapes: Optional[Dict[int, CrossingShapes]] = None) -> FactoredRational:
    shapes = shapes or build_shapes(diagram)
    return product(corner_factor(diagram, crossing, position, shapes)
                   for crossing, position in diagram.faces[face])


def region_equations(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
                     ) -> List[FactoredRational]:
    shapes = shapes or build_shapes(diagram)
    return [big_region_equation(diagram, face, shapes) for face in range(len(diagram.faces))]


def loop_equation_by_winding(diagram: Diagram, crossing: int,
                             regions: Optional[List[FactoredRational]] = None
                             ) -> FactoredRational:
    """``prod r_i ^ w(loop, face_i)``."""
    regions = regions or region_equations(diagram)
    loop = loop_of_crossing(diagram, crossing)
    return product(region ** winding for region, winding in zip(regions, loop.winding)
                   if winding)


def _loop_zero_closed_form(shapes: Dict[int, CrossingShapes]) -> FactoredRational:
    mu = Monomial.var(MU)
    factors = []
    for current in shapes.values():
        factors.append(_fr((mu / (current.z_a * current.z_b)) ** current.sign))
        factors.append(_om(mu / current.z_a_out) * _om(current.z_b)
                       / (_om(mu / current.z_a) * _om(current.z_b_out)))
    return product(factors)


def _k_factor(diagram: Diagram, shapes: Dict[int, CrossingShapes], crossing: int,
              symmetric: bool) -> FactoredRational:
    current = diagram.crossing(crossing)
    parts = shapes[crossing]
    mu = Monomial.var(MU)
    first_over = current.first_is_over
    if first_over:
        rest = _om(mu / parts.z_a_out) * _om(parts.z_b) / _om(parts.w_var)
    else:
        rest = _om(parts.w_var) / (_om(mu / parts.z_a) * _om(parts.z_b_out))
    if first_over and parts.sign > 0:
        lead = (parts.z_a * parts.z_b_out) ** Fraction(-1, 2) if symmetric \
            else parts.z_b_out.inverse()
    elif first_over:
        lead = -((parts.z_a_out * parts.z_b) ** Fraction(1, 2) if symmetric
                 else parts.z_a_out) / mu
    elif parts.sign > 0:
        lead = mu * ((parts.z_a_out * parts.z_b) ** Fraction(-1, 2) if symmetric
                     else parts.z_a_out.inverse())
    else:
        lead = -((parts.z_a * parts.z_b_out) ** Fraction(1, 2) if symmetric
                 else parts.z_b_out)
    return _fr(lead) * rest


def loop_equation_closed_form(diagram: Diagram, crossing: int, symmetric: bool = False,
                              shapes: Optional[Dict[int, CrossingShapes]] = None
                              ) -> FactoredRational:
    """The loop equation read off the labels.

    For a crossing ``c`` with labels ``j < j'`` this is a four-case factor ``K_c`` times one
    factor per pass strictly between ``j`` and ``j'``. With ``symmetric`` the monomial parts
    are split into square roots ``(w_mu / (z z'))^(e/2)``, which must give the same result.
    """
    shapes = shapes or build_shapes(diagram)
    if crossing == FULL_KNOT:
        return _loop_zero_closed_form(shapes)
    current = diagram.crossing(crossing)
    mu = Monomial.var(MU)
    factors = [_k_factor(diagram, shapes, crossing, symmetric)]
    for label in range(current.j + 1, current.j_prime):
        step = diagram.pass_at(label)
        parts = shapes[step.crossing]
        sign = parts.sign
        if step.over:
            if symmetric:
                mono = (mu / (parts.z_b * parts.z_b_out)) ** Fraction(sign, 2)
            else:
                mono = parts.z_b ** ((1 - sign) // 2) / parts.z_b_out ** ((1 + sign) // 2)
            factors.append(_fr(mono) * _om(mu / parts.z_a_out) / _om(mu / parts.z_a))
        else:
            if symmetric:
                mono = (mu / (parts.z_a * parts.z_a_out)) ** Fraction(sign, 2)
            else:
                mono = (mu ** sign * parts.z_a ** ((1 - sign) // 2)
                        / parts.z_a_out ** ((1 + sign) // 2))
            factors.append(_fr(mono) * _om(parts.z_b) / _om(parts.z_b_out))
    return product(factors)


def holonomy_meridian(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
                      ) -> FactoredRational:
    """``z_lo`` of the crossing labeled 1 over ``z_ui`` of the crossing labeled 2."""
    shapes = shapes or build_shapes(diagram)
    first = shapes[diagram.pass_at(1).crossing]
    second = shapes[diagram.pass_at(2).crossing]
    return first.z_lo / second.z_ui


def blackboard_longitude(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
                         ) -> FactoredRational:
    """``prod z_uo'' z_ui' / (z_lo' z_li'')``, the longitude with blackboard framing."""
    shapes = shapes or build_shapes(diagram)
    factors = []
    for parts in shapes.values():
        upper = shape_triple(parts.z_uo)[DOUBLE_PRIME] * shape_triple(parts.z_ui)[PRIME]
        lower = shape_triple(parts.z_lo)[PRIME] * shape_triple(parts.z_li)[DOUBLE_PRIME]
        factors.append(upper / lower)
    return product(factors)


def holonomy_longitude(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
                       ) -> FactoredRational:
    """The zero-winding longitude ``w_mu^-wr * prod w (1 - w_mu/z_a')/(1 - w_mu/z_a)
    (1 - z_b')/(1 - z_b)``, checked against the blackboard form."""
    shapes = shapes or build_shapes(diagram)
    mu = Monomial.var(MU)
    wr = writhe(diagram)
    factors = [FactoredRational(mu ** -wr)]
    for parts in shapes.values():
        factors.append(parts.w * _om(mu / parts.z_a_out) * _om(parts.z_b_out)
                       / (_om(mu / parts.z_a) * _om(parts.z_b)))
    longitude = product(factors)
    blackboard = blackboard_longitude(diagram, shapes)
    if longitude * FactoredRational(mu ** wr) != blackboard:
        raise VerificationError(f"longitude forms disagree for {diagram.name or 'diagram'}: "
                                f"{longitude} vs {blackboard}")
    return longitude


def sqrt_s(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
           ) -> FactoredRational:
    """The square root ``s`` of ``1 / (w_lambda L_0)``."""
    shapes = shapes or build_shapes(diagram)
    mu = Monomial.var(MU)
    factors = []
    for parts in shapes.values():
        factors.append(_om(mu / parts.z_a) / _om(mu / parts.z_a_out))
        factors.append(_fr(parts.w_var ** Fraction(-1, 2)
                           * (parts.z_a * parts.z_b) ** Fraction(parts.sign, 2)))
    s = product(factors)
    if not s.is_integral():
        raise NonIntegralExponent(f"s = {s} has half-integer exponents")
    check = s ** 2 * holonomy_longitude(diagram, shapes) * loop_equation_closed_form(
        diagram, FULL_KNOT, shapes=shapes)
    if not check.is_one():
        raise VerificationError(f"s^2 w_lambda L_0 = {check} instead of 1")
    return s


@dataclass(frozen=True)
class ShingleCheck:
    kind: str
    start: int
    end: int
    holds: bool


@dataclass(frozen=True)
class ShingleReport:
    checks: Tuple[ShingleCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.holds for check in self.checks)


def _arcs_between(diagram: Diagram, over: bool) -> List[Tuple[int, int]]:
    """``(start, end)`` labels of every overarc (``over=True``) or underarc.

    An overarc leaves an underpass and runs over crossings until the next underpass.
    """
    count = len(diagram.passes)
    starts = [label for label in range(1, count + 1) if diagram.pass_at(label).over != over]
    result = []
    for start in starts:
        end = start + 1
        while diagram.pass_at(end).over == over:
            end += 1
        result.append((start, end))
    return result


def shingle_check(diagram: Diagram, shapes: Optional[Dict[int, CrossingShapes]] = None
                  ) -> ShingleReport:
    """Upper and lower shingle equations, both as raw corner products and in the reduced
    forms expressing ``z_n`` through ``z_1`` and the intermediate ``w``."""
    shapes = shapes or build_shapes(diagram)
    checks = []
    for over in (True, False):
        for start, end in _arcs_between(diagram, over):
            first = shapes[diagram.pass_at(start).crossing]
            last = shapes[diagram.pass_at(end).crossing]
            middle = [shapes[diagram.pass_at(label).crossing] for label in range(start + 1, end)]
            inner = product(parts.w for parts in middle)
            inner_inv = inner.inverse()
            if over:
                raw = first.z_lo * last.z_li * product(
                    shape_triple(parts.z_ui)[PRIME] * shape_triple(parts.z_ui)[DOUBLE_PRIME]
                    * shape_triple(parts.z_uo)[PRIME] * shape_triple(parts.z_uo)[DOUBLE_PRIME]
                    for parts in middle)
                forms = (last.z_lo == first.z_lo / last.w * inner,
                         last.z_li == first.z_li * first.w * inner_inv)
            else:
                raw = first.z_uo * last.z_ui * product(
                    shape_triple(parts.z_li)[PRIME] * shape_triple(parts.z_li)[DOUBLE_PRIME]
                    * shape_triple(parts.z_lo)[PRIME] * shape_triple(parts.z_lo)[DOUBLE_PRIME]
                    for parts in middle)
                forms = (last.z_ui == first.z_ui * first.w * inner_inv,
                         last.z_uo == first.z_uo / last.w * inner)
            checks.append(ShingleCheck(kind="upper" if over else "lower", start=start,
                                       end=end % len(diagram.passes) or len(diagram.passes),
                                       holds=raw.is_one() and all(forms)))
    return ShingleReport(checks=tuple(checks))


@dataclass(frozen=True)
class UnimodularityReport:
    matrix: Tuple[Tuple[int, ...], ...]
    determinant: int
    rank: int

    @property
    def ok(self) -> bool:
        return abs(self.determinant) == 1


def basis_unimodularity(diagram: Diagram) -> UnimodularityReport:
    """Winding numbers of the knot and of every crossing loop around the bounded faces."""
    faces = [face for face in range(len(diagram.faces)) if face != diagram.outer_face]
    rows = []
    for crossing in [FULL_KNOT] + [c.id for c in diagram.crossings]:
        winding = loop_of_crossing(diagram, crossing).winding
        rows.append(tuple(winding[face] for face in faces))
    matrix = sympy.Matrix(rows)
    return UnimodularityReport(matrix=tuple(rows), determinant=int(matrix.det()),
                               rank=int(matrix.rank()))


@dataclass(frozen=True)
class GluingSystem:
    variables: Tuple[str, ...]
    shapes: Dict[int, CrossingShapes]
    regions: Tuple[FactoredRational, ...]
    loops: Dict[int, FactoredRational]
    loop_zero: FactoredRational
    meridian: FactoredRational
    longitude: FactoredRational
    sqrt_s: FactoredRational

    def equations(self) -> List[FactoredRational]:
        """``L_0`` followed by ``L_c`` in crossing order; the system is ``each == 1``."""
        return [self.loop_zero] + [self.loops[c] for c in sorted(self.loops)]

    def to_json(self) -> Dict[str, Any]:
        return {
            "variables": list(self.variables),
            "L0": str(self.loop_zero),
            "L": {str(c): str(value) for c, value in sorted(self.loops.items())},
            "w_lambda": str(self.longitude),
            "s": str(self.sqrt_s),
            "factored": {
                "L0": self.loop_zero.to_json(),
                "L": {str(c): value.to_json() for c, value in sorted(self.loops.items())},
                "w_lambda": self.longitude.to_json(),
                "s": self.sqrt_s.to_json(),
            },
        }


def build_gluing_system(diagram: Diagram) -> GluingSystem:
    diagram.require_labels()
    shapes = build_shapes(diagram)
    check_triangles(shapes)
    regions = region_equations(diagram, shapes)
    loops = {c.id: loop_equation_closed_form(diagram, c.id, shapes=shapes)
             for c in diagram.crossings}
    meridian = holonomy_meridian(diagram, shapes)
    if meridian != FactoredRational.var(MU):
        raise VerificationError(f"meridian holonomy is {meridian} instead of {MU}")
    log.info("Built gluing system of %s with %d variables", diagram.name or "diagram",
             len(variables(diagram)))
    return GluingSystem(variables=tuple(variables(diagram)), shapes=shapes,
                        regions=tuple(regions), loops=loops,
                        loop_zero=loop_equation_closed_form(diagram, FULL_KNOT, shapes=shapes),
                        meridian=meridian, longitude=holonomy_longitude(diagram, shapes),
                        sqrt_s=sqrt_s(diagram, shapes))


@dataclass(frozen=True)
class LoopComparison:
    crossing: int
    by_winding: FactoredRational
    closed_form: FactoredRational
    symmetric_form: FactoredRational

    @property
    def equal(self) -> bool:
        return self.by_winding == self.closed_form == self.symmetric_form


def compare_loop_forms(diagram: Diagram) -> List[LoopComparison]:
    """Builds every loop equation from the region equations and from the closed forms."""
    shapes = build_shapes(diagram)
    regions = region_equations(diagram, shapes)
    result = []
    for crossing in [FULL_KNOT] + [c.id for c in diagram.crossings]:
        closed = loop_equation_closed_form(diagram, crossing, shapes=shapes)
        symmetric = closed if crossing == FULL_KNOT else loop_equation_closed_form(
            diagram, crossing, symmetric=True, shapes=shapes)
        comparison = LoopComparison(crossing=crossing,
                                    by_winding=loop_equation_by_winding(diagram, crossing,
                                                                        regions),
                                    closed_form=closed, symmetric_form=symmetric)
        if not comparison.equal:
            log.warning("Loop equation of %s at %s differs between constructions",
                        diagram.name or "diagram", crossing)
        result.append(comparison)
    return result


def random_points(names: List[str], count: int, seed: int = 0,
                  radius: Tuple[float, float] = (0.5, 2.0)) -> List[Dict[str, complex]]:
    """Points ``r e^(i theta)`` with ``r`` uniform in ``radius``."""
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        moduli = rng.uniform(radius[0], radius[1], len(names))
        angles = rng.uniform(0, 2 * np.pi, len(names))
        values = moduli * np.exp(1j * angles)
        points.append({name: complex(value) for name, value in zip(names, values)})
    return points


def numeric_loop_residual(comparisons: List[LoopComparison], names: List[str], count: int = 25,
                          seed: int = 0) -> float:
    """Largest relative difference of the loop equation constructions at random points."""
    worst = 0.0
    for point in random_points(names, count, seed):
        for comparison in comparisons:
            try:
                reference = comparison.by_winding.eval_complex(point)
                for other in (comparison.closed_form, comparison.symmetric_form):
                    worst = max(worst, abs(other.eval_complex(point) - reference)
                                / max(1.0, abs(reference)))
            except PoleHit:
                continue
    return worst
