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
from typing import Dict, List, Tuple
from collections import deque
from fractions import Fraction
import logging

from attr import dataclass

from ..errors import VerificationError
from .pd import Diagram

log: logging.Logger = logging.getLogger("octajones.diagram")

FULL_KNOT = 0


@dataclass(frozen=True)
class LoopClass:
    crossing: int
    arcs: Tuple[int, ...]
    winding: Tuple[int, ...]

    def winding_of(self, face: int) -> int:
        return self.winding[face]


@dataclass(frozen=True)
class LemmaReport:
    crossing: int
    lhs_under_sum: int
    half_sign_sum: Fraction
    wr_gamma_plus_lk: int

    @property
    def holds(self) -> bool:
        return self.lhs_under_sum == self.half_sign_sum == self.wr_gamma_plus_lk


def loop_arcs(diagram: Diagram, crossing: int) -> Tuple[int, ...]:
    """Labels ``l`` of the arcs ``[l, l+1]`` making up the loop of a crossing (0: the knot)."""
    diagram.require_labels()
    if crossing == FULL_KNOT:
        return tuple(range(1, len(diagram.passes) + 1))
    current = diagram.crossing(crossing)
    return tuple(range(current.j, current.j_prime))


def winding_numbers(diagram: Diagram, arcs: Tuple[int, ...]) -> Tuple[int, ...]:
    """Winding number of the closed curve made of ``arcs`` around each face.

    The outer face has winding 0 and crossing an arc of the curve from its right to its left
    side adds one.
    """
    inside = {diagram.arc_of_label(label) for label in arcs}
    step: Dict[int, List[Tuple[int, int]]] = {face: [] for face in range(len(diagram.faces))}
    for arc in diagram.ends:
        left, right = diagram.left_face(arc), diagram.right_face(arc)
        delta = 1 if arc in inside else 0
        step[right].append((left, delta))
        step[left].append((right, -delta))
    winding = {diagram.outer_face: 0}
    queue = deque([diagram.outer_face])
    while queue:
        face = queue.popleft()
        for neighbor, delta in step[face]:
            value = winding[face] + delta
            if neighbor not in winding:
                winding[neighbor] = value
                queue.append(neighbor)
            elif winding[neighbor] != value:
                raise VerificationError(f"winding number of face {neighbor} is not well-defined")
    return tuple(winding[face] for face in range(len(diagram.faces)))


def loop_of_crossing(diagram: Diagram, crossing: int) -> LoopClass:
    arcs = loop_arcs(diagram, crossing)
    return LoopClass(crossing=crossing, arcs=arcs, winding=winding_numbers(diagram, arcs))


def _sign_of_pass(diagram: Diagram, label: int) -> int:
    return diagram.crossing(diagram.pass_at(label).crossing).sign


def check_writhe_linking_lemma(diagram: Diagram, crossing: int) -> LemmaReport:
    """Evaluates three expressions that agree for every crossing of a planar diagram.

    For a crossing with labels ``j < j'`` and the loop ``g`` through passes ``j+1..j'-1``:
    the signs of the underpasses of the loop, half of all its pass signs, and the writhe of
    ``g`` plus its linking number with the rest of the knot, counted where the rest passes
    under ``g``.
    """
    current = diagram.crossing(crossing)
    inner = range(current.j + 1, current.j_prime)
    inside = set(inner)
    under_sum = sum(_sign_of_pass(diagram, label) for label in inner
                    if not diagram.pass_at(label).over)
    half_sum = Fraction(sum(_sign_of_pass(diagram, label) for label in inner), 2)
    self_writhe = 0
    linking = 0
    for other in diagram.crossings:
        over, under = other.over_label in inside, other.under_label in inside
        if over and under:
            self_writhe += other.sign
        elif over:
            linking += other.sign
    report = LemmaReport(crossing=crossing, lhs_under_sum=under_sum, half_sign_sum=half_sum,
                         wr_gamma_plus_lk=self_writhe + linking)
    if not report.holds:
        log.warning("Writhe/linking identity fails at crossing %d of %s: %s", crossing,
                    diagram.name or "diagram", report)
    return report
