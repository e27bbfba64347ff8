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
"""Faces of the diagram on the sphere and turning numbers of its arcs."""
from typing import Dict, List, Optional, Sequence, Tuple, TYPE_CHECKING
from collections import deque
from fractions import Fraction
import logging

from ..errors import NonPlanar, VerificationError
from .labeling import PDTuple, Port, other_end

if TYPE_CHECKING:
    from .pd import Diagram

log: logging.Logger = logging.getLogger("octajones.diagram")

Face = Tuple[Port, ...]


def trace_faces(code: Sequence[PDTuple], ends: Dict[int, Tuple[Port, Port]]
                ) -> Tuple[Face, ...]:
    """Corner ``(c, p)`` sits between positions ``p`` and ``p + 1`` of crossing ``c``.

    The next corner of the same face is found by following the arc at position ``p`` to its
    other end ``(c', q)`` and taking corner ``(c', q - 1)``.
    """
    seen = set()
    faces: List[Face] = []
    for index in range(len(code)):
        for position in range(4):
            if (index + 1, position) in seen:
                continue
            face = []
            corner = (index + 1, position)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                crossing, at = corner
                next_crossing, next_at = other_end(ends, code[crossing - 1][at], corner)
                corner = (next_crossing, (next_at - 1) % 4)
            faces.append(tuple(face))
    if code and len(faces) != len(code) + 2:
        raise NonPlanar(f"{len(code)} crossings give {len(faces)} faces instead of "
                        f"{len(code) + 2}")
    return tuple(faces)


def default_outer_face(faces: Sequence[Face]) -> int:
    best = 0
    for index, face in enumerate(faces):
        if len(face) > len(faces[best]):
            best = index
    return best


def port_angle(sign: int, position: int) -> int:
    """Direction in degrees of the half-strand at a position of an upright crossing."""
    return ((315 if sign > 0 else 225) + 90 * position) % 360


def _turn(diagram: 'Diagram', arc: int) -> Fraction:
    start, end = diagram.out_port(arc), diagram.in_port(arc)
    leaving = port_angle(diagram.crossing(start[0]).sign, start[1])
    arriving = port_angle(diagram.crossing(end[0]).sign, end[1])
    degrees = (arriving + 180 - leaving) % 360
    if degrees > 180:
        degrees -= 360
    return Fraction(degrees, 360)


def rotation_numbers(diagram: 'Diagram', outer_face: Optional[int] = None) -> Dict[int, int]:
    """Signed number of full turns of each arc in an upright rectified embedding.

    The total turning ``t_e`` of the arcs satisfies one equation per face (the outer face
    turns by -1, every other face by +1, corrected by a quarter turn per corner). Fixing the
    arcs off a spanning tree of the dual graph to their local turns determines the rest; the
    rotation number is the integral excess over the local turn.
    """
    if not diagram.code:
        return {}
    outer = diagram.outer_face if outer_face is None else outer_face
    faces = diagram.faces
    arcs = sorted(diagram.ends)
    local = {arc: _turn(diagram, arc) for arc in arcs}
    left = {arc: diagram.left_face(arc) for arc in arcs}
    right = {arc: diagram.right_face(arc) for arc in arcs}
    balance = [Fraction(-1 if index == outer else 1) - Fraction(len(face), 4)
               for index, face in enumerate(faces)]

    incident: Dict[int, List[int]] = {index: [] for index in range(len(faces))}
    for arc in arcs:
        incident[left[arc]].append(arc)
        if right[arc] != left[arc]:
            incident[right[arc]].append(arc)
    parent_arc: Dict[int, int] = {}
    order = [0]
    queue = deque([0])
    visited = {0}
    while queue:
        face = queue.popleft()
        for arc in incident[face]:
            neighbor = right[arc] if left[arc] == face else left[arc]
            if neighbor not in visited:
                visited.add(neighbor)
                parent_arc[neighbor] = arc
                order.append(neighbor)
                queue.append(neighbor)
    tree = set(parent_arc.values())
    turning: Dict[int, Fraction] = {arc: local[arc] for arc in arcs if arc not in tree}

    def net(face: int) -> Fraction:
        total = Fraction(0)
        for arc in incident[face]:
            if arc not in turning:
                continue
            if left[arc] == face:
                total += turning[arc]
            if right[arc] == face:
                total -= turning[arc]
        return total

    for face in reversed(order[1:]):
        arc = parent_arc[face]
        need = balance[face] - net(face)
        turning[arc] = need if left[arc] == face else -need
    if net(0) != balance[0]:
        raise VerificationError(f"turning equations are inconsistent on face 0 of "
                                f"{diagram.name or 'diagram'}")
    rotation = {}
    for arc in arcs:
        excess = turning[arc] - local[arc]
        if excess.denominator != 1:
            raise VerificationError(f"arc {arc} has non-integral rotation {excess}")
        rotation[arc] = int(excess)
    return rotation
