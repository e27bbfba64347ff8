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
from typing import Dict, List, NamedTuple, Sequence, Tuple, TYPE_CHECKING
import logging

import attr

from ..errors import MalformedCode, NoBasePoint, NonPlanar, NotAKnot

if TYPE_CHECKING:
    from .pd import Diagram

log: logging.Logger = logging.getLogger("octajones.diagram")

PDTuple = Tuple[int, int, int, int]
Port = Tuple[int, int]


class Pass(NamedTuple):
    """One passage of the knot through a crossing. Crossing ids are 1-based."""
    crossing: int
    over: bool
    in_arc: int
    out_arc: int
    in_position: int
    out_position: int


def arc_ends(code: Sequence[PDTuple]) -> Dict[int, Tuple[Port, Port]]:
    ends: Dict[int, List[Port]] = {}
    for index, crossing in enumerate(code):
        if len(crossing) != 4:
            raise MalformedCode(f"crossing {index + 1} has {len(crossing)} entries instead of 4")
        for position, arc in enumerate(crossing):
            ends.setdefault(arc, []).append((index + 1, position))
    for arc, ports in ends.items():
        if len(ports) != 2:
            raise MalformedCode(f"arc {arc} appears {len(ports)} times instead of twice")
    if len(ends) != 2 * len(code):
        raise MalformedCode(f"{len(code)} crossings need {2 * len(code)} arcs, got {len(ends)}")
    return {arc: (ports[0], ports[1]) for arc, ports in ends.items()}


def other_end(ends: Dict[int, Tuple[Port, Port]], arc: int, port: Port) -> Port:
    first, second = ends[arc]
    return second if first == port else first


def traverse(code: Sequence[PDTuple], ends: Dict[int, Tuple[Port, Port]]) -> Tuple[Pass, ...]:
    """Walks the knot from the incoming under-strand of the first crossing.

    Arriving at position ``p`` the strand leaves at ``p + 2``. Arriving at position 2 means the
    code contradicts the orientation convention.
    """
    total = 2 * len(code)
    passes: List[Pass] = []
    seen = set()
    crossing, position = 1, 0
    in_arc = code[0][0]
    for step in range(total):
        if position == 2:
            raise MalformedCode(f"arc {in_arc} enters crossing {crossing} on its outgoing "
                                "under-strand")
        if (crossing, position) in seen:
            raise NotAKnot(f"traversal revisits crossing {crossing} at position {position}")
        seen.add((crossing, position))
        out_position = (position + 2) % 4
        out_arc = code[crossing - 1][out_position]
        passes.append(Pass(crossing, position != 0, in_arc, out_arc, position, out_position))
        crossing, position = other_end(ends, out_arc, (crossing, out_position))
        in_arc = out_arc
        if (crossing, position) == (1, 0) and step < total - 1:
            raise NotAKnot(f"the component through arc {code[0][0]} closes after {step + 1} of "
                           f"{total} passes")
    if (crossing, position) != (1, 0):
        raise NotAKnot("traversal does not close up")
    return tuple(passes)


def crossing_signs(code: Sequence[PDTuple], passes: Sequence[Pass]) -> Dict[int, int]:
    """+1 when the over-strand leaves at position 1, -1 when it leaves at position 3."""
    signs = {p.crossing: 1 if p.out_position == 1 else -1 for p in passes if p.over}
    if len(signs) != len(code):
        raise MalformedCode("some crossing has no over-strand")
    return signs


def find_base(passes: Sequence[Pass]) -> int:
    """Index of the underpass that becomes label 1.

    It must be directly followed by an overpass at another crossing. Ties go to the smallest
    outgoing arc.
    """
    best = None
    for i, current in enumerate(passes):
        following = passes[(i + 1) % len(passes)]
        if current.over or not following.over or current.crossing == following.crossing:
            continue
        if best is None or current.out_arc < passes[best].out_arc:
            best = i
    if best is None:
        raise NoBasePoint("every underpass is followed by an overpass of the same crossing")
    return best


def label_crossings(diagram: 'Diagram') -> 'Diagram':
    """Returns a copy of the diagram whose passes are numbered from the base point.

    ``passes[l - 1]`` is the pass labeled ``l`` and arc ``[l, l+1]`` is its ``out_arc``.
    """
    if diagram.labeled:
        return diagram
    if not diagram.code:
        raise NoBasePoint("the crossingless unknot has no base point")
    start = find_base(diagram.passes)
    passes = diagram.passes[start:] + diagram.passes[:start]
    labels: Dict[int, Dict[str, int]] = {}
    for label, current in enumerate(passes, start=1):
        labels.setdefault(current.crossing, {})["over_label" if current.over
                                                else "under_label"] = label
    crossings = []
    for crossing in diagram.crossings:
        pair = labels[crossing.id]
        if (pair["over_label"] - pair["under_label"]) % 2 == 0:
            raise NonPlanar(f"crossing {crossing.id} has labels {pair['over_label']} and "
                            f"{pair['under_label']} of equal parity")
        crossings.append(attr.evolve(crossing, **pair))
    log.debug("Labeled %s from pass %d (arc %d)", diagram.name or "diagram", start + 1,
              passes[0].out_arc)
    return attr.evolve(diagram, passes=passes, crossings=tuple(crossings), labeled=True)
