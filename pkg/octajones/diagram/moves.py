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
from typing import List
from enum import Enum
import logging

from ..errors import DiagramError
from .labeling import label_crossings
from .pd import Diagram, PDTuple, parse_pd

log: logging.Logger = logging.getLogger("octajones.diagram")


class KinkKind(Enum):
    POSITIVE_UNDER = "positive-under"
    NEGATIVE_UNDER = "negative-under"
    POSITIVE_OVER = "positive-over"
    NEGATIVE_OVER = "negative-over"


def _relabel(diagram: Diagram, code: List[PDTuple], suffix: str) -> Diagram:
    name = f"{diagram.name}{suffix}" if diagram.name else None
    result = parse_pd(code, name=name)
    return label_crossings(result) if diagram.labeled and result.code else result


def mirror(diagram: Diagram) -> Diagram:
    """Switches every crossing, which negates all signs.

    The new incoming under-strand is the old incoming over-strand, so positive crossings
    rotate their tuple one step back and negative ones one step forward.
    """
    code = []
    for (a, b, c, d), crossing in zip(diagram.code, diagram.crossings):
        code.append((d, a, b, c) if crossing.sign > 0 else (b, c, d, a))
    return _relabel(diagram, code, "*")


def add_kink(diagram: Diagram, arc: int, kind: KinkKind) -> Diagram:
    """Inserts a Reidemeister I loop at the head of a PD arc.

    The arc now ends at the new crossing, the loop gets a new arc and a second new arc carries
    on to where the old arc used to end.
    """
    if not isinstance(kind, KinkKind):
        kind = KinkKind(kind)
    if diagram.is_unknot:
        raise DiagramError("can't kink the crossingless unknot")
    if arc not in diagram.ends:
        raise DiagramError(f"arc {arc} is not in the diagram")
    loop, tail = max(diagram.ends) + 1, max(diagram.ends) + 2
    head_crossing, head_position = diagram.in_port(arc)
    code = [list(crossing) for crossing in diagram.code]
    code[head_crossing - 1][head_position] = tail
    new = {
        KinkKind.POSITIVE_UNDER: (arc, tail, loop, loop),
        KinkKind.NEGATIVE_UNDER: (arc, loop, loop, tail),
        KinkKind.POSITIVE_OVER: (loop, loop, tail, arc),
        KinkKind.NEGATIVE_OVER: (loop, arc, tail, loop),
    }[kind]
    code.append(new)
    log.debug("Added a %s kink on arc %d", kind.value, arc)
    return _relabel(diagram, [tuple(crossing) for crossing in code], "+kink")
