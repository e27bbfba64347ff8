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
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union
from functools import cached_property
import logging
import re

from attr import dataclass
import attr

from ..errors import DiagramError, MalformedCode, UnlabeledDiagram
from .faces import Face, default_outer_face, trace_faces
from .labeling import PDTuple, Pass, Port, arc_ends, crossing_signs, label_crossings, traverse

log: logging.Logger = logging.getLogger("octajones.diagram")

# Half-strand names by PD position: lower/upper strand, incoming/outgoing.
POSITIVE_STRANDS = ("li", "uo", "lo", "ui")
NEGATIVE_STRANDS = ("li", "ui", "lo", "uo")

_TUPLE_RE = re.compile(r"X?\s*[\[(]\s*(-?\d+(?:\s*[,\s]\s*-?\d+)*)\s*[\])]")


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    incoming_under: int
    outgoing_under: int
    incoming_over: int
    outgoing_over: int
    over_label: int = 0
    under_label: int = 0

    @property
    def labels(self) -> Tuple[int, int]:
        """``(j, j')`` with ``j < j'``."""
        return tuple(sorted((self.over_label, self.under_label)))

    @property
    def j(self) -> int:
        return min(self.over_label, self.under_label)

    @property
    def j_prime(self) -> int:
        return max(self.over_label, self.under_label)

    @property
    def first_is_over(self) -> bool:
        return self.over_label < self.under_label

    def strand(self, position: int) -> str:
        return (POSITIVE_STRANDS if self.sign > 0 else NEGATIVE_STRANDS)[position]

    def position_of(self, strand: str) -> int:
        return (POSITIVE_STRANDS if self.sign > 0 else NEGATIVE_STRANDS).index(strand)


@dataclass(frozen=True)
class Diagram:
    code: Tuple[PDTuple, ...]
    crossings: Tuple[Crossing, ...]
    passes: Tuple[Pass, ...]
    faces: Tuple[Face, ...]
    outer_face: int = 0
    labeled: bool = False
    name: Optional[str] = attr.ib(default=None, eq=False)

    @property
    def crossing_count(self) -> int:
        return len(self.code)

    @property
    def is_unknot(self) -> bool:
        return not self.code

    def crossing(self, crossing_id: int) -> Crossing:
        return self.crossings[crossing_id - 1]

    @cached_property
    def ends(self) -> Dict[int, Tuple[Port, Port]]:
        return arc_ends(self.code)

    @cached_property
    def _ports(self) -> Tuple[Dict[int, Port], Dict[int, Port]]:
        out_ports = {p.out_arc: (p.crossing, p.out_position) for p in self.passes}
        in_ports = {p.in_arc: (p.crossing, p.in_position) for p in self.passes}
        return out_ports, in_ports

    def out_port(self, arc: int) -> Port:
        return self._ports[0][arc]

    def in_port(self, arc: int) -> Port:
        return self._ports[1][arc]

    @cached_property
    def corner_face(self) -> Dict[Port, int]:
        return {corner: index for index, face in enumerate(self.faces) for corner in face}

    def left_face(self, arc: int) -> int:
        return self.corner_face[self.out_port(arc)]

    def right_face(self, arc: int) -> int:
        return self.corner_face[self.in_port(arc)]

    def require_labels(self) -> None:
        if not self.labeled:
            raise UnlabeledDiagram(f"{self.name or 'diagram'} has not been labeled")

    def pass_at(self, label: int) -> Pass:
        """The pass with the given label, counted cyclically in ``1..2c``."""
        self.require_labels()
        return self.passes[(label - 1) % len(self.passes)]

    def arc_of_label(self, label: int) -> int:
        """PD arc of ``[l, l+1]``."""
        return self.pass_at(label).out_arc

    @cached_property
    def label_of_arc(self) -> Dict[int, int]:
        self.require_labels()
        return {p.out_arc: index for index, p in enumerate(self.passes, start=1)}

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(crossing.sign for crossing in self.crossings)

    def __str__(self) -> str:
        return emit_pd(self)


def _parse_text(text: str) -> List[PDTuple]:
    text = text.strip()
    if not text or text in ("[]", "PD[]"):
        return []
    matches = list(_TUPLE_RE.finditer(text))
    leftover = _TUPLE_RE.sub("", text)
    if not matches or re.sub(r"[\s,\[\]()PD]", "", leftover):
        raise MalformedCode(f"can't read a PD code from {text!r}")
    code = []
    for match in matches:
        entries = [int(value) for value in re.split(r"[\s,]+", match.group(1).strip())]
        if len(entries) != 4:
            raise MalformedCode(f"crossing {match.group(0)} has {len(entries)} entries "
                                "instead of 4")
        code.append(tuple(entries))
    return code


def parse_pd(source: Union[str, Sequence[Sequence[int]]], outer_face: Optional[int] = None,
             name: Optional[str] = None) -> Diagram:
    """Builds a diagram from a PD code.

    Each crossing is listed counterclockwise starting at its incoming under-strand. Accepts
    ``X(1,4,2,5) X(3,6,4,1) ...``, ``PD[X[1,4,2,5], ...]`` or a nested list.
    """
    if isinstance(source, str):
        code = _parse_text(source)
    else:
        code = [tuple(int(value) for value in crossing) for crossing in source]
        for index, crossing in enumerate(code):
            if len(crossing) != 4:
                raise MalformedCode(f"crossing {index + 1} has {len(crossing)} entries "
                                    "instead of 4")
    code = tuple(code)
    if not code:
        return Diagram(code=(), crossings=(), passes=(), faces=(), outer_face=0, name=name)
    ends = arc_ends(code)
    passes = traverse(code, ends)
    signs = crossing_signs(code, passes)
    crossings = []
    for index, (a, b, c, d) in enumerate(code, start=1):
        if signs[index] > 0:
            crossings.append(Crossing(index, 1, a, c, d, b))
        else:
            crossings.append(Crossing(index, -1, a, c, b, d))
    faces = trace_faces(code, ends)
    if outer_face is None:
        outer_face = default_outer_face(faces)
    elif not 0 <= outer_face < len(faces):
        raise DiagramError(f"outer face {outer_face} out of range 0..{len(faces) - 1}")
    log.debug("Parsed %s: %d crossings, %d faces, outer face %d", name or "PD code",
              len(code), len(faces), outer_face)
    return Diagram(code=code, crossings=tuple(crossings), passes=passes, faces=faces,
                   outer_face=outer_face, name=name)


def parse_labeled(source: Union[str, Sequence[Sequence[int]]], **kwargs: Any) -> Diagram:
    """:func:`parse_pd` followed by :func:`label_crossings` for diagrams with crossings."""
    diagram = parse_pd(source, **kwargs)
    return label_crossings(diagram) if diagram.code else diagram


def emit_pd(diagram: Diagram) -> str:
    return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in diagram.code)


def writhe(diagram: Diagram) -> int:
    return sum(diagram.signs)


def to_json(diagram: Diagram) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "name": diagram.name,
        "pd": [list(crossing) for crossing in diagram.code],
        "crossings": [{
            "id": crossing.id,
            "sign": crossing.sign,
            "incoming_under": crossing.incoming_under,
            "outgoing_under": crossing.outgoing_under,
            "incoming_over": crossing.incoming_over,
            "outgoing_over": crossing.outgoing_over,
        } for crossing in diagram.crossings],
        "faces": [[list(corner) for corner in face] for face in diagram.faces],
        "outer_face": diagram.outer_face,
        "writhe": writhe(diagram),
        "labeled": diagram.labeled,
    }
    if diagram.labeled:
        for entry, crossing in zip(data["crossings"], diagram.crossings):
            entry["over_label"] = crossing.over_label
            entry["under_label"] = crossing.under_label
        data["arcs"] = [{"label": label, "pd_arc": current.out_arc}
                        for label, current in enumerate(diagram.passes, start=1)]
    return data


def from_json(data: Dict[str, Any]) -> Diagram:
    try:
        diagram = parse_pd(data["pd"], outer_face=data.get("outer_face"), name=data.get("name"))
    except KeyError as e:
        raise MalformedCode(f"diagram JSON is missing {e}") from e
    return label_crossings(diagram) if data.get("labeled") else diagram

