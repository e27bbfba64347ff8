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
from typing import Dict, List, Optional, Tuple
import logging
import re

from ..errors import MalformedCode
from .pd import Diagram, parse_pd

log: logging.Logger = logging.getLogger("octajones.diagram")

_TOKEN_RE = re.compile(r"([OUou])\s*(\d+)\s*([+-])")


def parse_gauss(text: str, outer_face: Optional[int] = None, name: Optional[str] = None
                ) -> Diagram:
    """Builds a diagram from a signed Gauss code such as ``O1+ U2+ O3+ U1+ O2+ U3+``.

    Pass ``i`` (0-based) enters on arc ``i`` (arc ``2c`` for the first pass) and leaves on arc
    ``i + 1``. The planar structure is whatever the resulting PD code describes; codes that
    don't embed in the sphere fail the face count.
    """
    tokens: List[Tuple[str, int, int]] = []
    position = 0
    for match in _TOKEN_RE.finditer(text):
        if text[position:match.start()].strip(" ,\t\n"):
            raise MalformedCode(f"unexpected {text[position:match.start()]!r} in Gauss code")
        position = match.end()
        kind, crossing, sign = match.groups()
        tokens.append((kind.upper(), int(crossing), 1 if sign == "+" else -1))
    if text[position:].strip(" ,\t\n"):
        raise MalformedCode(f"unexpected {text[position:]!r} in Gauss code")
    if not tokens:
        return parse_pd([], outer_face=outer_face, name=name)

    visits: Dict[int, Dict[str, int]] = {}
    signs: Dict[int, int] = {}
    for index, (kind, crossing, sign) in enumerate(tokens):
        if kind in visits.setdefault(crossing, {}):
            raise MalformedCode(f"crossing {crossing} is passed {kind} twice")
        visits[crossing][kind] = index
        if signs.setdefault(crossing, sign) != sign:
            raise MalformedCode(f"crossing {crossing} has inconsistent signs")
    for crossing, seen in visits.items():
        if len(seen) != 2:
            raise MalformedCode(f"crossing {crossing} is visited only once")

    total = len(tokens)
    code = []
    for crossing in sorted(visits):
        under, over = visits[crossing]["U"], visits[crossing]["O"]
        entry = [0, 0, 0, 0]
        entry[0], entry[2] = under or total, under + 1
        over_in, over_out = over or total, over + 1
        if signs[crossing] > 0:
            entry[3], entry[1] = over_in, over_out
        else:
            entry[1], entry[3] = over_in, over_out
        code.append(entry)
    log.debug("Gauss code with %d crossings converted to PD %s", len(code), code)
    return parse_pd(code, outer_face=outer_face, name=name)


def emit_gauss(diagram: Diagram) -> str:
    """Signed Gauss code along the traversal (or the labeling, when labeled)."""
    return " ".join(f"{'O' if p.over else 'U'}{p.crossing}"
                    f"{'+' if diagram.crossing(p.crossing).sign > 0 else '-'}"
                    for p in diagram.passes)
