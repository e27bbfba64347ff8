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
from typing import Any, Dict, List, Optional
from functools import lru_cache
import importlib.resources
import logging

from attr import dataclass
import attr
from ruamel.yaml import YAML

from ..errors import DiagramError
from .gauss import parse_gauss
from .moves import KinkKind, add_kink
from .labeling import label_crossings
from .pd import Diagram, parse_pd

log: logging.Logger = logging.getLogger("octajones.diagram")

yaml = YAML(typ="safe")


@dataclass(frozen=True)
class KnotEntry:
    name: str
    description: str
    pd: List[List[int]]
    gauss: Optional[str] = None
    kink: Optional[Dict[str, Any]] = None

    @property
    def crossing_count(self) -> int:
        return len(self.pd) + (1 if self.kink else 0)


@lru_cache(maxsize=1)
def _entries() -> Dict[str, KnotEntry]:
    text = importlib.resources.files("octajones.diagram").joinpath("knots.yaml").read_text()
    data = yaml.load(text)
    return {str(name): KnotEntry(name=str(name), description=entry.get("description", ""),
                                 pd=entry["pd"], gauss=entry.get("gauss"),
                                 kink=entry.get("kink"))
            for name, entry in data.items()}


def knot_names() -> List[str]:
    return list(_entries())


def knot_entry(name: str) -> KnotEntry:
    try:
        return _entries()[name]
    except KeyError as e:
        raise DiagramError(f"unknown knot {name!r}, try one of {', '.join(knot_names())}") from e


def load_knot(name: str, labeled: bool = True) -> Diagram:
    entry = knot_entry(name)
    diagram = parse_pd(entry.pd, name=name)
    if entry.kink:
        diagram = attr.evolve(add_kink(diagram, entry.kink["arc"], KinkKind(entry.kink["kind"])),
                              name=name)
    if labeled and diagram.code:
        return label_crossings(diagram)
    return diagram


def load_gauss(name: str) -> Optional[Diagram]:
    entry = knot_entry(name)
    return parse_gauss(entry.gauss, name=name) if entry.gauss else None
