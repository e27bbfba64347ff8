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
from mautrix.util.logging.color import (ColorFormatter as BaseColorFormatter,
                                        PREFIX, MXID_COLOR, RESET)

OCTAJONES_COLOR = PREFIX + "35;1m"  # magenta
PART_COLOR = PREFIX + "35m"


class ColorFormatter(BaseColorFormatter):
    def _color_name(self, module: str) -> str:
        if module.startswith("octajones."):
            prefix, part = module.split(".", 1)
            if "." in part:
                part, knot = part.split(".", 1)
                return (f"{OCTAJONES_COLOR}{prefix}{RESET}."
                        f"{PART_COLOR}{part}{RESET}."
                        f"{MXID_COLOR}{knot}{RESET}")
            return f"{OCTAJONES_COLOR}{prefix}{RESET}.{PART_COLOR}{part}{RESET}"
        return super()._color_name(module)
