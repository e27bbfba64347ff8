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
from .handler import (command_handler, command_handlers, CommandHandler, CommandProcessor,
                      CommandEvent, HelpSection, EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT,
                      SECTION_INVARIANTS, SECTION_GEOMETRY, SECTION_PIPELINE, SECTION_MISC)
from . import jones, gluing, match, aj, curve, meta

__all__ = ["command_handler", "command_handlers", "CommandHandler", "CommandProcessor",
           "CommandEvent", "HelpSection", "EXIT_OK", "EXIT_CHECK_FAILED", "EXIT_BAD_INPUT",
           "SECTION_INVARIANTS", "SECTION_GEOMETRY", "SECTION_PIPELINE", "SECTION_MISC"]
