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
from ..diagram import knot_entry, knot_names, load_knot, writhe
from .handler import (command_handler, command_handlers, CommandEvent, SECTION_INVARIANTS,
                      SECTION_MISC)


@command_handler(name="list", needs_diagram=False, help_section=SECTION_INVARIANTS,
                 help_text="List the built-in knot diagrams.")
async def list_knots(evt: CommandEvent) -> bool:
    knots = []
    for name in knot_names():
        diagram = load_knot(name)
        entry = knot_entry(name)
        knots.append({"name": name, "crossings": diagram.crossing_count,
                      "writhe": writhe(diagram), "gauss": entry.gauss is not None,
                      "description": entry.description})
        evt.reply(f"{name:<8} {diagram.crossing_count:>2} crossings, writhe {writhe(diagram):>3}")
    evt.emit(knots=knots)
    return True


@command_handler(name="help", needs_diagram=False, help_section=SECTION_MISC,
                 help_text="Show this help message.")
async def help_cmd(evt: CommandEvent) -> bool:
    sections = {}
    for handler in command_handlers.values():
        sections.setdefault(handler.help_section, []).append(handler)
    for section in sorted(sections, key=lambda section: section.order):
        evt.reply(f"#### {section.name}")
        for handler in sorted(sections[section], key=lambda handler: handler.name):
            evt.reply(handler.help)
        evt.reply("")
    evt.emit(commands=sorted(command_handlers))
    return True
