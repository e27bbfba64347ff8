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
from ..diagram import writhe
from ..quantum.kauffman import kauffman_jones
from ..quantum.state_sum import colored_jones_parallel, jones_polynomial
from .handler import command_handler, CommandEvent, SECTION_INVARIANTS


@command_handler(help_section=SECTION_INVARIANTS, help_args="[--n <n_max>]",
                 help_text="Tabulate the colored Jones polynomial J(n) for n = 0..n_max.")
async def jones(evt: CommandEvent) -> bool:
    n_max = evt.args.n if evt.args.n is not None else 4
    if n_max < 0:
        raise ValueError(f"--n must not be negative, got {n_max}")
    bits = evt.config["state_sum.packing_bits"] or None
    diagram = evt.diagram
    table = await colored_jones_parallel(diagram, n_max, evt.jobs, bits)
    for n, value in table.items():
        evt.reply(f"{n:>3}  {value}")
    evt.emit(diagram=diagram.name, crossings=diagram.crossing_count, writhe=writhe(diagram),
             table={str(n): value.to_json() for n, value in table.items()},
             text={str(n): str(value) for n, value in table.items()})
    if n_max < 1 or diagram.crossing_count > 12:
        evt.emit(ok=True)
        return True
    agrees = jones_polynomial(diagram) == kauffman_jones(diagram)
    evt.reply(f"Kauffman bracket check at n = 1: {'PASS' if agrees else 'FAIL'}")
    evt.emit(ok=agrees, kauffman_agrees=agrees)
    return agrees
