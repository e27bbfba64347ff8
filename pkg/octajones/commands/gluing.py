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
from ..diagram import check_writhe_linking_lemma
from ..geometry.gluing import (basis_unimodularity, build_gluing_system, compare_loop_forms,
                               numeric_loop_residual, shingle_check, variables)
from .handler import command_handler, CommandEvent, SECTION_GEOMETRY


def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


@command_handler(help_section=SECTION_GEOMETRY, help_args="[--out <file>]",
                 help_text="Write the gluing equations and check their identities.")
async def gluing(evt: CommandEvent) -> bool:
    diagram = evt.diagram
    system = build_gluing_system(diagram)
    shingles = shingle_check(diagram, system.shapes)
    comparisons = compare_loop_forms(diagram)
    symbolic = all(comparison.equal for comparison in comparisons)
    tolerance = evt.args.tol or evt.config["gluing.tolerance"]
    seed = evt.config["gluing.seed"] if evt.args.seed is None else evt.args.seed
    residual = numeric_loop_residual(comparisons, variables(diagram),
                                     evt.config["gluing.check_points"], seed)
    unimodular = basis_unimodularity(diagram)
    lemmas = [check_writhe_linking_lemma(diagram, c.id) for c in diagram.crossings]
    odd_spans = all((c.j_prime - c.j) % 2 == 1 for c in diagram.crossings)
    checks = {
        "shingles": shingles.ok,
        "loop_forms": symbolic and residual < tolerance,
        "s_integral": system.sqrt_s.is_integral(),
        "unimodular": unimodular.ok,
        "writhe_linking": all(report.holds for report in lemmas),
        "odd_label_spans": odd_spans,
    }
    evt.reply(f"Gluing equations of {diagram.name or 'diagram'}")
    evt.reply(f"  L0 = {system.loop_zero}")
    for crossing, loop in sorted(system.loops.items()):
        evt.reply(f"  L{crossing} = {loop}")
    evt.reply(f"  w_lambda = {system.longitude}")
    evt.reply(f"  s = {system.sqrt_s}")
    for name, ok in checks.items():
        evt.reply(f"{name:>16}: {_mark(ok)}")
    evt.reply(f"loop form residual {residual:.2e}, basis determinant {unimodular.determinant}")
    ok = all(checks.values())
    evt.emit(diagram=diagram.name, ok=ok, checks=checks, loop_residual=residual,
             determinant=unimodular.determinant, system=system.to_json())
    return ok
