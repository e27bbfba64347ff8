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
from typing import List, Optional

from ..geometry.curve import solve_grid, unit_circle
from ..geometry.solver import GluingSolution
from ..quantum.recursion import (RecursionOperator, aj_check, content_free, control_polynomial,
                                 e_part, escalation_schedule, guess_recursion, required_values,
                                 search_recursion, specialize_q1)
from ..quantum.state_sum import colored_jones_parallel
from .handler import command_handler, CommandEvent, SECTION_PIPELINE


def _explicit_bounds(evt: CommandEvent) -> Optional[tuple]:
    bounds = (evt.args.de, evt.args.dqq, evt.args.dq)
    if all(value is None for value in bounds):
        return None
    elif any(value is None for value in bounds):
        raise ValueError("--de, --dq and --dqq must be given together")
    elif any(value < 0 for value in bounds):
        raise ValueError(f"degree bounds must not be negative, got {bounds}")
    return bounds


def _guess(evt: CommandEvent, values: list) -> Optional[RecursionOperator]:
    margin = evt.config["recursion.margin"]
    rule = evt.config["recursion.data_rule"]
    bounds = _explicit_bounds(evt)
    if bounds is not None:
        op = guess_recursion(values, *bounds, margin=margin, rule=rule)
        evt.emit(bounds=list(bounds))
        return op
    schedule = escalation_schedule(evt.config["recursion.orders"],
                                   evt.config["recursion.q_big_degrees"],
                                   evt.config["recursion.q_degrees"])
    schedule = schedule[:evt.config["recursion.max_trials"]]
    if all(len(values) < required_values(bounds, margin, rule) for bounds in schedule):
        # raises InsufficientData naming the smallest usable length
        guess_recursion(values, *schedule[0], margin=margin, rule=rule)
    op, bounds = search_recursion(values, schedule, margin, rule)
    evt.emit(bounds=list(bounds) if bounds else None)
    return op


@command_handler(help_section=SECTION_PIPELINE,
                 help_args="[--n <n_max>] [--de <E> --dqq <Q> --dq <q>] [--grid <points>]",
                 help_text="Guess a recursion from J(0..n_max), specialize it to q = 1 and "
                           "evaluate it on gluing solutions.")
async def aj(evt: CommandEvent) -> bool:
    diagram = evt.diagram
    n_max = evt.args.n if evt.args.n is not None else 20
    if n_max < 0:
        raise ValueError(f"--n must not be negative, got {n_max}")
    bits = evt.config["state_sum.packing_bits"] or None
    table = await colored_jones_parallel(diagram, n_max, evt.jobs, bits)
    values = [table[n] for n in range(n_max + 1)]
    evt.emit(diagram=diagram.name, n_max=n_max)
    op = _guess(evt, values)
    if op is None:
        evt.reply(f"No annihilating operator found from J(0..{n_max})")
        evt.emit(ok=False)
        return False
    op = content_free(op)
    evt.reply(f"Annihilating operator within degree bounds: {op}")
    poly = e_part(specialize_q1(op))
    evt.reply(f"At q = 1, without Q factors: {poly.as_expr()}")

    grid = unit_circle(evt.args.grid or evt.config["solver.grid"])
    solutions: List[GluingSolution] = [solution
                                       for _, found in solve_grid(diagram, grid,
                                                                  evt.solver_options)
                                       for solution in found]
    report = aj_check(diagram, poly, solutions)
    control = aj_check(diagram, control_polynomial(poly, evt.seed), solutions)
    tolerance = evt.args.tol or evt.config["recursion.aj_tolerance"]
    threshold = evt.config["recursion.control_threshold"]
    ok = (bool(solutions) and report.max_residual < tolerance
          and control.max_residual > threshold)
    evt.reply(f"{len(solutions)} gluing solutions on {len(grid)} grid points")
    evt.reply(f"AJ residual {report.max_residual:.2e} (tolerance {tolerance:.0e}), "
              f"control residual {control.max_residual:.2e} (threshold {threshold:.0e})")
    evt.reply("PASS" if ok else "FAIL")
    evt.emit(ok=ok, operator=op.to_json(), operator_text=str(op), q1=str(poly.as_expr()),
             solutions=len(solutions), aj=report.to_json(), control=control.to_json())
    return ok
