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
from ..quantum.annihilator import verify_match
from .handler import command_handler, CommandEvent, SECTION_PIPELINE


@command_handler(help_section=SECTION_PIPELINE, help_args="[--numeric-only] [--tol <tol>]",
                 help_text="Check that the q = 1 limits of the ratio operators are the gluing "
                           "equations.")
async def match(evt: CommandEvent) -> bool:
    diagram = evt.diagram
    section = "annihilator"
    report = verify_match(diagram, points=evt.config[f"{section}.match_points"],
                          tolerance=evt.args.tol or evt.config[f"{section}.tolerance"],
                          samples=evt.config[f"{section}.match_samples"],
                          n_max=evt.config[f"{section}.match_max_n"], seed=evt.seed,
                          symbolic=not evt.args.numeric_only)
    for entry in report.entries:
        symbolic = {True: "equal", False: "DIFFERENT", None: "skipped"}[entry.symbolic]
        evt.reply(f"{entry.generator:>4} -> {entry.expected:<6} symbolic {symbolic}, "
                  f"residual {entry.residual:.2e}, q* = {entry.qstar}")
    evt.reply(f"{'PASS' if report.ok else 'FAIL'} (max residual {report.max_residual:.2e})")
    evt.emit(**report.to_json())
    return report.ok
