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
from ..geometry.curve import fit_curve_polynomial, sample_curve, unit_circle
from .handler import command_handler, CommandEvent, SECTION_GEOMETRY


@command_handler(help_section=SECTION_GEOMETRY, help_args="[--grid <points>]",
                 help_text="Sample (w_mu, w_lambda) pairs of the gluing variety on the unit "
                           "circle and fit a polynomial through them.")
async def curve(evt: CommandEvent) -> bool:
    diagram = evt.diagram
    count = evt.args.grid or evt.config["solver.grid"]
    if count < 1:
        raise ValueError(f"--grid must be positive, got {count}")
    points = sample_curve(diagram, unit_circle(count), evt.solver_options)
    evt.reply("w_mu_re,w_mu_im,w_lambda_re,w_lambda_im,residual,branch")
    for point in points:
        evt.reply(f"{point.w_mu.real!r},{point.w_mu.imag!r},{point.w_lambda.real!r},"
                  f"{point.w_lambda.imag!r},{point.residual!r},{point.branch}")
    evt.emit(diagram=diagram.name, grid=count, points=[point.to_json() for point in points])
    if not points:
        evt.log.warning("No solutions on any of the %d grid points", count)
        evt.emit(ok=False)
        return False
    deg_mu, deg_lambda = evt.config["solver.curve_degrees"]
    fit = fit_curve_polynomial([(point.w_mu, point.w_lambda) for point in points], deg_mu,
                               deg_lambda)
    evt.log.info("Curve fit of degrees (%d, %d) has residual %.2e", deg_mu, deg_lambda,
                 fit.residual)
    evt.emit(ok=True, fit={"degrees": [deg_mu, deg_lambda], "residual": fit.residual,
                           "coefficients": [[value.real, value.imag]
                                            for value in fit.coefficients]})
    return True
