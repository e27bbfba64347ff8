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
from .gluing import GluingSystem, build_gluing_system
from .solver import GluingSolution, SolverOptions, solve_at
from .curve import CurvePoint, sample_curve

__all__ = ["GluingSystem", "build_gluing_system", "GluingSolution", "SolverOptions", "solve_at",
           "CurvePoint", "sample_curve"]
