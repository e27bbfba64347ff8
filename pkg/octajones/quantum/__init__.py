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
from .state_sum import colored_jones, colored_jones_parallel, colored_jones_table, summand
from .annihilator import RatioOperator, ratio_operators, verify_match
from .recursion import RecursionOperator, guess_recursion, specialize_q1

__all__ = ["colored_jones", "colored_jones_parallel", "colored_jones_table", "summand",
           "RatioOperator", "ratio_operators", "verify_match", "RecursionOperator",
           "guess_recursion", "specialize_q1"]
