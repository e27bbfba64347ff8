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
from .factored import FactoredRational, Monomial, product, shape_triple
from .laurent import LaurentPoly, qbinomial, qfact, q_pochhammer_range

__all__ = ["FactoredRational", "Monomial", "product", "shape_triple", "LaurentPoly",
           "qbinomial", "qfact", "q_pochhammer_range"]
