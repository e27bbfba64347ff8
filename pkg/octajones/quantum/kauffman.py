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
"""Jones polynomial from the Kauffman bracket, used as an independent check of the state sum."""
from typing import Dict, Sequence
from collections import Counter
import logging

from ..algebra.laurent import LaurentPoly
from ..diagram import Diagram, writhe
from ..diagram.labeling import PDTuple
from ..errors import IntegralityViolation

log: logging.Logger = logging.getLogger("octajones.state_sum")

# -A^2 - A^-2, exponents in A
_LOOP = LaurentPoly({2: -1, -2: -1})


def _count_loops(code: Sequence[PDTuple], state: int) -> int:
    parent: Dict[int, int] = {}

    def find(arc: int) -> int:
        while parent.setdefault(arc, arc) != arc:
            parent[arc] = parent[parent[arc]]
            arc = parent[arc]
        return arc

    for index, (a, b, c, d) in enumerate(code):
        pairs = ((a, b), (c, d)) if state >> index & 1 else ((a, d), (b, c))
        for x, y in pairs:
            parent[find(x)] = find(y)
    return len({find(arc) for crossing in code for arc in crossing})


def kauffman_bracket(diagram: Diagram) -> LaurentPoly:
    """The bracket as a Laurent polynomial in ``A`` (stored as the polynomial variable).

    The A-smoothing of ``X(a,b,c,d)`` joins ``a`` to ``b`` and ``c`` to ``d``.
    """
    size = diagram.crossing_count
    histogram: Counter = Counter()
    for state in range(1 << size):
        a_count = bin(state).count("1")
        histogram[(2 * a_count - size, _count_loops(diagram.code, state))] += 1
    total = LaurentPoly.zero()
    for (exponent, loops), multiplicity in histogram.items():
        total = total + (_LOOP ** (loops - 1)).shift(exponent).scale(multiplicity)
    return total


def kauffman_jones(diagram: Diagram) -> LaurentPoly:
    """``V(t) = (-A^3)^(-w) <D>`` at ``A = t^(1/4)``, returned with ``t`` in the role of ``q``.

    With this normalization ``V(t) = J_K(1, t^-1) / J_Unknot(1, t^-1)``.
    """
    if diagram.is_unknot:
        return LaurentPoly.one()
    wr = writhe(diagram)
    in_a = kauffman_bracket(diagram).shift(-3 * wr).scale(-1 if wr % 2 else 1)
    terms = {}
    for exponent, coeff in in_a.items():
        if exponent % 4:
            raise IntegralityViolation(f"A^{exponent} is not a power of t")
        terms[exponent // 2] = coeff
    log.debug("Kauffman bracket of %s over %d states", diagram.name or "diagram",
              1 << diagram.crossing_count)
    return LaurentPoly(terms)
