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
"""The R-matrix state sum of the colored Jones polynomial.

A coloring is fixed by the color ``k0`` of the base arc ``[1, 2]`` and one shift ``k_c`` per
crossing: walking along the knot, passing over crossing ``c`` raises the color by ``k_c`` and
passing under it lowers the color by ``k_c``. All polynomials are kept in ``v = q^(1/2)``.
"""
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple
from functools import lru_cache
import logging
import math

from ..algebra.laurent import LaurentPoly, q_pochhammer_range, qbinomial
from ..diagram import Crossing, Diagram, rotation_numbers
from ..errors import IntegralityViolation
from ..util.parallel import gather_in_pool

try:
    from gmpy2 import mpz
except ImportError:
    mpz = int

log: logging.Logger = logging.getLogger("octajones.state_sum")


class Coloring(NamedTuple):
    k0: int
    shifts: Tuple[int, ...]
    colors: Tuple[int, ...]

    def color(self, label: int) -> int:
        """Color of the arc ``[l, l+1]``; labels are cyclic."""
        return self.colors[(label - 1) % len(self.colors)]

    def crossing_colors(self, crossing: Crossing) -> Tuple[int, int, int, int]:
        """``(a, a', b, b')``: incoming and outgoing colors of the over and under strand."""
        a = self.color(crossing.over_label - 1)
        b = self.color(crossing.under_label - 1)
        k = self.shifts[crossing.id - 1]
        return a, a + k, b, b - k


class SummandValue(NamedTuple):
    value: LaurentPoly
    n: int
    coloring: Coloring


def arc_colors(diagram: Diagram, k0: int, shifts: Tuple[int, ...]) -> Tuple[int, ...]:
    diagram.require_labels()
    colors = [k0]
    for current in diagram.passes[1:]:
        step = shifts[current.crossing - 1]
        colors.append(colors[-1] + (step if current.over else -step))
    return tuple(colors)


def make_coloring(diagram: Diagram, k0: int, shifts: Tuple[int, ...]) -> Coloring:
    return Coloring(k0, tuple(shifts), arc_colors(diagram, k0, shifts))


def is_admissible(coloring: Coloring, n: int) -> bool:
    return (all(0 <= color <= n for color in coloring.colors)
            and all(shift >= 0 for shift in coloring.shifts))


def _search(diagram: Diagram, n: int) -> Iterator[Tuple[List[int], List[int]]]:
    """Depth-first walk along the passes, fixing each shift at its crossing's first pass
    after the base and pruning colors outside ``[0, n]``. Yields live buffers."""
    passes = diagram.passes
    shifts: List[Optional[int]] = [None] * diagram.crossing_count
    colors = [0] * len(passes)

    def walk(index: int) -> Iterator[Tuple[List[int], List[int]]]:
        if index == len(passes):
            yield shifts, colors
            return
        current = passes[index]
        previous = colors[index - 1]
        slot = current.crossing - 1
        if shifts[slot] is None:
            top = n - previous if current.over else previous
            for step in range(top + 1):
                shifts[slot] = step
                colors[index] = previous + step if current.over else previous - step
                yield from walk(index + 1)
            shifts[slot] = None
        else:
            color = previous + shifts[slot] if current.over else previous - shifts[slot]
            if 0 <= color <= n:
                colors[index] = color
                yield from walk(index + 1)

    for k0 in range(n + 1):
        colors[0] = k0
        yield from walk(1)


def enumerate_colorings(diagram: Diagram, n: int) -> Iterator[Coloring]:
    """Lazily yields every admissible coloring at level ``n``."""
    diagram.require_labels()
    if n < 0:
        raise ValueError("n must be non-negative")
    for shifts, colors in _search(diagram, n):
        yield Coloring(colors[0], tuple(shifts), tuple(colors))


def weight_exponent(sign: int, n: int, a: int, b: int, k: int) -> int:
    """Exponent in ``v`` of the monomial part of a crossing weight."""
    a_out, b_out = a + k, b - k
    if sign > 0:
        return n + n * a + n * b_out - a_out * b_out - a * b
    return -n - n * a_out - n * b + a_out * b + a * b_out - k


@lru_cache(maxsize=None)
def weight(sign: int, n: int, a: int, b: int, k: int) -> LaurentPoly:
    """Weight of a crossing whose over strand enters with color ``a``, under strand enters
    with ``b`` and shift ``k``.

    The factor ``prod_{i=n-a'+1}^{n-a} (1 - q^i) * [b choose k]`` is shared by both signs. A
    negative crossing also carries ``(-1)^k``. Out of range colors give 0.
    """
    a_out, b_out = a + k, b - k
    if k < 0 or a < 0 or b > n or a_out > n or b_out < 0:
        return LaurentPoly.zero()
    value = q_pochhammer_range(n - a_out + 1, n - a) * qbinomial(b, k)
    coeff = -1 if sign < 0 and k % 2 else 1
    return value.shift(weight_exponent(sign, n, a, b, k)).scale(coeff)


def crossing_weight(diagram: Diagram, crossing: int, coloring: Coloring, n: int
                    ) -> LaurentPoly:
    current = diagram.crossing(crossing)
    a, _, b, _ = coloring.crossing_colors(current)
    return weight(current.sign, n, a, b, coloring.shifts[crossing - 1])


@lru_cache(maxsize=64)
def label_rotations(diagram: Diagram) -> Tuple[int, ...]:
    """Rotation number of each arc ``[l, l+1]`` by label."""
    rotation = rotation_numbers(diagram)
    return tuple(rotation[current.out_arc] for current in diagram.passes)


def extrema_exponent(diagram: Diagram, colors: Tuple[int, ...], n: int) -> int:
    """``v``-exponent of the product of ``q^((r - n/2) m)`` over all arcs."""
    return sum((2 * color - n) * turns
               for color, turns in zip(colors, label_rotations(diagram)))


def summand(diagram: Diagram, n: int, coloring: Coloring) -> SummandValue:
    value = LaurentPoly.v_power(extrema_exponent(diagram, coloring.colors, n))
    for crossing in diagram.crossings:
        value = value * crossing_weight(diagram, crossing.id, coloring, n)
        if value.is_zero():
            break
    return SummandValue(value, n, coloring)


def unknot_jones(n: int) -> LaurentPoly:
    return LaurentPoly.from_q_terms({i: 1 for i in range(n + 1)})


def _check_integral(result: LaurentPoly, diagram: Diagram, n: int) -> LaurentPoly:
    if not result.is_integral() or not result.has_integer_coefficients():
        raise IntegralityViolation(f"J({n}) of {diagram.name or 'diagram'} is not in Z[q, 1/q]:"
                                   f" {result}")
    return result


def colored_jones_slow(diagram: Diagram, n: int) -> LaurentPoly:
    """Sums :func:`summand` over all colorings with plain Laurent polynomial arithmetic."""
    if diagram.is_unknot:
        return unknot_jones(n)
    total = LaurentPoly.zero()
    for coloring in enumerate_colorings(diagram, n):
        total = total + summand(diagram, n, coloring).value
    return _check_integral(total.shift(n), diagram, n)


def packing_bits(crossings: int, n: int) -> int:
    """Digit width that can hold any coefficient of the state sum.

    A crossing weight has L1 norm at most ``2^(2n)`` and there are at most ``(n+1)^(c+1)``
    colorings, which bounds every coefficient of the sum.
    """
    return 2 * n * crossings + math.ceil((crossings + 1) * math.log2(n + 1)) + 2


@lru_cache(maxsize=None)
def _packed_weight(sign: int, n: int, a: int, b: int, k: int, bits: int) -> Tuple[int, int]:
    return weight(sign, n, a, b, k).pack(bits)


def colored_jones(diagram: Diagram, n: int, bits: Optional[int] = None) -> LaurentPoly:
    """``J_K(n) = q^(n/2) * sum of the summands`` over all admissible colorings.

    Weights are multiplied as integers evaluated at ``v = 2^bits`` (Kronecker substitution),
    which is exact as long as the final coefficients fit in ``bits - 1`` bits.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if diagram.is_unknot:
        return unknot_jones(n)
    diagram.require_labels()
    bits = max(bits or 0, packing_bits(diagram.crossing_count, n))
    rotations = label_rotations(diagram)
    crossings = [(c.sign, c.over_label - 2, c.under_label - 2, c.id - 1)
                 for c in diagram.crossings]
    total = mpz(0)
    base: Optional[int] = None
    count = 0
    for shifts, colors in _search(diagram, n):
        offset = sum((2 * color - n) * turns for color, turns in zip(colors, rotations))
        value = mpz(1)
        for sign, over_in, under_in, slot in crossings:
            w_offset, w_value = _packed_weight(sign, n, colors[over_in], colors[under_in],
                                               shifts[slot], bits)
            if not w_value:
                value = 0
                break
            offset += w_offset
            value *= w_value
        count += 1
        if not value:
            continue
        if base is None:
            base = offset
        elif offset < base:
            total <<= bits * (base - offset)
            base = offset
        total += value << (bits * (offset - base))
    log.debug("J(%d) of %s: %d colorings, %d-bit digits", n, diagram.name or "diagram", count,
              bits)
    result = LaurentPoly.unpack(base or 0, int(total), bits)
    return _check_integral(result.shift(n), diagram, n)


def colored_jones_table(diagram: Diagram, n_max: int, bits: Optional[int] = None
                        ) -> Dict[int, LaurentPoly]:
    return {n: colored_jones(diagram, n, bits) for n in range(n_max + 1)}


def jones_polynomial(diagram: Diagram) -> LaurentPoly:
    """``J_K(1, t^-1) / J_Unknot(1, t^-1)`` with ``t`` in the role of ``q``."""
    mirrored = colored_jones(diagram, 1).invert_variable()
    return mirrored.exact_div(unknot_jones(1).invert_variable())


def jones_at(n: int, diagram: Diagram, bits: Optional[int] = None) -> LaurentPoly:
    return colored_jones(diagram, n, bits)


async def colored_jones_parallel(diagram: Diagram, n_max: int, jobs: int = 1,
                                 bits: Optional[int] = None) -> Dict[int, LaurentPoly]:
    """:func:`colored_jones_table` with the levels spread over ``jobs`` processes."""
    levels = list(range(n_max + 1))
    values = await gather_in_pool(jones_at, levels, jobs, diagram, bits)
    return dict(zip(levels, values))
