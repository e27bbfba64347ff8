from typing import Dict

import pytest

from octajones.diagram import Diagram, load_knot, mirror, parse_pd
from octajones.errors import UnlabeledDiagram
from octajones.quantum.kauffman import kauffman_jones
from octajones.quantum.state_sum import (colored_jones, colored_jones_parallel,
                                         colored_jones_slow, colored_jones_table,
                                         enumerate_colorings, jones_polynomial, make_coloring,
                                         packing_bits, summand, unknot_jones, weight)

from tests.utils.fixtures import TREFOIL_PD
from tests.utils.helpers import brute_force_colorings, q_poly

TREFOIL_J = {
    1: {-4: -1, -2: 1, -1: 1, 0: 1},
    2: {-11: 1, -9: -1, -8: -1, -7: -1, -4: 1, -3: 1, -2: 1, -1: 1, 0: 1},
    3: {-21: -1, -19: 1, -18: 1, -17: 1, -14: -1, -13: -1, -12: -1, -11: -1, -10: -1, -6: 1,
        -5: 1, -4: 1, -3: 1, -2: 1, -1: 1, 0: 1},
}
FIGURE_EIGHT_J = {
    1: {-2: 1, 3: 1},
    2: {-6: 1, -4: -1, 0: 1, 1: 1, 2: 1, 6: -1, 8: 1},
    3: {-12: 1, -10: -1, -9: -1, -7: 1, -4: 1, -3: 1, 6: 1, 7: 1, 10: 1, 12: -1, 13: -1, 15: 1},
}


class TestColoredJones:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trefoil(self, trefoil: Diagram, n: int) -> None:
        assert colored_jones(trefoil, n) == q_poly(TREFOIL_J[n])

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_figure_eight(self, figure_eight: Diagram, n: int) -> None:
        assert colored_jones(figure_eight, n) == q_poly(FIGURE_EIGHT_J[n])

    def test_unknot_closed_form(self, unknot: Diagram) -> None:
        for n, value in colored_jones_table(unknot, 20).items():
            assert value == q_poly({i: 1 for i in range(n + 1)})
            assert value * q_poly({0: 1, 1: -1}) == q_poly({0: 1, n + 1: -1})

    def test_level_zero(self, library_diagram: Diagram) -> None:
        assert colored_jones(library_diagram, 0) == 1

    @pytest.mark.parametrize("n", [1, 2])
    def test_packed_sum_matches_plain_sum(self, figure_eight: Diagram, five_two: Diagram,
                                          n: int) -> None:
        for diagram in (figure_eight, five_two):
            assert colored_jones(diagram, n) == colored_jones_slow(diagram, n)

    def test_wider_digits_change_nothing(self, trefoil: Diagram) -> None:
        bits = packing_bits(trefoil.crossing_count, 3)
        assert colored_jones(trefoil, 3, bits + 17) == colored_jones(trefoil, 3)

    def test_negative_level(self, trefoil: Diagram) -> None:
        with pytest.raises(ValueError):
            colored_jones(trefoil, -1)

    def test_needs_labels(self) -> None:
        with pytest.raises(UnlabeledDiagram):
            colored_jones(parse_pd(TREFOIL_PD), 1)

    @pytest.mark.parametrize("n", [1, 2])
    def test_mirror_inverts_q(self, trefoil: Diagram, n: int) -> None:
        unknot = unknot_jones(n)
        mirrored = colored_jones(mirror(trefoil), n).invert_variable()
        assert mirrored * unknot == colored_jones(trefoil, n) * unknot.invert_variable()


class TestInvariance:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_kinked_trefoil(self, trefoil: Diagram, kinked_trefoil: Diagram, n: int) -> None:
        assert colored_jones(kinked_trefoil, n) == colored_jones(trefoil, n)

    @pytest.mark.parametrize("n", [1, 2])
    def test_every_kink(self, trefoil: Diagram, kinked: Diagram, n: int) -> None:
        assert colored_jones(kinked, n) == colored_jones(trefoil, n)

    @pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "6_1", "6_2"])
    def test_jones_polynomial_matches_kauffman(self, name: str) -> None:
        diagram = load_knot(name)
        assert jones_polynomial(diagram) == kauffman_jones(diagram)

    def test_kauffman_trefoil(self, trefoil: Diagram) -> None:
        assert kauffman_jones(trefoil) == q_poly({1: 1, 3: 1, 4: -1})
        assert kauffman_jones(mirror(trefoil)) == q_poly({-1: 1, -3: 1, -4: -1})


class TestColorings:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_enumeration_matches_brute_force(self, figure_eight: Diagram, n: int) -> None:
        assert set(enumerate_colorings(figure_eight, n)) == set(
            brute_force_colorings(figure_eight, n))

    def test_colorings_follow_the_labels(self, trefoil: Diagram) -> None:
        coloring = make_coloring(trefoil, 1, (0, 1, 1))
        assert coloring.colors[0] == 1
        assert coloring.color(7) == coloring.color(1)
        for crossing in trefoil.crossings:
            a, a_out, b, b_out = coloring.crossing_colors(crossing)
            assert a_out - a == b - b_out == coloring.shifts[crossing.id - 1]

    def test_summand_vanishes_outside_the_weights(self, trefoil: Diagram) -> None:
        coloring = make_coloring(trefoil, 2, (2, 2, 2))
        assert summand(trefoil, 2, coloring).value.is_zero()

    @pytest.mark.parametrize("sign", [1, -1])
    def test_weight_out_of_range(self, sign: int) -> None:
        assert weight(sign, 3, 2, 1, 2).is_zero()
        assert weight(sign, 3, 0, 0, 1).is_zero()
        assert not weight(sign, 3, 1, 2, 1).is_zero()


@pytest.mark.asyncio
@pytest.mark.parametrize("jobs", [1, 2])
async def test_parallel_table(trefoil: Diagram, jobs: int) -> None:
    expected: Dict[int, object] = colored_jones_table(trefoil, 3)
    assert await colored_jones_parallel(trefoil, 3, jobs) == expected
