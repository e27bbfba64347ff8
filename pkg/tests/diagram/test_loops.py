import pytest

from octajones.diagram import (FULL_KNOT, Diagram, check_writhe_linking_lemma, loop_of_crossing,
                               rotation_numbers)
from octajones.diagram.loops import loop_arcs


class TestLoops:
    def test_full_knot_windings(self, trefoil: Diagram) -> None:
        loop = loop_of_crossing(trefoil, FULL_KNOT)
        assert loop.winding[trefoil.outer_face] == 0
        assert sorted(abs(value) for value in loop.winding) == [0, 1, 1, 1, 2]

    def test_crossing_loop_arcs(self, figure_eight: Diagram) -> None:
        assert loop_arcs(figure_eight, 2) == (1, 2, 3, 4, 5)
        assert loop_arcs(figure_eight, FULL_KNOT) == tuple(range(1, 9))

    def test_windings_are_bounded_by_the_loop(self, library_diagram: Diagram) -> None:
        for crossing in [FULL_KNOT] + [c.id for c in library_diagram.crossings]:
            loop = loop_of_crossing(library_diagram, crossing)
            assert loop.winding_of(library_diagram.outer_face) == 0
            assert max(abs(value) for value in loop.winding) <= len(loop.arcs)

    def test_writhe_linking_identity(self, library_diagram: Diagram) -> None:
        for crossing in library_diagram.crossings:
            assert check_writhe_linking_lemma(library_diagram, crossing.id).holds


class TestRotationNumbers:
    def test_integral(self, library_diagram: Diagram) -> None:
        rotation = rotation_numbers(library_diagram)
        assert set(rotation) == set(library_diagram.ends)
        assert all(isinstance(value, int) for value in rotation.values())

    @pytest.mark.parametrize("face", [0, 1, 2, 3, 4])
    def test_any_outer_face(self, trefoil: Diagram, face: int) -> None:
        rotation = rotation_numbers(trefoil, face)
        assert all(isinstance(value, int) for value in rotation.values())

    def test_unknot(self, unknot: Diagram) -> None:
        assert rotation_numbers(unknot) == {}
