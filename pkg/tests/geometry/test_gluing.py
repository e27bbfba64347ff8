import pytest

from octajones.algebra import FactoredRational, product
from octajones.diagram import FULL_KNOT, Diagram
from octajones.geometry.gluing import (CORNER_RULE, MU, basis_unimodularity, build_gluing_system,
                                       build_shapes, check_triangles, compare_loop_forms,
                                       corner_factor, loop_equation_by_winding,
                                       numeric_loop_residual, random_points, shingle_check,
                                       variables)


class TestLibrary:
    def test_system(self, library_diagram: Diagram) -> None:
        system = build_gluing_system(library_diagram)
        assert system.meridian == FactoredRational.var(MU)
        assert system.sqrt_s.is_integral()
        assert len(system.equations()) == library_diagram.crossing_count + 1

    def test_shingles(self, library_diagram: Diagram) -> None:
        report = shingle_check(library_diagram)
        assert report.checks
        assert report.ok

    def test_loop_forms(self, library_diagram: Diagram) -> None:
        comparisons = compare_loop_forms(library_diagram)
        assert [c.crossing for c in comparisons][0] == FULL_KNOT
        assert all(comparison.equal for comparison in comparisons)
        assert numeric_loop_residual(comparisons, variables(library_diagram), count=10) < 1e-9

    def test_unimodular_basis(self, library_diagram: Diagram) -> None:
        report = basis_unimodularity(library_diagram)
        assert report.ok
        assert report.determinant in (1, -1)
        assert report.rank == library_diagram.crossing_count + 1


class TestCorners:
    def test_triangles(self, figure_eight: Diagram) -> None:
        check_triangles(build_shapes(figure_eight))

    def test_corners_around_a_crossing(self, figure_eight: Diagram) -> None:
        shapes = build_shapes(figure_eight)
        for crossing in figure_eight.crossings:
            corners = product(corner_factor(figure_eight, crossing.id, position, shapes)
                              for position in range(4))
            assert corners.is_one()

    def test_regions_multiply_to_one(self, trefoil: Diagram) -> None:
        assert product(build_gluing_system(trefoil).regions).is_one()

    def test_full_loop(self, trefoil: Diagram) -> None:
        system = build_gluing_system(trefoil)
        assert loop_equation_by_winding(trefoil, FULL_KNOT) == system.loop_zero

    def test_swapped_corner_rule_breaks_loops(self, trefoil: Diagram, mocker) -> None:
        swapped = {key: tuple(3 - kind for kind in kinds) for key, kinds in CORNER_RULE.items()}
        mocker.patch.dict("octajones.geometry.gluing.CORNER_RULE", swapped)
        assert not all(comparison.equal for comparison in compare_loop_forms(trefoil))


class TestPoints:
    def test_random_points(self) -> None:
        points = random_points(["a", "b"], 50, seed=4)
        assert len(points) == 50
        assert all(0.5 <= abs(value) <= 2.0 for point in points for value in point.values())
        assert points == random_points(["a", "b"], 50, seed=4)

    def test_json(self, figure_eight: Diagram) -> None:
        data = build_gluing_system(figure_eight).to_json()
        assert data["variables"] == ["w_mu", "w0", "w1", "w2", "w3", "w4"]
        assert set(data["L"]) == {"1", "2", "3", "4"}
        assert "s" in data["factored"]


@pytest.mark.parametrize("count", [0, 3])
def test_empty_residual(trefoil: Diagram, count: int) -> None:
    assert numeric_loop_residual([], variables(trefoil), count=count) == 0.0
