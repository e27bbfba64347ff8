import pytest

from octajones.diagram import (Diagram, emit_pd, from_json, parse_labeled, parse_pd, to_json,
                               writhe)
from octajones.errors import DiagramError, MalformedCode, NotAKnot, UnlabeledDiagram

from tests.utils.fixtures import FIGURE_EIGHT_PD, TREFOIL_PD


class TestParsing:
    @pytest.mark.parametrize("text", [
        "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "PD[X[1, 4, 2, 5], X[3, 6, 4, 1], X[5, 2, 6, 3]]",
        "[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]",
    ])
    def test_text_forms(self, text: str) -> None:
        assert parse_pd(text).code == parse_pd(TREFOIL_PD).code

    def test_canonical_emission(self) -> None:
        diagram = parse_pd(TREFOIL_PD)
        assert emit_pd(diagram) == "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
        assert parse_pd(emit_pd(diagram)).code == diagram.code

    @pytest.mark.parametrize("code,error", [
        ("X(1,2,3)", MalformedCode),
        ("hello", MalformedCode),
        ([[1, 2, 2, 1], [3, 4, 4, 3]], DiagramError),
        ([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 7]], MalformedCode),
        ([[1, 1, 2, 2], [3, 3, 4, 4]], NotAKnot),
    ])
    def test_rejects_bad_codes(self, code: object, error: type) -> None:
        with pytest.raises(error):
            parse_labeled(code)

    def test_empty_code_is_the_unknot(self) -> None:
        diagram = parse_pd("[]")
        assert diagram.is_unknot
        assert writhe(diagram) == 0

    def test_outer_face_range(self) -> None:
        with pytest.raises(DiagramError):
            parse_pd(TREFOIL_PD, outer_face=5)


class TestCrossings:
    def test_trefoil_signs(self, trefoil: Diagram) -> None:
        assert trefoil.signs == (-1, -1, -1)
        assert writhe(trefoil) == -3
        assert trefoil.crossing_count == 3
        assert len(trefoil.faces) == 5

    def test_figure_eight_labels(self, figure_eight: Diagram) -> None:
        labels = {crossing.id: crossing.labels for crossing in figure_eight.crossings}
        assert labels == {1: (2, 5), 2: (1, 6), 3: (4, 7), 4: (3, 8)}
        assert figure_eight.signs == (1, 1, -1, -1)

    def test_base_point(self, library_diagram: Diagram) -> None:
        first, second = library_diagram.pass_at(1), library_diagram.pass_at(2)
        assert not first.over
        assert second.over
        assert first.crossing != second.crossing

    def test_label_spans_are_odd(self, library_diagram: Diagram) -> None:
        for crossing in library_diagram.crossings:
            assert (crossing.j_prime - crossing.j) % 2 == 1

    def test_every_label_is_used_once(self, library_diagram: Diagram) -> None:
        labels = sorted(label for crossing in library_diagram.crossings
                        for label in crossing.labels)
        assert labels == list(range(1, 2 * library_diagram.crossing_count + 1))

    def test_unlabeled_diagram(self) -> None:
        with pytest.raises(UnlabeledDiagram):
            parse_pd(TREFOIL_PD).pass_at(1)


class TestJSON:
    def test_fields(self, figure_eight: Diagram) -> None:
        data = to_json(figure_eight)
        assert data["pd"] == FIGURE_EIGHT_PD
        assert data["writhe"] == 0
        assert [entry["sign"] for entry in data["crossings"]] == [1, 1, -1, -1]
        assert len(data["arcs"]) == 8

    def test_restores_labels(self, figure_eight: Diagram) -> None:
        restored = from_json(to_json(figure_eight))
        assert restored.labeled
        assert restored.crossings == figure_eight.crossings

    def test_missing_code(self) -> None:
        with pytest.raises(MalformedCode):
            from_json({"name": "nothing"})
