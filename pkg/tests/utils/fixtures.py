"""This module provides the shared diagrams and configuration for testing."""
from typing import Iterator
import os

from _pytest.fixtures import FixtureRequest
import pytest

from octajones.config import Config, load_config
from octajones.diagram import Diagram, KinkKind, add_kink, knot_names, load_knot, parse_labeled

TREFOIL_PD = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
FIGURE_EIGHT_PD = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]


@pytest.fixture(scope="session")
def trefoil() -> Diagram:
    return parse_labeled(TREFOIL_PD, name="3_1")


@pytest.fixture(scope="session")
def figure_eight() -> Diagram:
    return parse_labeled(FIGURE_EIGHT_PD, name="4_1")


@pytest.fixture(scope="session")
def kinked_trefoil() -> Diagram:
    return load_knot("3_1_kink")


@pytest.fixture(scope="session")
def unknot() -> Diagram:
    return load_knot("0_1")


@pytest.fixture(scope="session")
def five_two() -> Diagram:
    return load_knot("5_2")


@pytest.fixture(scope="session")
def six_two() -> Diagram:
    return load_knot("6_2")


@pytest.fixture(scope="session", params=[name for name in knot_names() if name != "0_1"])
def library_diagram(request: FixtureRequest) -> Diagram:
    return load_knot(request.param)


@pytest.fixture(params=[kind for kind in KinkKind])
def kink_kind(request: FixtureRequest) -> KinkKind:
    return request.param


@pytest.fixture
def kinked(trefoil: Diagram, kink_kind: KinkKind) -> Diagram:
    return add_kink(trefoil, 3, kink_kind)


@pytest.fixture
def config(monkeypatch: pytest.MonkeyPatch) -> Iterator[Config]:
    """The packaged defaults with no environment overrides."""
    for key in list(os.environ):
        if key.startswith("OCTAJONES_"):
            monkeypatch.delenv(key)
    yield load_config()
