from io import StringIO
import json

import pytest
from pytest_mock import MockFixture

from octajones.commands.handler import (CommandEvent, CommandProcessor, EXIT_BAD_INPUT,
                                        EXIT_CHECK_FAILED, EXIT_OK, command_handlers)
from octajones.config import Config
from octajones.geometry.gluing import CORNER_RULE

from tests.utils.helpers import make_args

TREFOIL_TEXT = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


@pytest.fixture
def command_processor(config: Config) -> CommandProcessor:
    return CommandProcessor(config)


@pytest.fixture
def swapped_corners(mocker: MockFixture) -> None:
    swapped = {key: tuple(3 - kind for kind in kinds) for key, kinds in CORNER_RULE.items()}
    mocker.patch.dict("octajones.geometry.gluing.CORNER_RULE", swapped)


async def run(processor: CommandProcessor, command: str, **kwargs) -> tuple:
    out = StringIO()
    code = await processor.handle(command, make_args(command=command, **kwargs), out)
    return code, out.getvalue()


class TestCommandEvent:
    def test_render_text(self, command_processor: CommandProcessor) -> None:
        evt = CommandEvent(command_processor, "jones", make_args())
        evt.reply("first")
        evt.reply("second")
        evt.emit(ok=True)
        assert evt.render() == "first\nsecond\n"

    def test_render_json(self, command_processor: CommandProcessor) -> None:
        evt = CommandEvent(command_processor, "jones", make_args(format="json"))
        evt.reply("ignored")
        evt.emit(ok=True, table={"0": [[0, 1, 1]]})
        assert json.loads(evt.render()) == {"command": "jones", "ok": True,
                                            "table": {"0": [[0, 1, 1]]}}

    def test_defaults_from_config(self, command_processor: CommandProcessor) -> None:
        evt = CommandEvent(command_processor, "aj", make_args())
        assert evt.format == "text"
        assert evt.seed == 0
        assert evt.jobs == 1
        options = evt.solver_options
        assert options.radius == (0.5, 2.0)
        assert options.starts == 20

    def test_arguments_win(self, command_processor: CommandProcessor) -> None:
        evt = CommandEvent(command_processor, "aj", make_args(seed=5, jobs=0, format="json"))
        assert evt.seed == 5
        assert evt.solver_options.seed == 5
        assert evt.jobs == 1
        assert evt.format == "json"

    def test_lazy_diagram(self, command_processor: CommandProcessor) -> None:
        evt = CommandEvent(command_processor, "jones", make_args(knot="4_1"))
        assert evt.diagram is evt.diagram
        assert evt.diagram.crossing_count == 4


class TestLoading:
    def test_pd_file(self, tmp_path) -> None:
        path = tmp_path / "my_trefoil.pd"
        path.write_text(TREFOIL_TEXT)
        diagram = CommandProcessor.load_diagram(make_args(pd=str(path)))
        assert diagram.name == "my_trefoil"
        assert diagram.crossing_count == 3

    def test_gauss_inline(self) -> None:
        diagram = CommandProcessor.load_diagram(make_args(gauss="O1+ U2+ O3+ U1+ O2+ U3+"))
        assert diagram.name is None
        assert diagram.labeled
        assert diagram.crossing_count == 3

    def test_no_source(self) -> None:
        with pytest.raises(ValueError):
            CommandProcessor.load_diagram(make_args())


@pytest.mark.asyncio
class TestCommands:
    async def test_unknown_command(self, command_processor: CommandProcessor) -> None:
        assert "frobnicate" not in command_handlers
        code, _ = await run(command_processor, "frobnicate", knot="3_1")
        assert code == EXIT_BAD_INPUT

    async def test_bad_pd(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "jones", pd="X(1,2,3)", format="json")
        assert code == EXIT_BAD_INPUT
        assert json.loads(text)["error"] == "MalformedCode"

    async def test_jones_unknot(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "jones", knot="0_1", n=3)
        assert code == EXIT_OK
        lines = text.splitlines()
        assert lines[:4] == ["  0  1", "  1  1 + q", "  2  1 + q + q^2", "  3  1 + q + q^2 + q^3"]
        assert lines[4].endswith("PASS")

    async def test_jones_level_zero(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "jones", pd=TREFOIL_TEXT, n=0, format="json")
        assert code == EXIT_OK
        data = json.loads(text)
        assert data["text"] == {"0": "1"}
        assert data["writhe"] == -3
        assert "kauffman_agrees" not in data

    async def test_jones_negative_level(self, command_processor: CommandProcessor) -> None:
        code, _ = await run(command_processor, "jones", knot="3_1", n=-1)
        assert code == EXIT_BAD_INPUT

    async def test_jones_with_workers(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "jones", knot="4_1", n=2, jobs=2,
                               format="json")
        assert code == EXIT_OK
        data = json.loads(text)
        assert data["kauffman_agrees"] is True
        assert sorted(data["table"]) == ["0", "1", "2"]

    async def test_gluing(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "gluing", knot="4_1", format="json")
        assert code == EXIT_OK
        data = json.loads(text)
        assert all(data["checks"].values())
        assert data["determinant"] in (1, -1)

    async def test_gluing_corrupted(self, command_processor: CommandProcessor,
                                    swapped_corners: None) -> None:
        code, text = await run(command_processor, "gluing", knot="3_1", format="json")
        assert code == EXIT_CHECK_FAILED
        assert json.loads(text)["checks"]["loop_forms"] is False

    async def test_match(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "match", knot="3_1")
        assert code == EXIT_OK
        assert "E0" in text

    async def test_match_corrupted(self, command_processor: CommandProcessor,
                                   swapped_corners: None) -> None:
        code, text = await run(command_processor, "match", knot="3_1", format="json")
        assert code == EXIT_CHECK_FAILED
        data = json.loads(text)
        assert data["error"] == "MatchFailure"
        assert "rhs" in data["witness"]

    async def test_aj_insufficient_data(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "aj", knot="3_1", n=3, de=1, dqq=1, dq=2,
                               format="json")
        assert code == EXIT_BAD_INPUT
        data = json.loads(text)
        assert data["error"] == "InsufficientData"
        assert data["minimum"] == 25

    async def test_aj_window_rule(self, command_processor: CommandProcessor,
                                  monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("OCTAJONES_RECURSION_DATA_RULE", "windows")
        code, text = await run(command_processor, "aj", knot="3_1", n=3, de=1, dqq=1, dq=2,
                               format="json")
        assert code == EXIT_BAD_INPUT
        assert json.loads(text)["minimum"] == 9

    async def test_aj_schedule_needs_data(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "aj", knot="3_1", n=2, format="json")
        assert code == EXIT_BAD_INPUT
        assert json.loads(text)["minimum"] > 3

    async def test_aj_partial_bounds(self, command_processor: CommandProcessor) -> None:
        code, _ = await run(command_processor, "aj", knot="3_1", n=12, de=1)
        assert code == EXIT_BAD_INPUT

    async def test_curve_needs_points(self, command_processor: CommandProcessor) -> None:
        code, _ = await run(command_processor, "curve", knot="4_1", grid=-1)
        assert code == EXIT_BAD_INPUT

    async def test_list(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "list", format="json")
        assert code == EXIT_OK
        names = [entry["name"] for entry in json.loads(text)["knots"]]
        assert "3_1" in names
        assert "4_1" in names

    async def test_help(self, command_processor: CommandProcessor) -> None:
        code, text = await run(command_processor, "help")
        assert code == EXIT_OK
        assert "**jones**" in text
        assert text.index("#### Invariants") < text.index("#### Geometry")

    async def test_output_file(self, command_processor: CommandProcessor, tmp_path) -> None:
        path = tmp_path / "out.json"
        code, text = await run(command_processor, "jones", knot="0_1", n=1, format="json",
                               out=str(path))
        assert code == EXIT_OK
        assert text == ""
        assert json.loads(path.read_text())["command"] == "jones"


@pytest.mark.slow
@pytest.mark.asyncio
async def test_aj_figure_eight(command_processor: CommandProcessor,
                               monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("OCTAJONES_RECURSION_DATA_RULE", "windows")
    code, text = await run(command_processor, "aj", knot="4_1", n=20, de=3, dqq=8, dq=20,
                           grid=20, format="json")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["aj"]["max_residual"] < 1e-6
    assert data["control"]["max_residual"] > 1e-2
