import pytest

from octajones.config import Config, load_config


def test_defaults(config: Config) -> None:
    assert config["solver.grid"] == 40
    assert config["recursion.margin"] == 5
    assert config["output.format"] == "text"
    assert list(config["solver.radius"]) == [0.5, 2.0]
    assert "octajones" in config["logging"]["loggers"]


@pytest.mark.parametrize("name,value,expected", [
    ("OCTAJONES_SOLVER_GRID", "12", 12),
    ("OCTAJONES_GLUING_TOLERANCE", "1.0e-6", 1e-6),
    ("OCTAJONES_RECURSION_ORDERS", "[2, 3]", [2, 3]),
    ("OCTAJONES_OUTPUT_FORMAT", "json", "json"),
])
def test_environment_override(config: Config, monkeypatch: pytest.MonkeyPatch, name: str,
                              value: str, expected: object) -> None:
    key = name[len("OCTAJONES_"):].lower().replace("_", ".", 1)
    monkeypatch.setenv(name, value)
    assert config[key] == expected


def test_file_overrides_defaults(config: Config, tmp_path) -> None:
    path = tmp_path / "config.yaml"
    path.write_text("solver:\n    starts: 3\nstate_sum:\n    jobs: 0\n")
    loaded = load_config(str(path))
    assert loaded["solver.starts"] == 3
    assert loaded["solver.grid"] == 40
    assert loaded["state_sum.jobs"] == 1
    assert path.read_text().startswith("solver:")


def test_annihilator_keys_are_the_match_settings(config: Config) -> None:
    assert set(config["annihilator"]) == {"match_points", "match_samples", "match_max_n",
                                          "tolerance"}
    assert config["annihilator.match_samples"] == 4
