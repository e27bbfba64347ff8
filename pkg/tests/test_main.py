import json

import pytest

from octajones.__main__ import build_parser, main


def test_parser_flags() -> None:
    args = build_parser().parse_args(["aj", "--knot", "4_1", "--de", "3", "--dqq", "8", "--dq",
                                      "20", "--numeric-only"])
    assert (args.de, args.dqq, args.dq) == (3, 8, 20)
    assert args.numeric_only
    assert args.format is None


def test_sources_are_exclusive() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["jones", "--knot", "3_1", "--pd", "[]"])


def test_unknown_command() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])


def test_bad_worker_count() -> None:
    assert main(["jones", "--knot", "3_1", "--jobs", "0"]) == 2


def test_jones(tmp_path) -> None:
    path = tmp_path / "jones.json"
    assert main(["jones", "--knot", "3_1", "--n", "1", "--format", "json", "--out",
                 str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["kauffman_agrees"] is True
    assert data["crossings"] == 3


def test_package_metadata() -> None:
    import octajones

    assert octajones.__author__ == "The octajones developers"
    assert octajones.__version__.count(".") == 2
