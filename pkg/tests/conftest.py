"""
Shared fixtures: small named positions and an isolated config directory
"""

import pytest

from src.game.position import Position, figure_one_position, figure_two_position
from tests.builders import make_position


@pytest.fixture
def empty():
    return Position.empty()


@pytest.fixture
def lone_green():
    return make_position([(0, 1, "G")])


@pytest.fixture
def lone_blue():
    return make_position([(0, 1, "B")])


@pytest.fixture
def blue_red_path():
    """g-a Blue, a-b Red"""
    return make_position([(0, 1, "B"), (1, 2, "R")])


@pytest.fixture
def blue_and_red():
    """Two lone grounded edges, Blue id 0 and Red id 1"""
    return make_position([(0, 1, "B"), (0, 2, "R")])


@pytest.fixture
def figure_one():
    return figure_one_position()


@pytest.fixture
def figure_two():
    return figure_two_position()


@pytest.fixture
def config_dir(tmp_path):
    directory = tmp_path / "configs"
    (directory / "presets").mkdir(parents=True)
    return directory


@pytest.fixture
def position_file(tmp_path):
    """Write position text to a file and return its path"""
    def write(text: str, name: str = "pos.hkb"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return write
