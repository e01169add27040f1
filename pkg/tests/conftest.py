from __future__ import annotations

import pytest

from rbott.bott import BottMatrix

PAPER_EXAMPLE_TEXT = """\
6
001111
001111
000011
000011
000000
000000
"""


@pytest.fixture(scope="session")
def paper_example() -> BottMatrix:
    """The 6x6 matrix whose manifold is Kähler but not spin."""
    return BottMatrix.from_text(PAPER_EXAMPLE_TEXT)


@pytest.fixture(scope="session")
def klein() -> BottMatrix:
    return BottMatrix.from_inline("01;00")


@pytest.fixture()
def paper_example_file(tmp_path):
    path = tmp_path / "paper_example.txt"
    path.write_text(PAPER_EXAMPLE_TEXT)
    return str(path)
