import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from shadowcover.corpus import named


@pytest.fixture(scope="session")
def pyramid():
    return named("square-pyramid")


@pytest.fixture(scope="session")
def octahedron():
    return named("octahedron")


@pytest.fixture(scope="session")
def cube3():
    return named("cube-3")


@pytest.fixture(scope="session")
def q_directions():
    return named("q-directions")
