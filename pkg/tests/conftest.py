import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gcsets import (
    chung_yao,
    gc3_four_maximal,
    principal_lattice,
    random_lines_general_position,
)


@pytest.fixture(scope="session")
def lattice2():
    return principal_lattice(2)


@pytest.fixture(scope="session")
def lattice3():
    return principal_lattice(3)


@pytest.fixture(scope="session")
def lattice4():
    return principal_lattice(4)


@pytest.fixture(scope="session")
def cy3():
    return chung_yao(random_lines_general_position(5, seed=101))


@pytest.fixture(scope="session")
def gc3fm():
    return gc3_four_maximal(seed=7)
