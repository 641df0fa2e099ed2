from typing import Iterator

import networkx as nx
import pytest
from loguru import logger

from asymlab.structures import (Graph, LatinSquare, OneFactorization, Sts,
                                validate_latin)


@pytest.fixture(autouse=True)
def quiet_logger() -> Iterator[None]:
    yield
    logger.remove()


@pytest.fixture
def fano() -> Sts:
    return Sts.fano()


@pytest.fixture
def affine_plane() -> Sts:
    return Sts.affine_plane()


@pytest.fixture
def z3() -> LatinSquare:
    return validate_latin(3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]])


@pytest.fixture
def z4() -> LatinSquare:
    return LatinSquare.cyclic(4)


@pytest.fixture
def k4_factorization() -> OneFactorization:
    return OneFactorization.k4()


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())
