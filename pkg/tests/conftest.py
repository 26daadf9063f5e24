from __future__ import annotations

import pytest

from quiverhorn import hexagon_quiver, kronecker_quiver, single_arrow_quiver, square_quiver


@pytest.fixture
def square():
    return square_quiver()


@pytest.fixture
def square_ambient():
    return {"1": (1, 2), "2": (1, 2, 3), "3": (1, 2, 3), "4": (1, 2)}


@pytest.fixture
def square_good():
    # accepted position with expected dimension 2
    return {"1": (1,), "2": (2, 3), "3": (2, 3), "4": (1, 2)}


@pytest.fixture
def square_bad():
    # rejected position with expected dimension 0
    return {"1": (1,), "2": (2, 3), "3": (1, 2), "4": (1, 2)}


@pytest.fixture
def square_witness():
    # the subfamily that rules square_bad out
    return {"1": (1,), "2": (3,), "3": (2,), "4": (1, 2)}


@pytest.fixture
def hexagon():
    return hexagon_quiver()


@pytest.fixture
def hexagon_ambient(hexagon):
    return {v: (1, 2) for v in hexagon.vertices}


@pytest.fixture
def kronecker():
    return kronecker_quiver()


@pytest.fixture
def single_arrow():
    return single_arrow_quiver()
