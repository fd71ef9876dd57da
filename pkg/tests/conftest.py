import pytest

from gkm_crystals.cartan import validate_datum

ACCEPTANCE_DATA = {
    "A1": [[2]],
    "J0": [[0]],
    "J2": [[-2]],
    "A2": [[2, -1], [-1, 2]],
    "RI": [[2, -1], [-1, 0]],
}


@pytest.fixture(params=sorted(ACCEPTANCE_DATA))
def acceptance_datum(request):
    return validate_datum(ACCEPTANCE_DATA[request.param])


@pytest.fixture
def sl2():
    return validate_datum([[2]])


@pytest.fixture
def a2():
    return validate_datum([[2, -1], [-1, 2]])
