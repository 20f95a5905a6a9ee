import pytest

from coleman.constructors import standard_catalog


Q8_SPEC = {
    "construct": "perm",
    "degree": 8,
    "generators": [
        [2, 3, 1, 0, 6, 7, 5, 4],
        [4, 5, 7, 6, 1, 0, 2, 3],
    ],
}


@pytest.fixture(scope="session")
def catalog300():
    return dict(standard_catalog(300))


@pytest.fixture(scope="session")
def q8_spec():
    return Q8_SPEC
