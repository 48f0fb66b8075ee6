import pytest

from superalg.liealg import build_gl


@pytest.fixture(scope="session")
def gl11():
    return build_gl(1, 1)


@pytest.fixture(scope="session")
def gl21():
    return build_gl(2, 1)


@pytest.fixture(scope="session")
def gl22():
    return build_gl(2, 2)
