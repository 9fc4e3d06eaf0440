import pytest

from dynzeta.field import field_make, ratfunc_field


@pytest.fixture(scope="session")
def F2():
    return field_make(2)


@pytest.fixture(scope="session")
def F3():
    return field_make(3)


@pytest.fixture(scope="session")
def F5():
    return field_make(5)


@pytest.fixture(scope="session")
def F7():
    return field_make(7)


@pytest.fixture(scope="session")
def F3u():
    return ratfunc_field(3)
