import pytest

from corrclass import enumerate_ideals, enumerate_partitions


@pytest.fixture(scope="session")
def lat3():
    return enumerate_partitions(3)


@pytest.fixture(scope="session")
def lat4():
    return enumerate_partitions(4)


@pytest.fixture(scope="session")
def lat5():
    return enumerate_partitions(5)


@pytest.fixture(scope="session")
def ip3(lat3):
    return enumerate_ideals(lat3)


@pytest.fixture(scope="session")
def ip4(lat4):
    return enumerate_ideals(lat4)
