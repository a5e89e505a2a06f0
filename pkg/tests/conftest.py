import pytest
from hypothesis import HealthCheck, settings

from a3c import catalog

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def heis1():
    return catalog.heisenberg(1)


@pytest.fixture(scope="session")
def heis2():
    return catalog.heisenberg(2)


@pytest.fixture(scope="session")
def so3():
    return catalog.so3_flat(1)


@pytest.fixture(scope="session")
def nil3():
    return catalog.nilpotent_three_family(1)


@pytest.fixture(scope="session")
def real_h():
    return catalog.real_heisenberg_product(1)


@pytest.fixture(scope="session")
def complex_h():
    return catalog.complex_heisenberg_product(1)


@pytest.fixture(scope="session")
def su2():
    return catalog.su2_edge()


@pytest.fixture(scope="session")
def model():
    return catalog.first_order_sasaki_model()


@pytest.fixture(scope="session")
def lie_examples():
    return catalog.lie_group_examples(1)
