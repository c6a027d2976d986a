import pytest

from mqamlink import CircuitProfile, PropagationParams, RadioConfig


@pytest.fixture(scope="session")
def prop():
    return PropagationParams()


@pytest.fixture(scope="session")
def circuit():
    return CircuitProfile()


@pytest.fixture(scope="session")
def radio():
    return RadioConfig()
