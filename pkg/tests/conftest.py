import pytest

from idemring.classify import completeness_check
from idemring.modarith import Modulus


@pytest.fixture(scope="session")
def mod105():
    return Modulus(105, (3, 5, 7))


@pytest.fixture(scope="session")
def mod385():
    return Modulus(385, (5, 7, 11))


@pytest.fixture(scope="session")
def mod455():
    return Modulus(455, (5, 7, 13))


@pytest.fixture(scope="session")
def completeness385(mod385):
    return completeness_check(mod385)


@pytest.fixture(scope="session")
def completeness455(mod455):
    return completeness_check(mod455)
