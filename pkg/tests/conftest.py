import pytest

from fuzzysim.model import builtin_model


@pytest.fixture(scope="session")
def s1():
    return builtin_model("s1")


@pytest.fixture(scope="session")
def s1p():
    return builtin_model("s1_prime")


@pytest.fixture(scope="session")
def s2():
    return builtin_model("s2")


@pytest.fixture(scope="session")
def s2p():
    return builtin_model("s2_prime")
