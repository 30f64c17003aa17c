import pytest

from arcgeom import hermitian, oracle
from arcgeom.fieldtower import ctx_for_q


@pytest.fixture(scope="session")
def ctx2():
    return ctx_for_q(2)


@pytest.fixture(scope="session")
def ctx3():
    return ctx_for_q(3)


@pytest.fixture(scope="session")
def ctx4():
    return ctx_for_q(4)


@pytest.fixture(scope="session")
def orc2(ctx2):
    return oracle.Oracle(ctx2, hermitian.enumerate_curve(ctx2))


@pytest.fixture(scope="session")
def orc3(ctx3):
    return oracle.Oracle(ctx3, hermitian.enumerate_curve(ctx3))
