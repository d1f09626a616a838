import pytest

from grouplab.core.oracles import FreeGroup


@pytest.fixture
def f2() -> FreeGroup:
    return FreeGroup(2)
