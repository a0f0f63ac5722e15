import pytest

from hsos.core import RingContext, parse_polynomial
from hsos.groebner import Ideal
from hsos.sos import EXAMPLE_G, EXAMPLE_GENERATORS


@pytest.fixture
def xy():
    return RingContext(("x", "y"))


@pytest.fixture
def R4():
    return RingContext.standard(4)


@pytest.fixture
def example_pair(R4):
    fgens = [parse_polynomial(t, R4) for t in EXAMPLE_GENERATORS]
    return Ideal(R4, fgens), parse_polynomial(EXAMPLE_G, R4)
