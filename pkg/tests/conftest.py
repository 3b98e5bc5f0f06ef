import random

import pytest

from jordankit.rings import RATIONAL, PrimeFieldRing


@pytest.fixture
def rng():
    return random.Random(0xA5A5)


@pytest.fixture(params=["rational", "fp5"])
def exact_ring(request):
    return {"rational": RATIONAL, "fp5": PrimeFieldRing(5)}[request.param]
