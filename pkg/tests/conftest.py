import random

import pytest


@pytest.fixture
def rng():
    # fixed stream so failures replay exactly
    return random.Random(0x5EED)
