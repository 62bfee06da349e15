import cmath
import math

import pytest
from hypothesis import strategies as st

from diskmetrics.oracle import make_rng, random_pairs


def disk_points(max_modulus=0.95):
    """Hypothesis strategy for points inside the disk of radius ``max_modulus``."""
    return st.builds(
        lambda r, t: cmath.rect(max_modulus * math.sqrt(r), t),
        st.floats(0.0, 1.0),
        st.floats(0.0, 2 * math.pi),
    )


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture(scope="session")
def pairs_1000():
    return random_pairs(1000, seed=7)
