from fractions import Fraction

import pytest
from hypothesis import settings

from bmmn.io import preset_ball
from bmmn.norm import validate_ball

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

# five terminals around one crossing configuration of the square ball
STAIRCASE_T = [(0, 0), (1, 6), (-3, 2), (4, 3), (2, 4)]


@pytest.fixture
def square():
    return validate_ball([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def hexagon():
    h = Fraction(1, 2)
    return validate_ball([(1, 0), (h, 1), (-h, 1), (-1, 0), (-h, -1), (h, -1)])


@pytest.fixture
def octagon():
    return preset_ball("octagon-rational")
