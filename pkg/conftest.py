import os
from fractions import Fraction

import hypothesis
import pytest

from core.scomplex import hemi_icosahedron, skeleton

hypothesis.settings.register_profile("ci", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


@pytest.fixture
def data_path():
    return lambda name: os.path.join(DATA_DIR, name)


@pytest.fixture
def hemi():
    return hemi_icosahedron()


@pytest.fixture
def hexagon_complex():
    return skeleton(3, 1)


@pytest.fixture
def k5_weights():
    return tuple(Fraction(i, 15) for i in range(1, 6)), Fraction(1, 2)
