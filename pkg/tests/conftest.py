import random

import pytest

from src.algebra.field import ONE, SQRT3
from src.algebra.hesse import HesseCurve, torsion3
from src.algebra.plinalg import ProjPoint

LAM_GENERIC = 2
LAM_J0 = 0
LAM_J1728 = ONE + SQRT3


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def e2():
    """E_2 и точка s = (1:2:3) на ней бесконечного порядка."""
    return HesseCurve.of(LAM_GENERIC)


@pytest.fixture
def s(e2):
    return e2.point(ProjPoint.of(1, 2, 3))


@pytest.fixture
def torsion():
    return torsion3()


@pytest.fixture
def random_point(e2, s, rng):
    """k·s + pₗ со случайными k ∈ [−2, 2] и l."""

    def draw():
        k = rng.randint(-2, 2)
        offset = e2.point(rng.choice(torsion3()))
        return k * s + offset

    return draw
