import pytest

from kanenobu_knots.algebra import LaurentPoly1
from kanenobu_knots.config import settings
from kanenobu_knots.diagram import PlanarDiagram, load_fixture

# V(4_1) = t^-2 - t^-1 + 1 - t + t^2
FIG8_JONES = LaurentPoly1.from_coefficients([1, -1, 1, -1, 1], -2, "t")
# Q(4_1) = 2x^3 + 4x^2 - 2x - 3
FIG8_Q = LaurentPoly1.from_coefficients([-3, -2, 4, 2], 0, "x")


@pytest.fixture
def fig8_jones():
    return FIG8_JONES


@pytest.fixture
def fig8_q():
    return FIG8_Q


@pytest.fixture(autouse=True)
def no_result_cache(monkeypatch):
    monkeypatch.setattr(settings, "CACHE_DIR", None)


@pytest.fixture
def unknot():
    return PlanarDiagram.unknot()


@pytest.fixture
def curl():
    return load_fixture("curl")


@pytest.fixture
def fig8():
    return load_fixture("4_1")


@pytest.fixture
def hopf():
    return load_fixture("hopf")


@pytest.fixture
def unlink2():
    return load_fixture("unlink2")
