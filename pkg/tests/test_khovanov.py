import pytest

from kanenobu_knots.diagram import disjoint_union, kanenobu_diagram, load_fixture, mirror, twist_crossing_indices
from kanenobu_knots.errors import CapExceededError
from kanenobu_knots.kanenobu import FAMILY_TABLES, khovanov_closed_form
from kanenobu_knots.khovanov import (
    BigradedDims,
    build_complex,
    euler_check,
    homology_dims,
    knight_move_check,
    kunneth,
    lee_degrees,
    les_subadditivity_check,
    mirror_dims,
    normalize,
    poincare_polynomial,
    raw_homology_dims,
    thinness_s,
)
from kanenobu_knots.polyinv import jones

UNKNOT_TABLE = BigradedDims({(0, -1): 1, (0, 1): 1}, 1)


def test_unknot_complex(unknot):
    cx = build_complex(unknot)
    assert sum(len(g) for g in cx.generators.values()) == 2
    assert cx.d_squared_is_zero()
    assert homology_dims(unknot) == UNKNOT_TABLE


def test_differential_squares_to_zero_on_family_diagram():
    cx = build_complex(kanenobu_diagram(1, 0))
    assert cx.d_squared_is_zero()
    assert cx.preserves_grading()


def test_lee_differential_squares_to_zero(fig8):
    assert build_complex(fig8, lee=True).d_squared_is_zero()


def test_complex_cap():
    with pytest.raises(CapExceededError):
        build_complex(kanenobu_diagram(2, 0), cap=9)


def test_curl_has_unknot_homology(curl):
    assert homology_dims(curl) == UNKNOT_TABLE


def test_figure_eight_table(fig8):
    dims = homology_dims(fig8)
    assert dims == FAMILY_TABLES.fig8
    assert dims.total == 6
    assert {cell for cell in dims} == {(-2, -5), (-1, -1), (0, -1), (0, 1), (1, 1), (2, 5)}


def test_raw_gradings_normalize_to_link_gradings(fig8):
    raw = raw_homology_dims(fig8)
    assert normalize(raw, fig8.negatives, fig8.positives) == homology_dims(fig8)


def test_hopf_and_unlink_tables(hopf, unlink2):
    assert homology_dims(hopf) == BigradedDims({(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}, 2)
    assert homology_dims(unlink2) == BigradedDims({(0, -2): 1, (0, 0): 2, (0, 2): 1}, 2)


@pytest.mark.parametrize("name", ["unknot", "curl", "4_1", "hopf", "unlink2", "8_8", "8_9"])
def test_euler_characteristic_is_jones(name):
    d = load_fixture(name)
    assert euler_check(homology_dims(d), jones(d))


def test_base_family_table():
    dims = homology_dims(kanenobu_diagram(0, 0))
    assert dims == FAMILY_TABLES.t0
    assert dims.total == 26
    assert dims[(0, -1)] == dims[(0, 1)] == 3


def test_split_union_table(fig8):
    dims = homology_dims(disjoint_union(fig8, fig8))
    assert dims == FAMILY_TABLES.kk
    assert dims[(0, 0)] == 6
    assert dims == kunneth(FAMILY_TABLES.fig8, FAMILY_TABLES.fig8)


@pytest.mark.parametrize("p,q", [
    (-1, 0), (1, 0), (-2, 0), (2, 0), (1, -1),
    pytest.param(2, -1, marks=pytest.mark.slow),
    pytest.param(1, 1, marks=pytest.mark.slow),
    pytest.param(-1, -1, marks=pytest.mark.slow),
    pytest.param(2, -2, marks=pytest.mark.slow),
])
def test_family_homology_matches_closed_form(p, q):
    d = kanenobu_diagram(p, q)
    dims = homology_dims(d)
    assert dims == khovanov_closed_form(p, q)
    assert euler_check(dims, jones(d))
    assert thinness_s(dims) == 0
    assert knight_move_check(dims, 0)


def test_thinness():
    assert thinness_s(FAMILY_TABLES.fig8) == 0
    assert thinness_s(FAMILY_TABLES.t0) == 0
    assert thinness_s(BigradedDims({(0, -1): 1, (0, 1): 1, (0, 3): 1})) is None


def test_knight_move_on_tables():
    t0 = FAMILY_TABLES.t0
    assert t0[(0, -1)] == t0[(1, 3)] + 1
    assert t0[(-2, -5)] == t0[(-1, -1)] == 2
    assert knight_move_check(t0, 0)
    assert knight_move_check(FAMILY_TABLES.fig8, 0)
    assert knight_move_check(UNKNOT_TABLE, 0)
    broken = BigradedDims({(0, -1): 1, (0, 1): 1, (1, 1): 1})
    assert not knight_move_check(broken, 0)


def test_mirror_duality(fig8):
    assert homology_dims(mirror(fig8)) == mirror_dims(homology_dims(fig8))
    d = kanenobu_diagram(1, 0)
    assert homology_dims(mirror(d)) == mirror_dims(homology_dims(d))


def test_exactness_bound_at_every_crossing(fig8, curl):
    assert all(les_subadditivity_check(fig8, c) for c in range(fig8.n))
    assert les_subadditivity_check(curl, 0)


def test_exactness_bound_at_a_twist_crossing():
    d = kanenobu_diagram(-1, 0)
    c = twist_crossing_indices(-1, 0)[0][0]
    assert les_subadditivity_check(d, c)


@pytest.mark.slow
def test_exactness_bound_on_every_crossing_of_family_diagram():
    d = kanenobu_diagram(1, 0)
    assert all(les_subadditivity_check(d, c) for c in range(d.n))


@pytest.mark.parametrize("target,expected", [
    ("4_1", [0, 0]),
    ("unlink2", [0, 0, 0, 0]),
    ("hopf", [0, 0, 2, 2]),
    ("unknot", [0, 0]),
])
def test_lee_degrees_of_fixtures(target, expected):
    assert lee_degrees(load_fixture(target)) == expected


@pytest.mark.parametrize("p,q", [(0, 0), (1, 0)])
def test_lee_degrees_of_family_knots(p, q):
    assert lee_degrees(kanenobu_diagram(p, q)) == [0, 0]


def test_poincare_polynomial_lists_every_cell():
    text = poincare_polynomial(FAMILY_TABLES.fig8)
    assert text.count("t^") + text.count("q^") >= 6
