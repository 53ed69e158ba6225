from fractions import Fraction
from itertools import permutations, product

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given

from core.exactla import affine_rank, dot
from core.exceptions import DegenerateHullError, ValidationError
from core.hull import _supporting, convex_hull
from core.parallel import chunked, ordered_map

SQUARE_WITH_CENTER = [(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))]


def _square(x):
    return x * x


def test_square_with_interior_point():
    hull = convex_hull(SQUARE_WITH_CENTER)
    assert hull.dim == 2
    assert hull.vertex_indices == (0, 1, 2, 3)
    assert hull.non_vertex_indices() == [4]
    assert [f.normal for f in hull.facets] == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert [f.offset for f in hull.facets] == [0, 0, 1, 1]
    assert hull.f_vector() == [4, 4]
    assert hull.soundness_problems() == []


def test_supporting_hyperplane_orientation():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert _supporting((0, 1), pts, 2) == ((0, -1), frozenset({0, 1}))
    assert _supporting((1, 2), pts, 2) == ((1, 0), frozenset({1, 2}))
    assert _supporting((0, 2), pts, 2) is None


def test_cube_face_lattice():
    cube = list(product((0, 1), repeat=3))
    hull = convex_hull(cube)
    assert hull.f_vector() == [8, 12, 6]
    assert len(hull.edges()) == 12
    assert all(len(f.vertices) == 4 for f in hull.facets)
    assert hull.soundness_problems() == []


def test_points_in_the_sum_zero_hyperplane():
    hexagon = list(permutations((1, 0, -1)))
    hull = convex_hull(hexagon)
    assert hull.dim == 2
    assert len(hull.vertex_indices) == 6
    assert len(hull.facets) == 6
    for f in hull.facets:
        assert sum(f.normal) == 0
    assert hull.soundness_problems() == []


def test_segment_with_midpoint():
    hull = convex_hull([(0, 0), (2, 2), (1, 1)])
    assert hull.dim == 1
    assert hull.vertex_indices == (0, 1)
    assert hull.f_vector() == [2]


def test_invalid_inputs():
    with pytest.raises(ValidationError):
        convex_hull([])
    with pytest.raises(ValidationError):
        convex_hull([(0, 0), (1, 0), (0, 0)])
    with pytest.raises(ValidationError):
        convex_hull([(0, 0), (1, 0, 0)])
    with pytest.raises(DegenerateHullError):
        convex_hull([(1, 2)])


def test_worker_pool_gives_identical_result():
    cube = list(product((0, 1), repeat=3)) + [(Fraction(1, 2),) * 3]
    single = convex_hull(cube)
    pooled = convex_hull(cube, threads=2, chunk_size=7)
    assert pooled.facets == single.facets
    assert pooled.vertex_indices == single.vertex_indices


def test_hull_json():
    data = convex_hull(SQUARE_WITH_CENTER).to_dict()
    assert data["dim"] == 2
    assert data["vertices"][0] == ["0", "0"]
    assert data["facets"][0] == {"normal": [-1, 0], "offset": "0", "vertices": [0, 2]}


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=9, unique=True))
def test_random_planar_hulls_are_sound(points):
    assume(affine_rank(points) == 2)
    hull = convex_hull(points)
    assert hull.soundness_problems() == []
    assert len(hull.facets) == len(hull.vertex_indices)
    for f in hull.facets:
        assert max(dot(f.normal, p) for p in points) == f.offset


def test_chunked_and_ordered_map():
    assert list(chunked(range(5), 2)) == [[0, 1], [2, 3], [4]]
    assert ordered_map(_square, [3, 1, 2]) == [9, 1, 4]
    assert ordered_map(_square, [3, 1, 2], threads=2) == [9, 1, 4]
