from fractions import Fraction

import pytest

from core.exactla import simplex_vertices
from core.exceptions import NonGenericThresholdError, UnsupportedRealizationError, ValidationError
from core.named_polytopes import (canonical_realization, diplo_simplex, hypersimplex, label_row, odd_polar_model,
                                  permutahedron, q_alpha, row_label, starshaped_realization)
from core.polytope import H0, polar_dual, polar_to_cube_chart
from core.scomplex import bier_sphere, skeleton


def test_hypersimplex():
    delta = hypersimplex(4, 2)
    assert len(delta.points) == 6
    hull = delta.hull()
    assert hull.dim == 3
    assert len(hull.facets) == 8
    assert all(abs(c) == Fraction(1, 2) for p in delta.recentered().points for c in p)
    with pytest.raises(ValidationError):
        hypersimplex(4, 4)


def test_permutahedron():
    assert len(permutahedron((3, 2, 1)).points) == 6
    assert permutahedron((2, 1, 1)).points == ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    assert len(permutahedron((4, 3, 2, 1)).hull().facets) == 14


def test_diplo_simplex_facets():
    omega = diplo_simplex(4)
    assert omega.ambient == H0
    hull = omega.hull()
    assert hull.f_vector() == [8, 12, 6]
    for f in hull.facets:
        assert sorted(f.normal) == [-1, -1, 1, 1]
        assert f.offset == 1


def test_odd_polar_model_matches_the_polar_of_omega_5():
    polar = polar_dual(diplo_simplex(5).hull())
    assert len(polar.points) == 30
    assert len(odd_polar_model(5)) == 30
    assert sorted(polar_to_cube_chart(v) for v in polar.points) == odd_polar_model(5)
    with pytest.raises(ValidationError):
        odd_polar_model(4)


def test_q_alpha(k5_weights):
    weights, nu = k5_weights
    Q = q_alpha(weights, nu)
    assert len(Q.points) == 10
    assert Q.points[0] == tuple(15 * c for c in simplex_vertices(5)[0])
    # alpha = (1 - 1/2) / (1/2) = 1
    assert Q.points[5] == tuple(-c for c in Q.points[0])
    with pytest.raises(NonGenericThresholdError):
        q_alpha([Fraction(1, 4)] * 4, Fraction(1, 2))


def test_label_rows_round_trip():
    assert [row_label(r, 3) for r in range(6)] == [1, 2, 3, -1, -2, -3]
    assert all(label_row(row_label(r, 4), 4) == r for r in range(8))


def test_canonical_realization():
    realization = canonical_realization(3)
    assert realization.point(-1) == tuple(-c for c in simplex_vertices(3)[0])
    facet = bier_sphere(skeleton(3, 1)).facets[0]
    assert realization.facet_points(facet) == [realization.point(1), realization.point(-2)]
    assert realization.to_dict()["1"] == ["2/3", "-1/3", "-1/3"]


def test_starshaped_realization_needs_maximal_volume(hemi):
    assert starshaped_realization(hemi).n == 6
    with pytest.raises(UnsupportedRealizationError):
        starshaped_realization(skeleton(4, 0))
