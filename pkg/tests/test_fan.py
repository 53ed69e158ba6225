from fractions import Fraction

import pytest

from core.exceptions import (CoarseningError, DegenerateWallError, PseudomanifoldError, RankDeficiencyError,
                             UnsupportedRealizationError, ValidationError)
from core.fan import bier_fan, coarsen_to_diplo, make_fan, ridge_pairs, wall_dependence
from core.scomplex import skeleton

SQUARE_RAYS = {1: (1, 0), 2: (0, 1), -1: (-1, 0), -2: (0, -1)}
SQUARE_CONES = [[1, 2], [-1, 2], [-1, -2], [1, -2]]


def test_square_fan():
    fan = make_fan(2, SQUARE_RAYS, SQUARE_CONES)
    fan.check_simplicial()
    assert fan.dim == 2
    assert fan.labels() == [1, 2, -1, -2]
    assert len(ridge_pairs(fan)) == 4
    assert fan.spot_check_disjointness(samples=32, seed=5) == []


@pytest.mark.parametrize("n, r, cones, ridges", [(4, 1, 12, 18), (6, 2, 60, 150)])
def test_bier_fans_of_skeletons(n, r, cones, ridges):
    fan = bier_fan(skeleton(n, r))
    assert len(fan.maxcones) == cones
    assert fan.dim == n - 1
    fan.check_simplicial()
    assert len(ridge_pairs(fan)) == ridges
    assert fan.spot_check_disjointness(samples=64, seed=20240607) == []


def test_unknown_ray_labels_are_rejected():
    with pytest.raises(ValidationError):
        make_fan(2, {1: (1, 0), 2: (0, 1)}, [[1, -2]])


def test_non_simplicial_cone():
    fan = make_fan(2, {1: (1, 0), 2: (2, 0), -1: (0, 1)}, [[1, 2]])
    with pytest.raises(ValidationError):
        fan.check_simplicial()


def test_overlapping_cones_are_found():
    fan = make_fan(2, {1: (1, 0), 2: (0, 1), -1: (1, 1)}, [[1, 2], [-1, 2]])
    assert fan.spot_check_disjointness(samples=64, seed=0) == [(0, 1)]


def test_open_ridges_raise():
    with pytest.raises(PseudomanifoldError):
        ridge_pairs(make_fan(2, SQUARE_RAYS, [[1, 2]]))


def test_wall_dependence_of_a_flat_wall():
    alpha = wall_dependence([1, 2], [-1, 2], SQUARE_RAYS)
    assert alpha == {1: 1, 2: 0, -1: 1}


def test_wall_dependence_normalization():
    rays = {1: (1, 0), 2: (0, 1), -1: (-1, 1)}
    alpha = wall_dependence([1, 2], [-1, 2], rays)
    assert alpha[1] + alpha[-1] == 2
    assert alpha == {1: 1, 2: -1, -1: 1}


def test_wall_dependence_errors():
    with pytest.raises(ValidationError):
        wall_dependence([1, 2], [-1, -2], SQUARE_RAYS)
    with pytest.raises(RankDeficiencyError):
        wall_dependence([1, 2], [2, -1], {1: (1, 0), 2: (2, 0), -1: (-1, 0)})
    with pytest.raises(DegenerateWallError):
        wall_dependence([1, 2], [2, -1], {1: (1, 0), 2: (0, 1), -1: (1, 1)})


def test_coarsening_of_the_median_skeleton_fan():
    fan = bier_fan(skeleton(4, 1))
    coarsening = coarsen_to_diplo(fan)
    assert len(coarsening.assignment) == 12
    assert len(set(coarsening.assignment)) == 6
    index = fan.maxcones.index((1, -3, -4))
    assert coarsening.facet_of(index) == ((1, 2), (3, 4))
    partner = fan.maxcones.index((2, -3, -4))
    assert coarsening.same_facet(index, partner)
    assert coarsening.to_dict()["assignment"][index] == {"S": [1, 2], "T": [3, 4]}


def test_coarsening_needs_even_n():
    with pytest.raises(UnsupportedRealizationError):
        coarsen_to_diplo(bier_fan(skeleton(5, 2)))


def test_coarsening_rejects_foreign_cones():
    with pytest.raises(CoarseningError):
        coarsen_to_diplo(make_fan(2, SQUARE_RAYS, SQUARE_CONES))


def test_fan_json():
    data = make_fan(2, SQUARE_RAYS, SQUARE_CONES).to_dict()
    assert data["rays"][0] == {"label": 1, "vector": ["1", "0"]}
    assert data["cones"][0] == [1, 2]
    assert Fraction(data["rays"][3]["vector"][1]) == -1
