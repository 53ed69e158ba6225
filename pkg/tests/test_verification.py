from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from core.exceptions import ValidationError
from core.scomplex import bier_sphere, hemi_icosahedron
from core.verification import (FAIL, PASS, default_x, facial_criterion, facial_structure_check, minkowski_check,
                               polar_identification, threshold_realization_check, verify_polytopality)
from core.vertex_loader import VertexLoader

HEXAGON_IN_ANGULAR_ORDER = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)]


@pytest.fixture(scope="module")
def hemi_sphere():
    return bier_sphere(hemi_icosahedron())


def test_seven_place_matrix_realizes_the_hemi_icosahedral_sphere(data_path, hemi_sphere):
    points = VertexLoader().load(data_path("hemi_icosahedron_vertices.csv"))
    report = verify_polytopality(points, hemi_sphere)
    assert report.verdict == PASS
    assert report.hull.dim == 5
    assert len(report.hull.facets) == 60
    assert report.hull.soundness_problems() == []


def test_five_decimal_places_are_not_enough(data_path, hemi_sphere):
    points = VertexLoader(round_digits=5).load(data_path("hemi_icosahedron_vertices.csv"))
    report = verify_polytopality(points, hemi_sphere)
    assert report.verdict == FAIL
    assert report.non_vertices or report.missing_facets or report.extra_facets
    data = report.to_dict()
    assert data["verdict"] == "FAIL"
    assert "missing_facets" in data


def test_direct_labeling_of_the_hexagon(data_path, hexagon_complex):
    points = VertexLoader().load(data_path("hexagon.csv"))
    report = verify_polytopality(points, bier_sphere(hexagon_complex))
    assert report.passed
    assert report.method == "direct"
    assert report.labeling == {0: 1, 1: 2, 2: 3, 3: -1, 4: -2, 5: -3}


def test_isomorphism_fallback(hexagon_complex):
    report = verify_polytopality(HEXAGON_IN_ANGULAR_ORDER, bier_sphere(hexagon_complex))
    assert report.passed
    assert report.method == "isomorphism"
    assert sorted(report.labeling) == list(range(6))


def test_failures_are_reports_not_exceptions(hexagon_complex):
    sphere = bier_sphere(hexagon_complex)
    short = verify_polytopality(HEXAGON_IN_ANGULAR_ORDER[:4], sphere)
    assert short.verdict == FAIL
    assert short.reason.startswith("vertex count mismatch")

    octahedron = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    assert "hull dimension 3" in verify_polytopality(octahedron, sphere).reason

    collinear = [(i, i) for i in range(6)]
    assert verify_polytopality(collinear, sphere).verdict == FAIL

    pentagon_and_center = [(2, 0), (1, 2), (-1, 2), (-2, 0), (0, -2), (0, 0)]
    report = verify_polytopality(pentagon_and_center, sphere)
    assert report.verdict == FAIL
    assert report.non_vertices == (5,)


def test_threshold_polytope_realizes_its_bier_sphere(k5_weights):
    weights, nu = k5_weights
    assert threshold_realization_check(weights, nu).verdict == PASS


def test_facial_criterion():
    assert facial_criterion(frozenset({1}), frozenset({2}), 4)
    assert facial_criterion(frozenset({1, 2}), frozenset({3, 4}), 4)
    assert not facial_criterion(frozenset({1, 2}), frozenset({3}), 4)
    assert not facial_criterion(frozenset({1}), frozenset({1}), 5)
    assert facial_criterion(frozenset({1, 2}), frozenset({3}), 5)
    assert not facial_criterion(frozenset({1, 2, 3}), frozenset(), 5)


@pytest.mark.parametrize("n, faces", [(3, 13), (4, 27)])
def test_facial_structure_small(n, faces):
    report = facial_structure_check(n)
    assert report.verdict == PASS
    assert report.computed == report.predicted == faces


def test_facial_structure_omega_5():
    report = facial_structure_check(5)
    assert report.verdict == PASS
    assert report.to_dict()["only_predicted"] == []


def test_polar_identification_even():
    report = polar_identification(4)
    assert report.verdict == PASS
    assert report.polar_vertices == 6
    assert report.combinatorial is True
    assert report.affine_fit


def test_polar_identification_odd():
    report = polar_identification(5)
    assert report.verdict == PASS
    assert report.polar_vertices == 30
    assert report.combinatorial is None


def test_minkowski_decomposition_default():
    assert default_x(4) == (4, 3, 2, 1)
    report = minkowski_check(default_x(4))
    assert report.verdict == PASS
    assert report.lhs_vertices == report.rhs_vertices == 24


def test_minkowski_decomposition_with_weights():
    report = minkowski_check([7, 5, 2, 1])
    assert report.verdict == PASS
    assert [c for c, _ in report.summands] == [2, 3, 1]


def test_minkowski_drops_zero_coefficients():
    report = minkowski_check([2, 1, 1])
    assert report.verdict == PASS
    assert report.summands == ((Fraction(1), 1),)
    assert report.lhs_vertices == 3


def test_minkowski_rejects_increasing_x():
    with pytest.raises(ValidationError):
        minkowski_check([1, 2, 3])
    with pytest.raises(ValidationError):
        minkowski_check([1])


@pytest.mark.slow
def test_omega_6():
    assert facial_structure_check(6).verdict == PASS
    report = polar_identification(6)
    assert report.verdict == PASS
    assert report.polar_vertices == 20


@settings(max_examples=5)
@given(st.lists(st.fractions(min_value=0, max_value=10, max_denominator=7), min_size=4, max_size=4, unique=True))
def test_random_minkowski_instances(values):
    assert minkowski_check(sorted(values, reverse=True)).verdict == PASS


@st.composite
def generic_threshold_weights(draw):
    # odd numerators over 2 * total never equal a subset measure
    raw = draw(st.lists(st.integers(1, 6), min_size=3, max_size=5))
    total = sum(raw)
    m = draw(st.integers(1, 2 * total - 1).filter(lambda v: v % 2 == 1))
    return tuple(Fraction(a, total) for a in raw), Fraction(m, 2 * total)


@settings(max_examples=10)
@given(generic_threshold_weights())
def test_random_threshold_polytopes(case):
    weights, nu = case
    assert threshold_realization_check(weights, nu).verdict == PASS
