from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given

from core.exceptions import DegenerateComplexError, NonGenericThresholdError, ValidationError
from core.scomplex import make_complex, skeleton
from core.threshold import (NotThreshold, ThresholdCert, generic_threshold_complex, is_threshold, measure,
                            non_generic_face, threshold_complex)


def test_measure_uses_one_based_labels():
    weights = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
    assert measure(weights, (1, 3)) == Fraction(2, 3)
    assert measure(weights, ()) == 0


def test_threshold_complex_of_example_weights(k5_weights):
    weights, nu = k5_weights
    K = threshold_complex(weights, nu)
    assert K == make_complex(5, [[1, 2, 3], [1, 2, 4], [1, 5], [2, 5], [3, 4]])


def test_threshold_complex_can_be_the_void_complex():
    assert threshold_complex([Fraction(1, 2), Fraction(1, 2)], Fraction(1, 4)).is_void_like()


def test_weight_validation():
    with pytest.raises(ValidationError):
        threshold_complex([Fraction(1, 2), Fraction(1, 2), 0], Fraction(1, 3))
    with pytest.raises(ValidationError):
        threshold_complex([Fraction(1, 2), Fraction(1, 3)], Fraction(1, 3))
    with pytest.raises(ValidationError):
        threshold_complex([Fraction(1, 2), Fraction(1, 2)], 1)


def test_non_generic_threshold_is_rejected():
    weights = [Fraction(1, 4)] * 4
    assert non_generic_face(weights, Fraction(1, 2)) == (1, 2)
    with pytest.raises(NonGenericThresholdError) as info:
        generic_threshold_complex(weights, Fraction(1, 2))
    assert info.value.face == (1, 2)


def test_uniform_certificate_for_a_skeleton():
    K = skeleton(6, 2)
    cert = ThresholdCert(weights=(Fraction(1, 6),) * 6, threshold=Fraction(5, 12), margin=Fraction(1, 12))
    assert cert.verify(K)
    assert not ThresholdCert(weights=(Fraction(1, 6),) * 6, threshold=Fraction(1, 2),
                             margin=Fraction(1, 12)).verify(K)


SKELETA = [(n, r) for n in range(2, 8) for r in range(1, n)]


@pytest.mark.parametrize("n, r", SKELETA)
def test_detection_on_skeleta(n, r):
    K = skeleton(n, r)
    result = is_threshold(K)
    assert result.is_threshold
    assert result.margin > 0
    assert all(v > 0 for v in result.weights)
    assert result.verify(K)
    assert threshold_complex(result.weights, result.threshold) == K


def test_detection_on_example_complex():
    K = make_complex(5, [[1, 2, 3], [1, 2, 4], [1, 5], [2, 5], [3, 4]])
    result = is_threshold(K)
    assert isinstance(result, ThresholdCert)
    assert result.verify(K)
    assert result.to_dict()["threshold"] is True


def test_hemi_icosahedron_is_not_threshold(hemi):
    result = is_threshold(hemi)
    assert isinstance(result, NotThreshold)
    assert result.optimum <= 0
    assert result.dual_bound() == result.optimum
    assert result.to_dict()["threshold"] is False


def test_two_disjoint_edges_are_not_threshold():
    result = is_threshold(make_complex(4, [[1, 2], [3, 4]]))
    assert not result.is_threshold
    assert result.optimum == 0
    assert result.dual_bound() == 0


def test_degenerate_inputs():
    with pytest.raises(DegenerateComplexError):
        is_threshold(make_complex(3, []))
    with pytest.raises(DegenerateComplexError):
        is_threshold(make_complex(3, [[1, 2, 3]]))


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=2, max_size=5),
       st.fractions(min_value=Fraction(1, 97), max_value=Fraction(96, 97), max_denominator=97))
def test_generated_threshold_complexes_are_detected(raw, nu):
    total = sum(raw)
    weights = [Fraction(v, total) for v in raw]
    assume(non_generic_face(weights, nu) is None)
    K = threshold_complex(weights, nu)
    assume(not K.is_void_like())
    result = is_threshold(K)
    assert result.is_threshold
    assert result.verify(K)
