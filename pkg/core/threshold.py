"""
threshold: detection and construction of threshold complexes.

A complex K on [n] is threshold when some probability weights L and a
threshold ν satisfy μ_L(A) < ν exactly for the faces A of K. Detection
maximizes a separating margin t with the exact simplex solver; only facets
and minimal non-faces need constraints since weights are nonnegative.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from loguru import logger

from core.exceptions import DegenerateComplexError, LPError, NonGenericThresholdError, ValidationError
from core.lp_solver import maximize
from core.scomplex import Face, SimplicialComplex, minimal_non_faces


def measure(weights: Sequence[Fraction], face: Iterable[int]) -> Fraction:
    """μ_L(A) = Σ_{i∈A} l_i with 1-based labels."""
    return sum((weights[i - 1] for i in face), Fraction(0))


def check_weights(weights: Sequence, nu) -> Tuple[Tuple[Fraction, ...], Fraction]:
    ls = tuple(Fraction(v) for v in weights)
    nu = Fraction(nu)
    if not ls:
        raise ValidationError("Weight vector is empty")
    if any(v <= 0 for v in ls):
        raise ValidationError(f"Weights must be positive, got {[str(v) for v in ls]}", ls)
    if sum(ls) != 1:
        raise ValidationError(f"Weights must sum to 1, got {sum(ls)}", ls)
    if not 0 < nu < 1:
        raise ValidationError(f"Threshold must lie in (0, 1), got {nu}", nu)
    return ls, nu


def non_generic_face(weights: Sequence[Fraction], nu: Fraction):
    """The first subset (by size, then lexicographically) with measure exactly ν, or None."""
    n = len(weights)
    for r in range(n + 1):
        for face in combinations(range(1, n + 1), r):
            if measure(weights, face) == nu:
                return face
    return None


def threshold_complex(weights: Sequence, nu) -> SimplicialComplex:
    """T_{μ_L<ν}: the facets are the sets A with μ_L(A) < ν that cannot grow by one element."""
    ls, nu = check_weights(weights, nu)
    n = len(ls)
    facets = []
    for r in range(n + 1):
        for face in combinations(range(1, n + 1), r):
            mu = measure(ls, face)
            if mu >= nu:
                continue
            if all(mu + ls[m - 1] >= nu for m in range(1, n + 1) if m not in face):
                facets.append(face)
    if facets == [tuple(range(1, n + 1))]:
        raise DegenerateComplexError("Threshold above the total weight gives the full simplex", facets)
    return SimplicialComplex(n=n, facets=tuple(facets))


def generic_threshold_complex(weights: Sequence, nu) -> SimplicialComplex:
    ls, nu = check_weights(weights, nu)
    face = non_generic_face(ls, nu)
    if face is not None:
        raise NonGenericThresholdError(f"Face {list(face)} has measure exactly {nu}", face=face)
    return threshold_complex(ls, nu)


@dataclass(frozen=True)
class ThresholdCert:
    weights: Tuple[Fraction, ...]
    threshold: Fraction
    margin: Fraction

    @property
    def is_threshold(self) -> bool:
        return True

    def verify(self, K: SimplicialComplex) -> bool:
        """Exact re-check of every face and minimal non-face inequality."""
        if self.margin <= 0 or any(v <= 0 for v in self.weights) or sum(self.weights) != 1:
            return False
        faces_ok = all(measure(self.weights, f) <= self.threshold - self.margin for f in K.facets)
        non_faces_ok = all(measure(self.weights, b) >= self.threshold + self.margin
                           for b in minimal_non_faces(K))
        return faces_ok and non_faces_ok

    def to_dict(self) -> Dict:
        return {
            "threshold": True,
            "weights": [str(v) for v in self.weights],
            "nu": str(self.threshold),
            "margin": str(self.margin),
        }


@dataclass(frozen=True)
class NotThreshold:
    """
    The LP optimum t* <= 0 together with the final dual values. The duals
    satisfy strong duality, so `dual_bound()` reproduces t* exactly.
    """

    optimum: Fraction
    duals: Tuple[Fraction, ...]
    rhs: Tuple[Fraction, ...]

    @property
    def is_threshold(self) -> bool:
        return False

    def dual_bound(self) -> Fraction:
        return 1 + sum((y * b for y, b in zip(self.duals, self.rhs)), Fraction(0))

    def to_dict(self) -> Dict:
        return {
            "threshold": False,
            "optimum": str(self.optimum),
            "dual_bound": str(self.dual_bound()),
            "duals": [str(v) for v in self.duals],
        }


ThresholdResult = Union[ThresholdCert, NotThreshold]


def _margin_lp(K: SimplicialComplex, non_faces: List[Face]) -> Tuple[List[Fraction], List]:
    """
    Variables l_1..l_n, ν, w >= 0 with t = 1 - w, so t <= 1 is implicit.
    Objective: maximize -w.
    """
    n = K.n
    nvars = n + 2
    constraints = []
    for a in K.facets:
        row = [Fraction(0)] * nvars
        for i in a:
            row[i - 1] = Fraction(1)
        row[n] = Fraction(-1)
        row[n + 1] = Fraction(-1)
        constraints.append((row, "<=", -1))
    for b in non_faces:
        row = [Fraction(0)] * nvars
        for i in b:
            row[i - 1] = Fraction(-1)
        row[n] = Fraction(1)
        row[n + 1] = Fraction(-1)
        constraints.append((row, "<=", -1))
    constraints.append(([Fraction(1)] * n + [Fraction(0), Fraction(0)], "==", 1))
    constraints.append(([Fraction(0)] * n + [Fraction(1), Fraction(0)], "<=", 1))
    objective = [Fraction(0)] * n + [Fraction(0), Fraction(-1)]
    return objective, constraints


def _strictly_positive(weights: Tuple[Fraction, ...], nu: Fraction, margin: Fraction,
                       K: SimplicialComplex, non_faces: List[Face]) -> Tuple[Tuple[Fraction, ...], Fraction]:
    """Blend an LP vertex with the uniform measure at half the margin and recompute the margin."""
    n = len(weights)
    eps = margin / 2
    blended = tuple((1 - eps) * v + eps / n for v in weights)
    top = max(measure(blended, f) for f in K.facets)
    bottom = min(measure(blended, b) for b in non_faces)
    return blended, min(nu - top, bottom - nu)


def is_threshold(K: SimplicialComplex) -> ThresholdResult:
    if K.is_void_like() or K.is_full_simplex():
        raise DegenerateComplexError("Threshold detection needs {∅} != K != 2^[n]", str(K))
    non_faces = minimal_non_faces(K)
    objective, constraints = _margin_lp(K, non_faces)
    logger.debug(f"Threshold LP for {K}: {len(constraints)} constraints")
    try:
        result = maximize(objective, constraints)
    except LPError as e:
        raise DegenerateComplexError(f"Threshold LP ended {e.status}", str(K)) from e
    if not result.is_optimal:
        raise DegenerateComplexError(f"Threshold LP ended {result.status}", str(K))

    optimum = 1 + result.objective
    if optimum <= 0:
        logger.info(f"Complex is not threshold: optimal margin {optimum}")
        return NotThreshold(optimum=optimum, duals=result.duals,
                            rhs=tuple(Fraction(c[2]) for c in constraints))

    weights = result.x[:K.n]
    nu = result.x[K.n]
    margin = optimum
    if any(v == 0 for v in weights):
        weights, margin = _strictly_positive(weights, nu, margin, K, non_faces)
    logger.info(f"Complex is threshold: nu={nu}, margin={margin}")
    return ThresholdCert(weights=tuple(weights), threshold=nu, margin=margin)
