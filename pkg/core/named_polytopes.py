"""
Named polytopes: hypersimplices, permutahedra, the diplo-simplex Ω_n, the
threshold polytopes Q_α and the canonical ±δ realization of maximal-volume
Bier spheres.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from core.exactla import HPoint, scale, simplex_vertices, to_vector
from core.exceptions import NonGenericThresholdError, UnsupportedRealizationError, ValidationError
from core.polytope import EUCLIDEAN, H0, VPolytope
from core.scomplex import BierFacet, SimplicialComplex, is_maximal_volume, signed_labels
from core.threshold import check_weights, non_generic_face


def hypersimplex(n: int, r: int) -> VPolytope:
    if n < 2 or not 1 <= r <= n - 1:
        raise ValidationError(f"hypersimplex needs 1 <= r <= n-1, got n={n}, r={r}", (n, r))
    points = []
    for ones in combinations(range(n), r):
        points.append(tuple(Fraction(1 if i in ones else 0) for i in range(n)))
    return VPolytope(points=tuple(points), ambient=EUCLIDEAN)


def permutahedron(x: Sequence) -> VPolytope:
    """Distinct coordinate permutations of x, in lexicographic order of first appearance."""
    coords = to_vector(x)
    if not coords:
        raise ValidationError("permutahedron needs a nonempty vector")
    pts = tuple(dict.fromkeys(permutations(coords)))
    return VPolytope(points=pts, ambient=EUCLIDEAN)


def diplo_simplex(n: int) -> VPolytope:
    """Ω_n: δ_1..δ_n followed by -δ_1..-δ_n."""
    deltas = simplex_vertices(n)
    pts = tuple(tuple(d) for d in deltas) + tuple(scale(-1, d) for d in deltas)
    return VPolytope(points=pts, ambient=H0)


def odd_polar_model(n: int) -> List[Tuple[Fraction, ...]]:
    """
    The vertices of the polar of Ω_{2k+1} in the cube chart: vectors in
    {0, 1/2, 1}^n with k zeros, k ones and a single 1/2.
    """
    if n < 3 or n % 2 == 0:
        raise ValidationError(f"odd_polar_model needs odd n >= 3, got {n}", n)
    k = n // 2
    half = Fraction(1, 2)
    model = []
    for ones in combinations(range(n), k):
        rest = [i for i in range(n) if i not in ones]
        for zeros in combinations(rest, k):
            model.append(tuple(Fraction(1) if i in ones else Fraction(0) if i in zeros else half
                               for i in range(n)))
    return sorted(model)


def q_alpha(weights: Sequence, nu) -> VPolytope:
    """
    Q_α = conv{y_i} ∪ {-α y_i} with y_i = δ_i / l_i and α = (1 - ν)/ν. The
    weights must be generic: no subset has measure exactly ν.
    """
    ls, nu = check_weights(weights, nu)
    face = non_generic_face(ls, nu)
    if face is not None:
        raise NonGenericThresholdError(f"Face {list(face)} has measure exactly {nu}", face=face)
    alpha = (1 - nu) / nu
    ys = [scale(1 / l, d) for l, d in zip(ls, simplex_vertices(len(ls)))]
    pts = tuple(ys) + tuple(scale(-alpha, y) for y in ys)
    logger.debug(f"Q_alpha with alpha={alpha} on {len(ls)} weights")
    return VPolytope(points=pts, ambient=H0)


def label_row(label: int, n: int) -> int:
    """Row of a signed label in the 2n-point lists above: i -> i-1, -i -> n+i-1."""
    return label - 1 if label > 0 else n - label - 1


def row_label(row: int, n: int) -> int:
    return row + 1 if row < n else -(row - n + 1)


@dataclass(frozen=True)
class RealizationMap:
    """Signed label -> point of H0; label i goes to δ_i and label -i to -δ_i."""

    n: int
    assignment: Tuple[Tuple[int, HPoint], ...]

    def as_dict(self) -> Dict[int, HPoint]:
        return dict(self.assignment)

    def point(self, label: int) -> HPoint:
        return self.as_dict()[label]

    def facet_points(self, facet: BierFacet) -> List[HPoint]:
        table = self.as_dict()
        return [table[v] for v in signed_labels(facet)]

    def to_dict(self) -> Dict:
        return {str(label): [str(c) for c in p] for label, p in self.assignment}


def canonical_realization(n: int) -> RealizationMap:
    deltas = simplex_vertices(n)
    pairs = [(i + 1, d) for i, d in enumerate(deltas)]
    pairs += [(-(i + 1), HPoint(scale(-1, d))) for i, d in enumerate(deltas)]
    return RealizationMap(n=n, assignment=tuple(pairs))


def starshaped_realization(K: SimplicialComplex) -> RealizationMap:
    if not is_maximal_volume(K):
        raise UnsupportedRealizationError(
            f"Only maximal-volume Bier spheres have the canonical ±δ realization; {K} is not one")
    return canonical_realization(K.n)
