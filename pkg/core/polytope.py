"""
polytope: V-polytopes, polar duality, Minkowski sums, lattice isomorphism
and exact affine maps between matched vertex sets.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Optional, Sequence, Tuple, Union

from loguru import logger

from core.exactla import Vector, add, affine_rank, dot, particular_solution, scale, to_vector
from core.exceptions import AmbientMismatchError, PolarityError, ValidationError
from core.hull import HullResult, convex_hull
from core.isomorphism import find_facet_isomorphism
from core.scomplex import BierSphere

H0 = "H0"
EUCLIDEAN = "R"


@dataclass(frozen=True)
class VPolytope:
    """
    A polytope given by a point list. `ambient` is H0 for points of the
    sum-zero hyperplane of R^n, R for plain coordinates.
    """

    points: Tuple[Vector, ...]
    ambient: str = EUCLIDEAN

    def __post_init__(self):
        if not self.points:
            raise ValidationError("VPolytope needs at least one point")
        width = len(self.points[0])
        if any(len(p) != width for p in self.points):
            raise ValidationError("VPolytope points have different lengths")
        if len(set(self.points)) != len(self.points):
            raise ValidationError("VPolytope points must be distinct", self.points)
        if self.ambient not in (H0, EUCLIDEAN):
            raise ValidationError(f"Unknown ambient tag {self.ambient!r}", self.ambient)
        if self.ambient == H0 and any(sum(p) != 0 for p in self.points):
            raise ValidationError("H0 points must have coordinate sum zero")

    @classmethod
    def of(cls, points: Sequence[Sequence], ambient: str = EUCLIDEAN) -> "VPolytope":
        return cls(points=tuple(to_vector(p) for p in points), ambient=ambient)

    @property
    def width(self) -> int:
        return len(self.points[0])

    def hull(self, threads: int = 1) -> HullResult:
        return convex_hull(self.points, threads=threads)

    def vertex_set(self, threads: int = 1) -> frozenset:
        if len(self.points) == 1:
            return frozenset(self.points)
        return frozenset(self.hull(threads).vertices)

    def reduced(self, threads: int = 1) -> "VPolytope":
        """The same polytope with non-vertex points removed."""
        if len(self.points) == 1 or affine_rank(self.points) == 0:
            return self
        h = self.hull(threads)
        return VPolytope(points=tuple(h.vertices), ambient=self.ambient)

    def recentered(self) -> "VPolytope":
        """Orthogonal projection onto the sum-zero hyperplane."""
        n = self.width
        projected = [tuple(c - Fraction(sum(p), n) for c in p) for p in self.points]
        return VPolytope(points=tuple(dict.fromkeys(projected)), ambient=H0)

    def to_dict(self) -> Dict:
        return {"ambient": self.ambient, "points": [[str(c) for c in p] for p in self.points]}


def _check_same_ambient(P: VPolytope, Q: VPolytope) -> None:
    if P.ambient != Q.ambient or P.width != Q.width:
        raise AmbientMismatchError(f"Ambient mismatch: {P.ambient}^{P.width} vs {Q.ambient}^{Q.width}")


def minkowski_sum(P: VPolytope, Q: VPolytope, threads: int = 1) -> VPolytope:
    """Pairwise sums of the points, reduced to the vertices of their hull."""
    _check_same_ambient(P, Q)
    sums = tuple(dict.fromkeys(add(p, q) for p in P.points for q in Q.points))
    result = VPolytope(points=sums, ambient=P.ambient).reduced(threads)
    logger.debug(f"Minkowski sum: {len(P.points)} x {len(Q.points)} points -> {len(result.points)} vertices")
    return result


def dilate(P: VPolytope, factor) -> VPolytope:
    factor = Fraction(factor)
    if factor < 0:
        raise ValidationError(f"Dilation factor must be non-negative, got {factor}", factor)
    pts = tuple(dict.fromkeys(scale(factor, p) for p in P.points))
    return VPolytope(points=pts, ambient=P.ambient)


def polar_dual(h: HullResult) -> VPolytope:
    """
    Vertices normal/offset, one per facet. The origin must lie in the
    relative interior: inside the affine hull and strictly below every facet.
    """
    origin = tuple(Fraction(0) for _ in h.points[0])
    if affine_rank(list(h.vertices) + [origin]) != h.dim:
        raise PolarityError("Origin is outside the affine hull of the polytope")
    for idx, f in enumerate(h.facets):
        if f.offset <= 0:
            raise PolarityError(f"Origin is not strictly inside facet {idx} (offset {f.offset})", facet=idx)
    dual = tuple(tuple(Fraction(a) / f.offset for a in f.normal) for f in h.facets)
    ambient = H0 if all(sum(p) == 0 for p in dual) else EUCLIDEAN
    return VPolytope(points=dual, ambient=ambient)


def lattices_isomorphic(a: HullResult, b: Union[HullResult, BierSphere]) -> Optional[Dict[Hashable, Hashable]]:
    """
    A vertex bijection carrying the facet family of `a` onto that of `b`
    (vertex indices of `a` to vertex indices or signed labels of `b`).
    """
    if isinstance(b, BierSphere):
        target_facets = b.signed_facets()
        target_vertices = b.vertices()
    else:
        target_facets = b.facet_vertex_sets()
        target_vertices = list(b.vertex_indices)
    if len(a.vertex_indices) != len(target_vertices):
        return None
    return find_facet_isomorphism(a.facet_vertex_sets(), target_facets,
                                  vertices_a=a.vertex_indices, vertices_b=target_vertices)


@dataclass(frozen=True)
class AffineMap:
    matrix: Tuple[Vector, ...]
    translation: Vector

    def apply(self, p: Sequence) -> Vector:
        return tuple(dot(row, p) + t for row, t in zip(self.matrix, self.translation))


def affine_fit(source: Sequence[Sequence], target: Sequence[Sequence],
               bijection: Dict[int, int]) -> Optional[AffineMap]:
    """
    Solve for an affine map sending source[i] to target[bijection[i]] for
    every matched pair, and verify it exactly. None when no such map exists.
    """
    pairs = sorted(bijection.items())
    if not pairs:
        return None
    src = [to_vector(source[i]) for i, _ in pairs]
    dst = [to_vector(target[j]) for _, j in pairs]
    system = [list(s) + [Fraction(1)] for s in src]
    rows, shift = [], []
    for c in range(len(dst[0])):
        sol = particular_solution(system, [t[c] for t in dst])
        if sol is None:
            return None
        rows.append(tuple(sol[:-1]))
        shift.append(sol[-1])
    fitted = AffineMap(matrix=tuple(rows), translation=tuple(shift))
    if any(fitted.apply(s) != t for s, t in zip(src, dst)):
        return None
    return fitted


def polar_to_cube_chart(v: Sequence) -> Vector:
    """λ = (v + 1) / 2, coordinatewise."""
    return tuple((Fraction(c) + 1) / 2 for c in v)
