"""
verification: polytopality of Bier spheres and the face-lattice checks
built on top of the exact hull.

Every check returns a report value with a PASS/FAIL verdict; only malformed
input raises.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from loguru import logger

from core.exactla import to_vector
from core.exceptions import DegenerateHullError, ValidationError
from core.hull import HullResult, convex_hull
from core.named_polytopes import (diplo_simplex, hypersimplex, odd_polar_model, permutahedron,
                                  q_alpha, row_label)
from core.polytope import (H0, VPolytope, affine_fit, dilate, lattices_isomorphic, minkowski_sum,
                           polar_dual, polar_to_cube_chart)
from core.scomplex import BierSphere, bier_sphere
from core.threshold import generic_threshold_complex

PASS = "PASS"
FAIL = "FAIL"


def _label_key(v: int):
    return (v < 0, abs(v))


def _labels(face) -> List[int]:
    return sorted(face, key=_label_key)


def _sorted_faces(faces) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted((tuple(_labels(f)) for f in faces), key=lambda t: [_label_key(v) for v in t]))


@dataclass(frozen=True)
class VerificationReport:
    verdict: str
    reason: str = ""
    method: Optional[str] = None
    # row index -> signed label
    labeling: Optional[Dict[int, int]] = field(default=None, compare=False, hash=False)
    missing_facets: Tuple[Tuple[int, ...], ...] = ()
    extra_facets: Tuple[Tuple[int, ...], ...] = ()
    non_vertices: Tuple[int, ...] = ()
    hull: Optional[HullResult] = field(default=None, compare=False, hash=False, repr=False)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> Dict:
        out = {"verdict": self.verdict, "reason": self.reason, "method": self.method}
        if self.labeling is not None:
            out["labeling"] = {str(row): label for row, label in sorted(self.labeling.items())}
        if self.hull is not None:
            out["hull"] = {"dim": self.hull.dim, "vertices": len(self.hull.vertex_indices),
                           "facets": len(self.hull.facets), "edges": len(self.hull.edges())}
        if self.verdict == FAIL:
            out["missing_facets"] = [list(f) for f in self.missing_facets]
            out["extra_facets"] = [list(f) for f in self.extra_facets]
            out["non_vertices"] = list(self.non_vertices)
        return out


def verify_polytopality(points: Sequence[Sequence], sphere: BierSphere, threads: int = 1,
                        chunk_size: int = 256) -> VerificationReport:
    """
    Check that the boundary of conv(points) realizes `sphere`. Row i < n is
    labeled i+1 and row n+j is labeled -(j+1); if that labeling fails the
    facet families are compared up to isomorphism.
    """
    n = sphere.n
    if len(points) != 2 * n:
        return VerificationReport(verdict=FAIL, reason=f"vertex count mismatch: {len(points)} points, "
                                                       f"sphere on ground set of size {n} needs {2 * n}")
    try:
        hull = convex_hull(points, threads=threads, chunk_size=chunk_size)
    except DegenerateHullError as e:
        return VerificationReport(verdict=FAIL, reason=f"degenerate hull: {e}")
    if hull.dim != n - 1:
        return VerificationReport(verdict=FAIL, hull=hull,
                                  reason=f"hull dimension {hull.dim}, sphere needs {n - 1}")

    labeling = {row: row_label(row, n) for row in range(2 * n)}
    sphere_labels = set(sphere.vertices())
    vertex_rows = set(hull.vertex_indices)
    misplaced = tuple(row for row in range(2 * n)
                      if (labeling[row] in sphere_labels) != (row in vertex_rows))
    sphere_facets = {frozenset(f) for f in sphere.signed_facets()}
    hull_facets = {frozenset(labeling[r] for r in f) for f in hull.facet_vertex_sets()}

    if not misplaced and hull_facets == sphere_facets:
        logger.success(f"Direct labeling realizes the sphere: {len(hull.facets)} facets")
        return VerificationReport(verdict=PASS, reason="facet families equal", method="direct",
                                  labeling=labeling, hull=hull)

    mapping = lattices_isomorphic(hull, sphere)
    if mapping is not None:
        logger.warning("Direct labeling failed; the sphere is realized up to relabeling")
        return VerificationReport(verdict=PASS, reason="facet families isomorphic", method="isomorphism",
                                  labeling=dict(sorted(mapping.items())), hull=hull)

    missing = _sorted_faces(sphere_facets - hull_facets)
    extra = _sorted_faces(hull_facets - sphere_facets)
    non_vertices = tuple(hull.non_vertex_indices())
    reasons = []
    if non_vertices:
        reasons.append(f"{len(non_vertices)} points are not vertices")
    if missing or extra:
        reasons.append(f"facet families differ ({len(missing)} missing, {len(extra)} extra)")
    if not reasons and misplaced:
        reasons.append("vertex set does not match the sphere's labels")
    logger.info(f"Polytopality check failed: {'; '.join(reasons)}")
    return VerificationReport(verdict=FAIL, reason="; ".join(reasons), missing_facets=missing,
                              extra_facets=extra, non_vertices=non_vertices, labeling=labeling, hull=hull)


def threshold_realization_check(weights: Sequence, nu, threads: int = 1) -> VerificationReport:
    """Boundary of hull(Q_α) against Bier(T_{μ_L<ν})."""
    sphere = bier_sphere(generic_threshold_complex(weights, nu))
    return verify_polytopality(q_alpha(weights, nu).points, sphere, threads=threads)


# ---------------------------------------------------------------------------
# Diplo-simplex face lattice and polar identification

def _split(face: FrozenSet[int], n: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    I = frozenset(r + 1 for r in face if r < n)
    J = frozenset(r - n + 1 for r in face if r >= n)
    return I, J


def facial_criterion(I: FrozenSet[int], J: FrozenSet[int], n: int) -> bool:
    """Whether {δ_i : i ∈ I} ∪ {-δ_j : j ∈ J} spans a proper face of Ω_n."""
    if I & J or 2 * len(I) > n or 2 * len(J) > n:
        return False
    if n % 2 == 1:
        return True
    half = n // 2
    return (len(I) == half and len(J) == half) or (len(I) < half and len(J) < half)


@dataclass(frozen=True)
class FacialReport:
    n: int
    verdict: str
    predicted: int
    computed: int
    only_predicted: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = ()
    only_computed: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = ()

    def to_dict(self) -> Dict:
        return {"n": self.n, "verdict": self.verdict, "predicted_faces": self.predicted,
                "computed_faces": self.computed,
                "only_predicted": [[list(i), list(j)] for i, j in self.only_predicted],
                "only_computed": [[list(i), list(j)] for i, j in self.only_computed]}


def facial_structure_check(n: int, threads: int = 1) -> FacialReport:
    """Proper faces of hull(Ω_n) against the (I, J) criterion, over every pair of subsets."""
    hull = diplo_simplex(n).hull(threads)
    top = frozenset(hull.vertex_indices)
    computed = {_split(face, n) for faces in hull.lattice.values() for face in faces if face != top}
    ground = range(1, n + 1)
    subsets = [frozenset(c) for r in range(n + 1) for c in combinations(ground, r)]
    predicted = {(I, J) for I in subsets for J in subsets if facial_criterion(I, J, n)}

    def fmt(pairs):
        return tuple(sorted((tuple(sorted(i)), tuple(sorted(j))) for i, j in pairs))

    only_p, only_c = fmt(predicted - computed), fmt(computed - predicted)
    verdict = PASS if not only_p and not only_c else FAIL
    logger.info(f"Facial structure of Omega_{n}: {len(computed)} proper faces computed, {len(predicted)} predicted")
    return FacialReport(n=n, verdict=verdict, predicted=len(predicted), computed=len(computed),
                        only_predicted=only_p, only_computed=only_c)


@dataclass(frozen=True)
class PolarReport:
    n: int
    verdict: str
    polar_vertices: int
    expected_vertices: int
    chart_matches: bool
    combinatorial: Optional[bool]
    affine_fit: bool

    def to_dict(self) -> Dict:
        return {"n": self.n, "verdict": self.verdict, "polar_vertices": self.polar_vertices,
                "expected_vertices": self.expected_vertices, "chart_matches": self.chart_matches,
                "combinatorially_isomorphic": self.combinatorial, "affine_fit": self.affine_fit}


def polar_identification(n: int, threads: int = 1) -> PolarReport:
    """
    Identify the polar of Ω_n. For even n = 2k the target is the hypersimplex
    Δ_{2k,k}, matched combinatorially and by an exact affine map through the
    cube chart; for odd n it is the {0, 1/2, 1} model.
    """
    polar = polar_dual(diplo_simplex(n).hull(threads))
    charted = [polar_to_cube_chart(v) for v in polar.points]
    k = n // 2
    if n % 2 == 0:
        target = hypersimplex(n, k)
        expected = comb(n, k)
    else:
        target = VPolytope.of(odd_polar_model(n))
        expected = comb(n, k) * comb(n - k, k)
    index = {p: j for j, p in enumerate(target.points)}
    chart_matches = len(charted) == expected and set(charted) == set(index)

    combinatorial = None
    if n % 2 == 0:
        combinatorial = lattices_isomorphic(polar.hull(threads), target.hull(threads)) is not None
    fitted = False
    if chart_matches:
        bijection = {i: index[p] for i, p in enumerate(charted)}
        fitted = affine_fit(polar.points, target.points, bijection) is not None
    ok = chart_matches and fitted and combinatorial is not False
    logger.info(f"Polar of Omega_{n}: {len(polar.points)} vertices, chart match {chart_matches}")
    return PolarReport(n=n, verdict=PASS if ok else FAIL, polar_vertices=len(polar.points),
                       expected_vertices=expected, chart_matches=chart_matches,
                       combinatorial=combinatorial, affine_fit=fitted)


# ---------------------------------------------------------------------------
# Permutahedron decomposition

@dataclass(frozen=True)
class MinkowskiReport:
    x: Tuple[Fraction, ...]
    verdict: str
    lhs_vertices: int
    rhs_vertices: int
    summands: Tuple[Tuple[Fraction, int], ...]

    def to_dict(self) -> Dict:
        return {"x": [str(v) for v in self.x], "verdict": self.verdict,
                "lhs_vertices": self.lhs_vertices, "rhs_vertices": self.rhs_vertices,
                "summands": [{"coefficient": str(c), "hypersimplex": [len(self.x), r]}
                             for c, r in self.summands]}


def default_x(size: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in range(size, 0, -1))


def minkowski_check(x: Sequence, threads: int = 1) -> MinkowskiReport:
    """
    P(x) against Σ (x_r - x_{r+1}) Δ_{m,r} for non-increasing x of length m,
    both sides projected onto the sum-zero hyperplane. Zero-coefficient
    summands are dropped.
    """
    xs = to_vector(x)
    m = len(xs)
    if m < 2:
        raise ValidationError(f"minkowski_check needs at least two coordinates, got {m}", xs)
    for a, b in zip(xs, xs[1:]):
        if a < b:
            raise ValidationError(f"x must be non-increasing, got {[str(v) for v in xs]}", xs)

    lhs = permutahedron(xs).recentered().reduced(threads)
    summands = tuple((xs[r - 1] - xs[r], r) for r in range(1, m) if xs[r - 1] != xs[r])
    rhs = VPolytope(points=(tuple(Fraction(0) for _ in range(m)),), ambient=H0)
    for coeff, r in summands:
        rhs = minkowski_sum(rhs, dilate(hypersimplex(m, r), coeff).recentered(), threads)
    rhs = rhs.reduced(threads)
    verdict = PASS if set(lhs.points) == set(rhs.points) else FAIL
    logger.info(f"Minkowski check for x={[str(v) for v in xs]}: {verdict}")
    return MinkowskiReport(x=xs, verdict=verdict, lhs_vertices=len(lhs.points),
                           rhs_vertices=len(rhs.points), summands=summands)
