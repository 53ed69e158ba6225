"""
hull: exact convex hulls with the full face lattice.

Facets are found by exhaustive supporting-hyperplane enumeration over
d-subsets of the input, working in an exact affine chart of the affine
hull so that H0-embedded and other lower-dimensional inputs behave like
full-dimensional ones. Subsets lying inside an already-found facet are
skipped. Facet normals are reported in ambient coordinates, projected onto
the direction space of the affine hull.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm
from typing import Dict, FrozenSet, List, Sequence, Tuple

from loguru import logger

from core.exactla import (Vector, affine_rank, dot, echelon_form, nullspace,
                          primitive_integer_vector, solve, sub, to_vector)
from core.exceptions import DegenerateHullError, ValidationError
from core.parallel import chunked, ordered_map


@dataclass(frozen=True)
class Facet:
    normal: Tuple[int, ...]
    offset: Fraction
    # input indices achieving equality
    incidence: FrozenSet[int]
    # the subset of `incidence` that are vertices
    vertices: FrozenSet[int]

    def to_dict(self) -> Dict:
        return {"normal": list(self.normal), "offset": str(self.offset),
                "vertices": sorted(self.vertices)}


@dataclass(frozen=True)
class HullResult:
    """
    Convex hull of `points`. Facet incidences, vertex indices and lattice
    faces are index sets into `points`.
    """

    points: Tuple[Vector, ...]
    dim: int
    vertex_indices: Tuple[int, ...]
    facets: Tuple[Facet, ...]
    lattice: Dict[int, List[FrozenSet[int]]] = field(compare=False, hash=False)

    @property
    def vertices(self) -> List[Vector]:
        return [self.points[i] for i in self.vertex_indices]

    def non_vertex_indices(self) -> List[int]:
        keep = set(self.vertex_indices)
        return [i for i in range(len(self.points)) if i not in keep]

    def facet_vertex_sets(self) -> List[FrozenSet[int]]:
        return [f.vertices for f in self.facets]

    def faces(self, dim: int) -> List[FrozenSet[int]]:
        return self.lattice.get(dim, [])

    def edges(self) -> List[FrozenSet[int]]:
        return self.faces(1)

    def f_vector(self) -> List[int]:
        return [len(self.faces(k)) for k in range(self.dim)]

    def soundness_problems(self) -> List[str]:
        """Violations of the hull invariants, empty when the result is sound."""
        problems = []
        for idx, f in enumerate(self.facets):
            values = [dot(f.normal, p) for p in self.points]
            if any(v > f.offset for v in values):
                problems.append(f"facet {idx}: some point violates its inequality")
            tight = frozenset(i for i, v in enumerate(values) if v == f.offset)
            if tight != f.incidence:
                problems.append(f"facet {idx}: incidence differs from the tight points")
            if affine_rank([self.points[i] for i in f.vertices]) != self.dim - 1:
                problems.append(f"facet {idx}: vertices span less than a hyperplane")
        euler = sum((-1) ** (d % 2) * len(faces) for d, faces in self.lattice.items())
        if euler != 0:
            problems.append(f"lattice Euler sum is {euler}, expected 0")
        all_faces = {face for faces in self.lattice.values() for face in faces}
        for a, b in combinations(all_faces, 2):
            if a & b not in all_faces:
                problems.append(f"lattice not closed under intersection: {sorted(a)} & {sorted(b)}")
                break
        return problems

    def to_dict(self) -> Dict:
        return {
            "dim": self.dim,
            "vertices": [[str(c) for c in self.points[i]] for i in self.vertex_indices],
            "vertex_indices": list(self.vertex_indices),
            "facets": [f.to_dict() for f in self.facets],
        }


class _AffineChart:
    """
    Coordinates of the affine hull read off at the pivot columns of the
    echelonized difference vectors; that projection is injective on the
    direction space W.
    """

    def __init__(self, points: Sequence[Vector]):
        self.base = points[0]
        diffs = [sub(p, self.base) for p in points[1:]]
        rows, pivots = echelon_form(diffs) if diffs else ([], [])
        self.pivots = pivots
        self.dim = len(pivots)
        self.basis = [to_vector(r) for r in rows]
        self.gram = [[dot(u, v) for v in self.basis] for u in self.basis]

    def coords(self, p: Vector) -> Vector:
        return tuple(p[c] for c in self.pivots)

    def ambient_normal(self, local: Sequence) -> Tuple[int, ...]:
        """The vector a ∈ W with <a, w> = <local, coords(w)> for all w ∈ W."""
        rhs = [dot(local, self.coords(w)) for w in self.basis]
        coeffs = solve(self.gram, rhs)
        ambient = [sum((c * w[j] for c, w in zip(coeffs, self.basis)), Fraction(0))
                   for j in range(len(self.base))]
        return primitive_integer_vector(ambient)


def _integer_coords(local: List[Vector]) -> List[Tuple[int, ...]]:
    denom = reduce(lcm, (c.denominator for p in local for c in p), 1)
    return [tuple(int(c * denom) for c in p) for p in local]


def _supporting(subset: Tuple[int, ...], pts: List[Tuple[int, ...]], d: int):
    """Oriented normal and tight set of the hyperplane through `subset`, if it supports."""
    first = pts[subset[0]]
    rows = [tuple(a - b for a, b in zip(pts[i], first)) for i in subset[1:]]
    kernel = nullspace(rows, ncols=d)
    if len(kernel) != 1:
        return None
    normal = kernel[0]
    values = [sum(a * b for a, b in zip(normal, p)) for p in pts]
    level = values[subset[0]]
    if not all(v <= level for v in values):
        if not all(v >= level for v in values):
            return None
        normal = tuple(-a for a in normal)
    return normal, frozenset(i for i, v in enumerate(values) if v == level)


def _scan_chunk(args) -> List[Tuple[Tuple[int, ...], FrozenSet[int]]]:
    subsets, pts, d = args
    found = []
    known: List[FrozenSet[int]] = []
    for subset in subsets:
        if any(known_set.issuperset(subset) for known_set in known):
            continue
        hit = _supporting(subset, pts, d)
        if hit is not None:
            found.append(hit)
            known.append(hit[1])
    return found


def _face_lattice(vertex_sets: List[FrozenSet[int]], all_vertices: FrozenSet[int],
                  points: Sequence[Vector]) -> Dict[int, List[FrozenSet[int]]]:
    faces = set(vertex_sets)
    frontier = set(vertex_sets)
    while frontier:
        fresh = {a & b for a in frontier for b in vertex_sets} - faces
        faces |= fresh
        frontier = fresh
    faces.add(all_vertices)
    faces.add(frozenset())
    graded: Dict[int, List[FrozenSet[int]]] = {}
    for face in faces:
        dim = affine_rank([points[i] for i in sorted(face)])
        graded.setdefault(dim, []).append(face)
    return {d: sorted(fs, key=sorted) for d, fs in sorted(graded.items())}


def convex_hull(points: Sequence[Sequence], threads: int = 1, chunk_size: int = 256) -> HullResult:
    pts = [to_vector(p) for p in points]
    if not pts:
        raise ValidationError("convex_hull needs at least one point")
    width = len(pts[0])
    if any(len(p) != width for p in pts):
        raise ValidationError("Points have different lengths", [len(p) for p in pts])
    seen: Dict[Vector, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise ValidationError(f"Duplicate point at rows {seen[p]} and {i}", p)
        seen[p] = i

    chart = _AffineChart(pts)
    d = chart.dim
    if d < 1:
        raise DegenerateHullError("Points span an affine space of dimension 0", dimension=d)
    local = _integer_coords([chart.coords(p) for p in pts])
    logger.debug(f"Hull of {len(pts)} points, intrinsic dimension {d}")

    subsets = combinations(range(len(pts)), d)
    if threads > 1:
        tasks = [(chunk, local, d) for chunk in chunked(subsets, chunk_size)]
        hits = [hit for part in ordered_map(_scan_chunk, tasks, threads) for hit in part]
    else:
        hits = _scan_chunk((subsets, local, d))

    by_incidence: Dict[FrozenSet[int], Tuple[int, ...]] = {}
    for normal, tight in hits:
        by_incidence.setdefault(tight, normal)

    incidences = list(by_incidence)
    vertex_indices = []
    for i in range(len(pts)):
        containing = [f for f in incidences if i in f]
        if containing and reduce(frozenset.intersection, containing) == {i}:
            vertex_indices.append(i)
    vertex_set = frozenset(vertex_indices)

    facets = []
    for tight, local_normal in by_incidence.items():
        normal = chart.ambient_normal(local_normal)
        anchor = pts[min(tight)]
        facets.append(Facet(normal=normal, offset=dot(normal, anchor),
                            incidence=tight, vertices=tight & vertex_set))
    facets.sort(key=lambda f: (f.normal, f.offset))

    lattice = _face_lattice([f.vertices for f in facets], vertex_set, pts)
    result = HullResult(points=tuple(pts), dim=d, vertex_indices=tuple(vertex_indices),
                        facets=tuple(facets), lattice=lattice)
    logger.debug(f"Hull done: {len(vertex_indices)} vertices, {len(facets)} facets, f-vector {result.f_vector()}")
    return result
