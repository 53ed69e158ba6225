"""
scomplex: abstract simplicial complexes on [n], Alexander duality and Bier spheres.

Complexes are stored by their maximal faces; a set is a face iff it is
contained in some facet. Vertex labels are 1-based. In a Bier sphere the
unbarred label i is written i and the barred label ī is written -i.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from core.exceptions import DegenerateComplexError, PseudomanifoldError, ValidationError
from core.isomorphism import find_facet_isomorphism

Face = Tuple[int, ...]

# The minimal 6-vertex triangulation of the real projective plane.
HEMI_ICOSAHEDRON_TRIANGLES: Tuple[Face, ...] = (
    (1, 2, 3), (1, 2, 6), (1, 3, 5), (1, 4, 5), (1, 4, 6),
    (2, 3, 4), (2, 4, 5), (2, 5, 6), (3, 4, 6), (3, 5, 6),
)


def _face_key(face: Sequence[int]):
    return (len(face), tuple(face))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the ground set {1..n}, given by its facets."""

    n: int
    facets: Tuple[Face, ...]

    def contains(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    def faces(self) -> List[Face]:
        """All faces, the empty face included, sorted by size then lexicographically."""
        found = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                found.update(combinations(f, r))
        return sorted(found, key=_face_key)

    def vertices(self) -> List[int]:
        return sorted({v for f in self.facets for v in f})

    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_void_like(self) -> bool:
        return self.facets == ((),)

    def is_full_simplex(self) -> bool:
        return self.facets == (tuple(range(1, self.n + 1)),)

    def to_dict(self) -> Dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"K(n={self.n}; {body})"


def make_complex(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """
    The complex generated by `faces` on [n], represented by its maximal faces.
    Dominated input faces are dropped; no faces at all gives {∅}.
    """
    if n < 1:
        raise ValidationError(f"Ground set size must be positive, got {n}", n)
    normalized = set()
    for face in faces:
        f = tuple(sorted(set(face)))
        for v in f:
            if not isinstance(v, int) or v < 1 or v > n:
                raise ValidationError(f"Face element {v!r} out of range 1..{n}", face)
        normalized.add(f)
    if not normalized:
        normalized.add(())
    maximal = [f for f in normalized
               if not any(len(g) > len(f) and set(f) <= set(g) for g in normalized)]
    return SimplicialComplex(n=n, facets=tuple(sorted(maximal, key=_face_key)))


def skeleton(n: int, r: int) -> SimplicialComplex:
    """All subsets of [n] with at most r elements (facets: the r-subsets)."""
    if n < 1 or r < 0 or r >= n:
        raise ValidationError(f"skeleton needs 0 <= r < n, got n={n}, r={r}", (n, r))
    return SimplicialComplex(n=n, facets=tuple(combinations(range(1, n + 1), r)))


def hemi_icosahedron() -> SimplicialComplex:
    return make_complex(6, HEMI_ICOSAHEDRON_TRIANGLES)


def minimal_non_faces(K: SimplicialComplex) -> List[Face]:
    """
    Minimal non-faces of K, found breadth-first from the empty face upwards:
    a candidate one element larger than a face is a minimal non-face when it
    is not a face but all of its codimension-one subsets are.
    """
    ground = range(1, K.n + 1)
    result: List[Face] = []
    level = {()}
    while level:
        candidates = {tuple(sorted(face + (v,))) for face in level for v in ground if v not in face}
        next_level = set()
        for cand in sorted(candidates):
            if K.contains(cand):
                next_level.add(cand)
            elif all(tuple(x for x in cand if x != v) in level for v in cand):
                result.append(cand)
        level = next_level
    return sorted(result, key=_face_key)


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """K° = {A ⊆ [n] : A^c ∉ K}; its facets are the complements of the minimal non-faces of K."""
    if K.is_full_simplex():
        raise DegenerateComplexError("The full simplex has a void Alexander dual", str(K))
    ground = set(range(1, K.n + 1))
    facets = [tuple(sorted(ground - set(b))) for b in minimal_non_faces(K)]
    return make_complex(K.n, facets)


def is_maximal_volume(K: SimplicialComplex) -> bool:
    """
    Whether Bier(K) has maximal volume: for n = 2k+1 the complex must be all
    subsets of size <= k; for n = 2k every (k-1)-subset is a face and no face
    has more than k elements.
    """
    n = K.n
    k = n // 2
    if n % 2 == 1:
        return K == skeleton(n, k)
    if k < 1 or max(len(f) for f in K.facets) > k:
        return False
    return all(K.contains(c) for c in combinations(range(1, n + 1), k - 1))


# ---------------------------------------------------------------------------
# Bier spheres

BierFacet = Tuple[Face, Face]


def signed_labels(facet: BierFacet) -> Tuple[int, ...]:
    """Unbarred labels ascending, then barred labels as negatives by absolute value."""
    a, b = facet
    return tuple(sorted(a)) + tuple(-v for v in sorted(b))


def label_name(label: int) -> str:
    return f"{label}" if label > 0 else f"{-label}̄"


@dataclass(frozen=True)
class BierSphere:
    """Bier(K) = K *_Δ K°: facets (A, B), A ∈ K, B ∈ K°, disjoint, |A| + |B| = n - 1."""

    n: int
    facets: Tuple[BierFacet, ...]

    def signed_facets(self) -> List[Tuple[int, ...]]:
        return [signed_labels(f) for f in self.facets]

    def vertices(self) -> List[int]:
        labels = {v for f in self.signed_facets() for v in f}
        return sorted(labels, key=lambda v: (v < 0, abs(v)))

    def faces_of_dimension(self, dim: int) -> List[FrozenSet[int]]:
        found = set()
        for f in self.signed_facets():
            found.update(frozenset(c) for c in combinations(f, dim + 1))
        return sorted(found, key=lambda s: sorted(s, key=lambda v: (v < 0, abs(v))))

    def edges(self) -> List[FrozenSet[int]]:
        return self.faces_of_dimension(1)

    def f_vector(self) -> List[int]:
        return [len(self.faces_of_dimension(d)) for d in range(self.n - 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def ridges(self) -> Dict[FrozenSet[int], List[int]]:
        containing: Dict[FrozenSet[int], List[int]] = defaultdict(list)
        for idx, f in enumerate(self.signed_facets()):
            for v in f:
                containing[frozenset(f) - {v}].append(idx)
        return dict(containing)

    def is_pseudomanifold(self) -> bool:
        return all(len(c) == 2 for c in self.ridges().values())

    def check_sphere(self) -> None:
        """Raise unless every ridge lies in two facets and χ matches the (n-2)-sphere."""
        for ridge, cont in self.ridges().items():
            if len(cont) != 2:
                raise PseudomanifoldError(f"Ridge {sorted(ridge)} lies in {len(cont)} facets", sorted(ridge))
        expected = 1 + (-1) ** (self.n - 2)
        chi = self.euler_characteristic()
        if chi != expected:
            raise PseudomanifoldError(f"Euler characteristic {chi}, expected {expected} for S^{self.n - 2}")

    def swap_bars(self) -> "BierSphere":
        """The bar-swap relabeling i <-> ī, an isomorphism Bier(K) -> Bier(K°)."""
        return BierSphere(n=self.n, facets=tuple(sorted(((b, a) for a, b in self.facets), key=_bier_key)))

    def to_dict(self) -> Dict:
        return {"n": self.n, "facets": [list(f) for f in self.signed_facets()]}


def _bier_key(facet: BierFacet):
    return (facet[0], facet[1])


def bier_sphere(K: SimplicialComplex) -> BierSphere:
    """
    Facets are the pairs (A, [n] - A - {m}) with A ∈ K and A ∪ {m} ∉ K,
    which is the deleted-join condition restated through B^c = A ∪ {m}.
    """
    if K.is_full_simplex():
        raise DegenerateComplexError("Bier(K) needs K != 2^[n]", str(K))
    ground = set(range(1, K.n + 1))
    facets = []
    for a in K.faces():
        for m in sorted(ground - set(a)):
            grown = tuple(sorted(a + (m,)))
            if not K.contains(grown):
                facets.append((a, tuple(sorted(ground - set(grown)))))
    sphere = BierSphere(n=K.n, facets=tuple(sorted(facets, key=_bier_key)))
    logger.debug(f"Bier sphere of {K}: {len(sphere.facets)} facets")
    return sphere


def complexes_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> Optional[Dict[int, int]]:
    """A permutation of [n] carrying the facets of K1 onto those of K2, or None."""
    if K1.n != K2.n:
        return None
    ground = range(1, K1.n + 1)
    mapping = find_facet_isomorphism(K1.facets, K2.facets, vertices_a=ground, vertices_b=ground)
    if mapping is None:
        return None
    return {v: mapping[v] for v in ground}
