"""
fan: simplicial fans over signed labels, Bier fans, ridge adjacency,
wall dependences and the coarsening of a Bier fan onto the radial fan of
the diplo-simplex.
"""

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from loguru import logger

from core.exactla import Vector, nullspace, particular_solution, rank, to_vector
from core.exceptions import (CoarseningError, DegenerateWallError, PseudomanifoldError,
                             RankDeficiencyError, UnsupportedRealizationError, ValidationError)
from core.named_polytopes import diplo_simplex, row_label, starshaped_realization
from core.scomplex import SimplicialComplex, bier_sphere

Cone = Tuple[int, ...]


def label_key(v: int):
    return (v < 0, abs(v))


@dataclass(frozen=True)
class SimplicialFan:
    """Rays indexed by signed labels; maximal cones as sorted label tuples."""

    n: int
    rays: Tuple[Tuple[int, Vector], ...]
    maxcones: Tuple[Cone, ...]

    def __post_init__(self):
        table = dict(self.rays)
        for cone in self.maxcones:
            missing = [v for v in cone if v not in table]
            if missing:
                raise ValidationError(f"Cone {list(cone)} uses unknown ray labels {missing}", cone)

    def ray_table(self) -> Dict[int, Vector]:
        return dict(self.rays)

    def labels(self) -> List[int]:
        return sorted((label for label, _ in self.rays), key=label_key)

    @property
    def dim(self) -> int:
        """Dimension of the linear span of the rays."""
        return rank([v for _, v in self.rays])

    def check_simplicial(self) -> None:
        table = self.ray_table()
        d = self.dim
        for cone in self.maxcones:
            if len(cone) != d or rank([table[v] for v in cone]) != d:
                raise ValidationError(f"Cone {list(cone)} is not a full simplicial cone of dimension {d}", cone)

    def _interior_sample(self, cone: Cone, rng: random.Random) -> Vector:
        table = self.ray_table()
        width = len(self.rays[0][1])
        point = [Fraction(0)] * width
        for v in cone:
            c = Fraction(rng.randint(1, 97), rng.randint(1, 97))
            point = [a + c * b for a, b in zip(point, table[v])]
        return tuple(point)

    def _in_open_cone(self, point: Vector, cone: Cone) -> bool:
        table = self.ray_table()
        gens = [table[v] for v in cone]
        system = [list(row) for row in zip(*gens)]
        coeffs = particular_solution(system, point)
        return coeffs is not None and all(c > 0 for c in coeffs)

    def spot_check_disjointness(self, samples: int = 64, seed: int = 0) -> List[Tuple[int, int]]:
        """
        Sample interior points of random cone pairs and test exact membership
        in the other cone's interior. Returns the overlapping pairs found.
        """
        rng = random.Random(seed)
        overlaps = set()
        if len(self.maxcones) < 2:
            return []
        for _ in range(samples):
            i, j = rng.sample(range(len(self.maxcones)), 2)
            point = self._interior_sample(self.maxcones[i], rng)
            if self._in_open_cone(point, self.maxcones[j]):
                overlaps.add((min(i, j), max(i, j)))
        if overlaps:
            logger.warning(f"Fan cones overlap: {sorted(overlaps)}")
        return sorted(overlaps)

    def to_dict(self) -> Dict:
        return {"n": self.n,
                "rays": [{"label": label, "vector": [str(c) for c in v]} for label, v in self.rays],
                "cones": [list(c) for c in self.maxcones]}


def make_fan(n: int, rays: Dict[int, Sequence], cones: Sequence[Sequence[int]]) -> SimplicialFan:
    ray_pairs = tuple((label, to_vector(rays[label])) for label in sorted(rays, key=label_key))
    maxcones = tuple(tuple(sorted(c, key=label_key)) for c in cones)
    return SimplicialFan(n=n, rays=ray_pairs, maxcones=maxcones)


def bier_fan(K: SimplicialComplex) -> SimplicialFan:
    """Cones over the facets of Bier(K) under the canonical ±δ realization."""
    if K.is_full_simplex():
        raise UnsupportedRealizationError("The full simplex has no Bier fan")
    realization = starshaped_realization(K)
    sphere = bier_sphere(K)
    fan = SimplicialFan(n=K.n,
                        rays=tuple(sorted(realization.assignment, key=lambda kv: label_key(kv[0]))),
                        maxcones=tuple(tuple(f) for f in sphere.signed_facets()))
    logger.debug(f"Bier fan on n={K.n}: {len(fan.maxcones)} maximal cones")
    return fan


def ridge_pairs(fan: SimplicialFan) -> List[Tuple[int, int, FrozenSet[int]]]:
    """Adjacent maximal cones (i < j) with their shared ridge, ordered by (i, j)."""
    containing: Dict[FrozenSet[int], List[int]] = defaultdict(list)
    for idx, cone in enumerate(fan.maxcones):
        for v in cone:
            containing[frozenset(cone) - {v}].append(idx)
    pairs = []
    for ridge, cones in containing.items():
        if len(cones) != 2:
            raise PseudomanifoldError(f"Ridge {sorted(ridge, key=label_key)} lies in {len(cones)} cones",
                                      ridge=sorted(ridge, key=label_key))
        pairs.append((cones[0], cones[1], ridge))
    return sorted(pairs, key=lambda p: (p[0], p[1]))


def wall_dependence(R: Sequence[int], R_prime: Sequence[int], rays: Dict[int, Sequence]) -> Dict[int, Fraction]:
    """
    The linear dependence Σ α_s s = 0 supported on R ∪ R', normalized so the
    two swing coefficients satisfy α(r) + α(r') = 2.
    """
    r_set, rp_set = set(R), set(R_prime)
    swing = r_set - rp_set
    swing_prime = rp_set - r_set
    if len(swing) != 1 or len(swing_prime) != 1:
        raise ValidationError(f"Cones {sorted(R)} and {sorted(R_prime)} do not share a ridge", (R, R_prime))
    (r,), (r_prime,) = swing, swing_prime
    labels = sorted(r_set | rp_set, key=label_key)
    columns = [to_vector(rays[v]) for v in labels]
    matrix = [list(row) for row in zip(*columns)]
    kernel = nullspace(matrix, ncols=len(labels))
    if len(kernel) != 1:
        raise RankDeficiencyError(f"Wall at ridge {sorted(r_set & rp_set)} has a {len(kernel)}-dimensional "
                                  f"dependence space", rank=len(labels) - len(kernel))
    alpha = dict(zip(labels, (Fraction(c) for c in kernel[0])))
    total = alpha[r] + alpha[r_prime]
    if total == 0:
        raise DegenerateWallError(f"Swing coefficients at ridge {sorted(r_set & rp_set)} sum to zero",
                                  ridge=sorted(r_set & rp_set, key=label_key))
    factor = Fraction(2) / total
    return {v: c * factor for v, c in alpha.items()}


@dataclass(frozen=True)
class CoarseningMap:
    """Maximal cone index -> facet (S, T) of the diplo-simplex, as sorted tuples."""

    n: int
    assignment: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]

    def facet_of(self, cone_index: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.assignment[cone_index]

    def same_facet(self, i: int, j: int) -> bool:
        return self.assignment[i] == self.assignment[j]

    def to_dict(self) -> Dict:
        return {"n": self.n, "assignment": [{"S": list(s), "T": list(t)} for s, t in self.assignment]}


def _diplo_facet_labels(n: int) -> List[FrozenSet[int]]:
    hull = diplo_simplex(n).hull()
    return [frozenset(row_label(r, n) for r in f) for f in hull.facet_vertex_sets()]


def coarsen_to_diplo(fan: SimplicialFan, cross_check: bool = True) -> CoarseningMap:
    """
    Assign each Bier facet (A, B) to the facet (S, T) of Ω_{2k} containing it:
    the element m missing from A ∪ B joins whichever side has k - 1 elements.
    With cross_check, every (S, T) must be a facet of hull(Ω_{2k}) whose
    vertices include the cone's generators.
    """
    n = fan.n
    if n % 2 == 1:
        raise UnsupportedRealizationError(f"Coarsening onto the diplo-simplex needs even n, got {n}")
    k = n // 2
    ground = set(range(1, n + 1))
    assignment = []
    for cone in fan.maxcones:
        A = {v for v in cone if v > 0}
        B = {-v for v in cone if v < 0}
        rest = ground - A - B
        if len(rest) != 1:
            raise CoarseningError(f"Cone {list(cone)} does not have n-1 generators on distinct indices", cone)
        (m,) = rest
        if len(A) == k - 1:
            S, T = A | {m}, B
        elif len(B) == k - 1:
            S, T = A, B | {m}
        else:
            raise CoarseningError(f"Cone {list(cone)} has neither side of size {k - 1}", cone)
        assignment.append((tuple(sorted(S)), tuple(sorted(T))))

    if cross_check:
        facets = set(_diplo_facet_labels(n))
        for cone, (S, T) in zip(fan.maxcones, assignment):
            labels = frozenset(S) | frozenset(-t for t in T)
            if labels not in facets or not set(cone) <= labels:
                raise CoarseningError(f"Cone {list(cone)} is not inside the diplo-simplex facet {S}|{T}", cone)
        logger.debug(f"Coarsening cross-checked against {len(facets)} diplo-simplex facets")
    return CoarseningMap(n=n, assignment=tuple(assignment))
