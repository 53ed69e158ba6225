"""
defcone: wall-crossing systems and deformation-cone dimensions.

A deforming vector h has one coordinate per ray of a simplicial fan: x_i at
label i and y_i at label -i. Each pair of adjacent cones contributes the
row α of its wall dependence; the row is an equality when both cones lie in
the same cone of the coarse normal fan and an inequality otherwise.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.exactla import HPoint, dot, dual_basis, nullspace, primitive_integer_vector, rank, simplex_vertices, to_vector
from core.exceptions import InconsistentDeformationConeError, PreconditionError, ValidationError
from core.fan import CoarseningMap, SimplicialFan, bier_fan, coarsen_to_diplo, ridge_pairs, wall_dependence
from core.named_polytopes import hypersimplex
from core.parallel import ordered_map
from core.scomplex import skeleton

EQUALITY = "equality"
INEQUALITY = "inequality"
INDECOMPOSABLE = "Indecomposable"
DECOMPOSABLE = "Decomposable"


@dataclass(frozen=True)
class WallRow:
    coeffs: Tuple[int, ...]
    kind: str
    # (cone index, cone index, sorted ridge labels) of the first ridge producing the row
    provenance: Tuple[int, int, Tuple[int, ...]]

    def evaluate(self, h: Sequence) -> Fraction:
        return dot(self.coeffs, h)

    def to_dict(self, variables: Sequence[str]) -> Dict:
        terms = {name: c for name, c in zip(variables, self.coeffs) if c}
        return {"coeffs": list(self.coeffs), "terms": terms,
                "cones": list(self.provenance[:2]), "ridge": list(self.provenance[2])}


@dataclass(frozen=True)
class WallSystem:
    labels: Tuple[int, ...]
    equalities: Tuple[WallRow, ...]
    inequalities: Tuple[WallRow, ...]

    @property
    def nvars(self) -> int:
        return len(self.labels)

    def variable_names(self) -> List[str]:
        return [f"x{v}" if v > 0 else f"y{-v}" for v in self.labels]

    def equality_matrix(self) -> List[Tuple[int, ...]]:
        return [row.coeffs for row in self.equalities]

    def equality_rank(self) -> int:
        return rank(self.equality_matrix()) if self.equalities else 0

    def to_dict(self) -> Dict:
        names = self.variable_names()
        return {"variables": names,
                "equalities": [r.to_dict(names) for r in self.equalities],
                "inequalities": [r.to_dict(names) for r in self.inequalities]}


def _label_key(v: int):
    return (v < 0, abs(v))


def _dependence_task(args):
    R, R_prime, rays = args
    return wall_dependence(R, R_prime, rays)


def assemble_wall_system(fan: SimplicialFan, coarsening: Optional[CoarseningMap] = None,
                         threads: int = 1) -> WallSystem:
    """
    One row per ridge; rows are primitive integer vectors, equalities with a
    positive leading coefficient. Duplicate rows keep the first provenance.
    """
    labels = tuple(fan.labels())
    position = {v: i for i, v in enumerate(labels)}
    rays = fan.ray_table()
    pairs = ridge_pairs(fan)
    tasks = [(fan.maxcones[i], fan.maxcones[j], rays) for i, j, _ in pairs]
    dependences = ordered_map(_dependence_task, tasks, threads)

    rows: Dict[str, Dict[Tuple[int, ...], WallRow]] = {EQUALITY: {}, INEQUALITY: {}}
    for (i, j, ridge), alpha in zip(pairs, dependences):
        dense = [Fraction(0)] * len(labels)
        for v, c in alpha.items():
            dense[position[v]] = c
        coeffs = primitive_integer_vector(dense)
        kind = EQUALITY if coarsening is not None and coarsening.same_facet(i, j) else INEQUALITY
        if kind == EQUALITY and next(c for c in coeffs if c) < 0:
            coeffs = tuple(-c for c in coeffs)
        provenance = (i, j, tuple(sorted(ridge, key=_label_key)))
        rows[kind].setdefault(coeffs, WallRow(coeffs=coeffs, kind=kind, provenance=provenance))

    system = WallSystem(labels=labels, equalities=tuple(rows[EQUALITY].values()),
                        inequalities=tuple(rows[INEQUALITY].values()))
    logger.info(f"Wall system: {len(pairs)} ridges, {len(system.equalities)} equalities, "
                f"{len(system.inequalities)} inequalities")
    return system


@dataclass(frozen=True)
class DefConeReport:
    lin_dim: int
    lineality: int
    essential_dim: int
    verdict: str
    witness: Tuple[Tuple[int, ...], ...]
    justification: str
    equalities: int
    inequalities: int
    system: Optional[WallSystem] = field(default=None, compare=False, repr=False)

    def to_dict(self, include_rows: bool = False) -> Dict:
        out = {"lin_dim": self.lin_dim, "lineality": self.lineality,
               "essential_dim": self.essential_dim, "verdict": self.verdict,
               "equalities": self.equalities, "inequalities": self.inequalities,
               "justification": self.justification,
               "witness": [list(v) for v in self.witness]}
        if include_rows and self.system is not None:
            out["system"] = self.system.to_dict()
        return out


def is_deformation(h: Sequence, system: WallSystem) -> Tuple[bool, List[WallRow]]:
    """Whether h satisfies every equality and inequality row, with the violated rows."""
    h = to_vector(h)
    if len(h) != system.nvars:
        raise ValidationError(f"Deforming vector has {len(h)} entries, system has {system.nvars} variables", h)
    violated = [row for row in system.equalities if row.evaluate(h) != 0]
    violated += [row for row in system.inequalities if row.evaluate(h) < 0]
    return not violated, violated


def strictly_interior(h: Sequence, system: WallSystem) -> bool:
    """Equalities hold and every inequality is strict."""
    h = to_vector(h)
    return (all(row.evaluate(h) == 0 for row in system.equalities)
            and all(row.evaluate(h) > 0 for row in system.inequalities))


def deformation_dims(system: WallSystem, lineality: int, support: Optional[Sequence] = None) -> DefConeReport:
    """
    D = dimension of the equality nullspace, essential dimension D - lineality.
    When the support vector satisfies the equalities and every inequality
    strictly it is relatively interior, so the cone spans the whole equality
    nullspace and the essential dimension is exact.
    """
    witness = tuple(nullspace(system.equality_matrix(), ncols=system.nvars))
    D = len(witness)
    essential = D - lineality
    if essential < 1:
        raise InconsistentDeformationConeError(
            f"Essential dimension {essential} < 1 (D={D}, lineality={lineality})", essential_dim=essential)

    if support is None:
        justification = "no support vector supplied; essential_dim is an upper bound"
    elif strictly_interior(support, system):
        justification = "support vector strictly interior"
    else:
        _, violated = is_deformation(support, system)
        justification = (f"support vector not strictly interior ({len(violated)} rows violated); "
                         f"essential_dim is an upper bound")
        logger.warning(justification)

    verdict = INDECOMPOSABLE if essential == 1 else DECOMPOSABLE
    logger.success(f"Deformation cone: D={D}, lineality={lineality}, essential={essential}, {verdict}")
    return DefConeReport(lin_dim=D, lineality=lineality, essential_dim=essential, verdict=verdict,
                         witness=witness, justification=justification,
                         equalities=len(system.equalities), inequalities=len(system.inequalities),
                         system=system)


def support_vector(points: Sequence[Sequence], fan: SimplicialFan) -> Tuple[Fraction, ...]:
    """h_s = max over the points of <s, p>, one entry per ray in label order."""
    rays = fan.ray_table()
    pts = [to_vector(p) for p in points]
    return tuple(max(dot(rays[v], p) for p in pts) for v in fan.labels())


# ---------------------------------------------------------------------------
# Translations of H0 polytopes

def _split_h(h: Sequence) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    h = to_vector(h)
    if len(h) % 2 or len(h) < 4:
        raise ValidationError(f"Deforming vector must have 2n entries with n >= 2, got {len(h)}", h)
    n = len(h) // 2
    return h[:n], h[n:]


def translation_vector(h: Sequence) -> HPoint:
    """
    The v ∈ H0 with <δ_i, v> = (y_i - x_i)/2 for every i, built from the dual
    basis of δ_1..δ_{n-1}.
    """
    xs, ys = _split_h(h)
    if sum(xs) != sum(ys):
        raise PreconditionError(f"x_[n] = {sum(xs)} differs from y_[n] = {sum(ys)}")
    n = len(xs)
    duals = dual_basis(simplex_vertices(n)[:-1])
    lambdas = [(y - x) / 2 for x, y in zip(xs, ys)]
    v = [Fraction(0)] * n
    for lam, dv in zip(lambdas, duals):
        v = [a + lam * b for a, b in zip(v, dv)]
    return HPoint(v)


def normalize_translation(h: Sequence, system: Optional[WallSystem] = None) -> Tuple[Fraction, ...]:
    """The support vector of the translate P_h + v with x'_i = y'_i for all i."""
    if system is not None:
        _, violated = is_deformation(h, system)
        broken = [row for row in violated if row.kind == EQUALITY]
        if broken:
            raise PreconditionError(f"{len(broken)} equality rows are violated")
    xs, ys = _split_h(h)
    v = translation_vector(h)
    shifts = [dot(d, v) for d in simplex_vertices(len(xs))]
    return tuple(x + s for x, s in zip(xs, shifts)) + tuple(y - s for y, s in zip(ys, shifts))


# ---------------------------------------------------------------------------
# Median hypersimplex

@dataclass(frozen=True)
class DeformationSetup:
    n: int
    fan: SimplicialFan
    coarsening: CoarseningMap
    system: WallSystem
    support: Tuple[Fraction, ...]

    @property
    def lineality(self) -> int:
        return self.n - 1


def hypersimplex_system(n: int, k: int, threads: int = 1) -> DeformationSetup:
    """Wall system of Δ_{2k,k} refined by the Bier fan of skeleton(2k, k-1)."""
    if n != 2 * k or k < 1:
        raise ValidationError(f"Median hypersimplex needs n = 2k, got n={n}, k={k}", (n, k))
    if k == 1:
        raise ValidationError("Δ_{2,1} is a segment; its refinement by a Bier fan is trivial", (n, k))
    fan = bier_fan(skeleton(n, k - 1))
    coarsening = coarsen_to_diplo(fan)
    system = assemble_wall_system(fan, coarsening, threads=threads)
    support = support_vector(hypersimplex(n, k).recentered().points, fan)
    return DeformationSetup(n=n, fan=fan, coarsening=coarsening, system=system, support=support)


def relation_row(labels: Sequence[int], S: Sequence[int], T: Sequence[int]) -> Tuple[int, ...]:
    """Row of x_S - y_T over the given variable labels."""
    s, t = set(S), set(T)
    return tuple(1 if v > 0 and v in s else -1 if v < 0 and -v in t else 0 for v in labels)


def implied_by_equalities(system: WallSystem, row: Sequence[int]) -> bool:
    """Whether `row` lies in the span of the equality rows."""
    base = system.equality_matrix()
    return rank(base + [tuple(row)]) == rank(base) if base else all(c == 0 for c in row)


def balanced_relations(n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All ordered balanced partitions (S, T) of [n], n even."""
    ground = range(1, n + 1)
    return [(S, tuple(v for v in ground if v not in S)) for S in combinations(ground, n // 2)]
