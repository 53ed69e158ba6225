"""
ExactSimplex: two-phase tableau simplex over Fractions.

Maximizes c.x subject to rows (coeffs, sense, rhs) with sense in
{"<=", ">=", "=="} and x >= 0. Pivoting follows Bland's rule (smallest
entering index with positive reduced cost, ratio ties broken by the
smallest basic variable index), so the method terminates.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from core.exceptions import LPError, ValidationError

Constraint = Tuple[Sequence, str, object]

_FLIP = {"<=": ">=", ">=": "<=", "==": "=="}


@dataclass(frozen=True)
class LPResult:
    status: str                        # "optimal" | "infeasible" | "unbounded"
    objective: Optional[Fraction] = None
    x: Tuple[Fraction, ...] = ()
    # one dual value per input constraint, in the input orientation
    duals: Tuple[Fraction, ...] = ()
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class _Tableau:
    rows: List[List[Fraction]]
    basis: List[int]
    ncols: int
    artificial: set = field(default_factory=set)
    pivots: int = 0

    def pivot(self, r: int, c: int) -> None:
        piv = self.rows[r][c]
        self.rows[r] = [v / piv for v in self.rows[r]]
        pivot_row = self.rows[r]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, pivot_row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        reduced = list(cost)
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb:
                for j in range(self.ncols):
                    if row[j]:
                        reduced[j] -= cb * row[j]
        return reduced

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), Fraction(0))


class ExactSimplex:
    """
    Exact rational LP solver.

    Example:
        ExactSimplex([1, 1], [([1, 2], "<=", 4), ([3, 1], "<=", 6)]).solve()
    """

    def __init__(self, c: Sequence, constraints: Sequence[Constraint]):
        self.c = [Fraction(v) for v in c]
        self.nvars = len(self.c)
        self.constraints = []
        for coeffs, sense, rhs in constraints:
            if sense not in _FLIP:
                raise ValidationError(f"Unknown constraint sense {sense!r}", sense)
            if len(coeffs) != self.nvars:
                raise ValidationError(f"Constraint has {len(coeffs)} coefficients, expected {self.nvars}", coeffs)
            self.constraints.append(([Fraction(v) for v in coeffs], sense, Fraction(rhs)))

    def _build(self) -> Tuple[_Tableau, List[int], List[Optional[int]], List[Optional[int]]]:
        """
        Normalize every row to a nonnegative right-hand side and add slack,
        surplus and artificial columns. Returns the tableau, the row signs,
        and per row the slack/surplus column and the artificial column.
        """
        m = len(self.constraints)
        extra = 0
        layout = []
        for coeffs, sense, rhs in self.constraints:
            sign = 1
            if rhs < 0:
                sign, sense = -1, _FLIP[sense]
            slack_col = art_col = None
            if sense in ("<=", ">="):
                slack_col = self.nvars + extra
                extra += 1
            if sense in (">=", "=="):
                art_col = self.nvars + extra
                extra += 1
            layout.append((sign, sense, slack_col, art_col))

        ncols = self.nvars + extra
        rows, basis, artificial = [], [], set()
        for (coeffs, _, rhs), (sign, sense, slack_col, art_col) in zip(self.constraints, layout):
            row = [sign * v for v in coeffs] + [Fraction(0)] * extra + [sign * rhs]
            if slack_col is not None:
                row[slack_col] = Fraction(1 if sense == "<=" else -1)
            if art_col is not None:
                row[art_col] = Fraction(1)
                artificial.add(art_col)
            rows.append(row)
            basis.append(slack_col if sense == "<=" else art_col)
        tableau = _Tableau(rows=rows, basis=basis, ncols=ncols, artificial=artificial)
        signs = [lay[0] for lay in layout]
        slacks = [lay[2] for lay in layout]
        arts = [lay[3] for lay in layout]
        logger.debug(f"LP tableau: {m} rows, {ncols} columns, {len(artificial)} artificial")
        return tableau, signs, slacks, arts

    @staticmethod
    def _iterate(t: _Tableau, cost: Sequence[Fraction], allowed: Sequence[int]) -> str:
        while True:
            reduced = t.reduced_costs(cost)
            entering = next((j for j in allowed if reduced[j] > 0), None)
            if entering is None:
                return "optimal"
            candidates = [(row[-1] / row[entering], t.basis[i], i)
                          for i, row in enumerate(t.rows) if row[entering] > 0]
            if not candidates:
                return "unbounded"
            leaving = min(candidates)[2]
            t.pivot(leaving, entering)

    def solve(self) -> LPResult:
        t, signs, slacks, arts = self._build()
        all_cols = list(range(t.ncols))

        if t.artificial:
            phase1 = [Fraction(-1) if j in t.artificial else Fraction(0) for j in all_cols]
            self._iterate(t, phase1, all_cols)
            if t.objective(phase1) < 0:
                logger.debug("LP phase 1 ended with positive infeasibility")
                return LPResult(status="infeasible", pivots=t.pivots)
            self._drive_out_artificials(t)

        cost = self.c + [Fraction(0)] * (t.ncols - self.nvars)
        allowed = [j for j in all_cols if j not in t.artificial]
        status = self._iterate(t, cost, allowed)
        if status == "unbounded":
            return LPResult(status="unbounded", pivots=t.pivots)

        x = [Fraction(0)] * t.ncols
        for b, row in zip(t.basis, t.rows):
            x[b] = row[-1]
        reduced = t.reduced_costs(cost)
        duals = []
        for i, sign in enumerate(signs):
            sense = self._normalized_sense(i)
            if sense == "<=":
                y = -reduced[slacks[i]]
            elif sense == ">=":
                y = reduced[slacks[i]]
            else:
                y = -reduced[arts[i]]
            duals.append(sign * y)
        objective = sum((ci * xi for ci, xi in zip(self.c, x)), Fraction(0))
        return LPResult(status="optimal", objective=objective, x=tuple(x[:self.nvars]),
                        duals=tuple(duals), pivots=t.pivots)

    def _normalized_sense(self, i: int) -> str:
        _, sense, rhs = self.constraints[i]
        return _FLIP[sense] if rhs < 0 else sense

    @staticmethod
    def _drive_out_artificials(t: _Tableau) -> None:
        """
        Pivot zero-valued artificials out of the basis; a row with no other
        nonzero entry is redundant and its artificial column stays basic
        (it is excluded from entering, so it remains at zero).
        """
        for i in range(len(t.rows)):
            if t.basis[i] not in t.artificial:
                continue
            col = next((j for j in range(t.ncols)
                        if j not in t.artificial and t.rows[i][j] != 0), None)
            if col is None:
                logger.debug(f"LP row {i} is redundant")
                continue
            t.pivot(i, col)


def maximize(c: Sequence, constraints: Sequence[Constraint]) -> LPResult:
    result = ExactSimplex(c, constraints).solve()
    if result.status == "infeasible":
        raise LPError("LP is infeasible", status=result.status)
    return result
