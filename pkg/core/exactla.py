"""
exactla: exact rational scalars, vectors and matrices.

Every coordinate in bierkit is a fractions.Fraction; no binary floating
point value is ever constructed. Rank and nullspace use fraction-free
(Bareiss) elimination on integer-scaled rows, pivoting on the first
nonzero entry in row-major order so results are deterministic.
"""

import math
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import DecimalParseError, RankDeficiencyError, ValidationError

Rational = Fraction
Vector = Tuple[Fraction, ...]

_DIGITS = "0123456789"
MAX_EXPONENT = 4096


class HPoint(tuple):
    """
    A point of the sum-zero hyperplane H0 of R^n.

    Behaves as a plain tuple of Fractions; construction rejects coordinates
    that do not sum to zero.
    """

    def __new__(cls, coords: Iterable):
        values = tuple(Fraction(c) for c in coords)
        if not values:
            raise ValidationError("HPoint needs at least one coordinate")
        if sum(values) != 0:
            raise ValidationError(f"HPoint coordinates must sum to zero, got {sum(values)}", values)
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)


class RatMatrix:
    """Rectangular matrix of Fractions."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows: Tuple[Vector, ...] = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not self.rows:
            raise ValidationError("RatMatrix needs at least one row")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValidationError(f"Ragged matrix: row lengths {width} and {len(row)}", row)
        self.ncols = width

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return rank(self.rows)

    def nullspace(self) -> List[Vector]:
        return nullspace(self)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.rows)))

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(v) for v in row] for row in self.rows]})"


# ---------------------------------------------------------------------------
# Decimal literals

def parse_decimal(text: str) -> Fraction:
    """
    Parse a decimal literal (optional sign, digits, optional fraction,
    optional exponent) into the exact Fraction it denotes.

    Raises DecimalParseError naming the position of the offending character.
    """
    lead = len(text) - len(text.lstrip())
    s = text.strip()
    n = len(s)
    pos = 0

    def fail(at: int, what: str):
        raise DecimalParseError(
            f"Malformed decimal {text!r}: {what} at position {at + lead}",
            text=text, position=at + lead)

    sign = 1
    if pos < n and s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    start = pos
    while pos < n and s[pos] in _DIGITS:
        pos += 1
    int_digits = s[start:pos]
    frac_digits = ""
    if pos < n and s[pos] == ".":
        pos += 1
        start = pos
        while pos < n and s[pos] in _DIGITS:
            pos += 1
        frac_digits = s[start:pos]
    if not int_digits and not frac_digits:
        fail(pos, "expected a digit")
    exponent = 0
    if pos < n and s[pos] in "eE":
        pos += 1
        exp_sign = 1
        if pos < n and s[pos] in "+-":
            exp_sign = -1 if s[pos] == "-" else 1
            pos += 1
        start = pos
        while pos < n and s[pos] in _DIGITS:
            pos += 1
        if start == pos:
            fail(pos, "expected exponent digits")
        magnitude = s[start:pos].lstrip("0")
        if len(magnitude) > len(str(MAX_EXPONENT)) or int(magnitude or "0") > MAX_EXPONENT:
            fail(start, f"exponent exceeds {MAX_EXPONENT} in magnitude")
        exponent = exp_sign * int(magnitude or "0")
    if pos != n:
        fail(pos, f"unexpected character {s[pos]!r}")

    mantissa = int(int_digits + frac_digits)
    scale = exponent - len(frac_digits)
    if scale >= 0:
        value = Fraction(mantissa * 10 ** scale)
    else:
        value = Fraction(mantissa, 10 ** (-scale))
    return sign * value


def round_decimal(text: str, digits: int) -> Fraction:
    """
    Round a decimal literal to `digits` places, half away from zero,
    computed on the exact value.
    """
    if digits < 0:
        raise ValidationError(f"Rounding digits must be non-negative, got {digits}", digits)
    value = parse_decimal(text)
    scaled = abs(value) * 10 ** digits
    rounded = math.floor(scaled + Fraction(1, 2))
    result = Fraction(rounded, 10 ** digits)
    return -result if value < 0 else result


# ---------------------------------------------------------------------------
# Vectors

def to_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def primitive_integer_vector(values: Sequence) -> Tuple[int, ...]:
    """Positive rescaling of a rational vector to integers with content 1."""
    fracs = [Fraction(v) for v in values]
    denom = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denom) for f in fracs]
    content = reduce(gcd, (abs(i) for i in ints), 0)
    if content == 0:
        return tuple(ints)
    return tuple(i // content for i in ints)


def _integer_row(row: Sequence) -> List[int]:
    fracs = [Fraction(v) for v in row]
    denom = reduce(lcm, (f.denominator for f in fracs), 1)
    return [int(f * denom) for f in fracs]


# ---------------------------------------------------------------------------
# Elimination

def echelon_form(rows: Sequence[Sequence]) -> Tuple[List[List[int]], List[int]]:
    """
    Fraction-free (Bareiss) row echelon form of the integer-scaled rows.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    Scaling a row by a positive constant changes neither the row space nor
    the nullspace, so both can be read off the result.
    """
    a = [_integer_row(row) for row in rows]
    if not a:
        return [], []
    m = len(a)
    width = len(a[0])
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(width):
        if r >= m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        pivot_row = a[r]
        for i in range(r + 1, m):
            row = a[i]
            factor = row[c]
            for j in range(c + 1, width):
                # exact by Sylvester's identity
                row[j] = (piv * row[j] - factor * pivot_row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if isinstance(rows, RatMatrix):
        rows = rows.rows
    return len(echelon_form(rows)[1])


def nullspace(matrix: Union[RatMatrix, Sequence[Sequence]], ncols: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Exact basis of {v : Mv = 0}.

    One basis vector per free column in increasing order; each vector has
    a 1 in its own free column and 0 in the other free columns before being
    rescaled to a primitive integer vector with content 1 and a positive
    leading entry.
    """
    rows = matrix.rows if isinstance(matrix, RatMatrix) else [tuple(r) for r in matrix]
    if ncols is None:
        if not rows:
            raise ValidationError("nullspace of an empty matrix needs an explicit column count")
        ncols = len(rows[0])
    echelon, pivots = echelon_form(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            row = echelon[i]
            p = pivots[i]
            s = sum((row[j] * x[j] for j in range(p + 1, ncols) if row[j]), Fraction(0))
            x[p] = -s / row[p]
        vec = primitive_integer_vector(x)
        if next(v for v in vec if v) < 0:
            vec = tuple(-v for v in vec)
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Vector:
    """Unique solution of a square system by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(aug) != n or any(len(row) != n + 1 for row in aug):
        raise ValidationError("solve expects a square system")
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise RankDeficiencyError(f"Singular system: no pivot in column {c}", rank=c)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(row[n] for row in aug)


def particular_solution(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[Vector]:
    """Some solution of Mx = b (free variables set to zero), or None if inconsistent."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [v / piv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[ncols] != 0 for row in aug[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return tuple(x)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull (-1 for no points)."""
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


# ---------------------------------------------------------------------------
# Simplex-circuit geometry

def simplex_vertices(n: int) -> List[HPoint]:
    """δ_i = e_i - (1/n)(e_1 + ... + e_n), i = 1..n."""
    if n < 2:
        raise ValidationError(f"simplex_vertices needs n >= 2, got {n}", n)
    shift = Fraction(1, n)
    return [HPoint([(1 if j == i else 0) - shift for j in range(n)]) for i in range(n)]


def dual_basis(us: Sequence[Sequence]) -> List[HPoint]:
    """
    The basis v_1..v_{n-1} of H0 with <u_i, v_j> = 1 if i == j else 0.

    Each v_j solves the square system <u_i, v> = δ_ij, <1, v> = 0.
    """
    if not us:
        raise ValidationError("dual_basis needs at least one vector")
    n = len(us[0])
    if len(us) != n - 1:
        raise ValidationError(f"dual_basis expects n-1 = {n - 1} vectors, got {len(us)}")
    system = [list(u) for u in us] + [[1] * n]
    if rank(system) < n:
        raise RankDeficiencyError("dual_basis input is linearly dependent within H0", rank=rank(system) - 1)
    duals = []
    for j in range(n - 1):
        rhs = [1 if i == j else 0 for i in range(n - 1)] + [0]
        duals.append(HPoint(solve(system, rhs)))
    return duals
