"""Exact rational linear algebra.

Scalars are arbitrary-precision: plain ``int`` where the denominator is 1,
``fractions.Fraction`` otherwise (both are kept in lowest terms with a
positive denominator, and they compare and hash interchangeably).  No
floating point enters this module.

Matrix kernels (determinant, rank, characteristic polynomial) run on the
integer level via :mod:`phinmod._backend`; rational input is cleared of
denominators first and the results are rescaled exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ._backend import charpoly_int, det_int, rank_int

Rational = Union[int, Fraction]

INFINITY = math.inf


def as_rational(x) -> Rational:
    """Coerce to an exact scalar, collapsing denominator-1 fractions to int."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def rational_str(x: Rational) -> str:
    """Serialize as ``"a"`` or ``"a/b"`` in lowest terms."""
    x = as_rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Rational:
    """Inverse of :func:`rational_str`; exact round-trip."""
    return as_rational(Fraction(s))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class QMatrix:
    """Immutable matrix of exact rationals, row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows x cols")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "QMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return QMatrix(nr, nc, tuple(as_rational(x) for r in rows for x in r))

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "QMatrix":
        return QMatrix(rows, cols, (0,) * (rows * cols))

    @staticmethod
    def scalar(n: int, c) -> "QMatrix":
        c = as_rational(c)
        return QMatrix(n, n, tuple(c if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def block_diag(blocks: Iterable["QMatrix"]) -> "QMatrix":
        blocks = list(blocks)
        nr = sum(b.rows for b in blocks)
        nc = sum(b.cols for b in blocks)
        out = [[0] * nc for _ in range(nr)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return QMatrix.from_rows(out) if nr else QMatrix(0, 0, ())

    def __getitem__(self, ij) -> Rational:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def to_int_rows(self) -> list:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return self.to_rows()

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return QMatrix(self.rows, self.cols,
                       tuple(as_rational(a + b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return QMatrix(self.rows, self.cols,
                       tuple(as_rational(a - b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "QMatrix":
        c = as_rational(c)
        return QMatrix(self.rows, self.cols, tuple(as_rational(c * a) for a in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        n, m, k = self.rows, other.cols, self.cols
        se, oe = self.entries, other.entries
        out = []
        for i in range(n):
            base = i * k
            for j in range(m):
                s = 0
                for t in range(k):
                    s += se[base + t] * oe[t * m + j]
                out.append(as_rational(s))
        return QMatrix(n, m, tuple(out))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rational_str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"QMatrix({self.rows}x{self.cols}: {body})"


def _clear_denominators(m: QMatrix) -> tuple:
    """Return (integer rows of d*m, d) for the global denominator lcm d."""
    d = 1
    for x in m.entries:
        if isinstance(x, Fraction):
            d = d * x.denominator // math.gcd(d, x.denominator)
    if d == 1:
        return m.to_rows(), 1
    rows = [[int(x * d) for x in m.row(i)] for i in range(m.rows)]
    return rows, d


def char_poly(m: QMatrix) -> list:
    """Coefficients of det(T*I - m) in ascending degree, leading term 1.

    Division-free on the integer lift: for rational input the matrix is
    scaled to d*m and the coefficients are rescaled by powers of d.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.rows
    rows, d = _clear_denominators(m)
    coeffs = charpoly_int(rows)
    if d == 1:
        return coeffs
    return [as_rational(Fraction(c, d ** (n - i))) for i, c in enumerate(coeffs)]


def det(m: QMatrix) -> Rational:
    """Exact determinant (fraction-free on the integer lift)."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    rows, d = _clear_denominators(m)
    value = det_int(rows)
    if d == 1:
        return value
    return as_rational(Fraction(value, d ** m.rows))


def rank(m: QMatrix) -> int:
    """Exact rank over Q via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    # Row-wise denominator clearing preserves rank.
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        d = 1
        for x in r:
            if isinstance(x, Fraction):
                d = d * x.denominator // math.gcd(d, x.denominator)
        rows.append([int(x * d) for x in r])
    return rank_int(rows)


def is_positive_definite(m: QMatrix) -> bool:
    """Exact Sylvester criterion: all leading principal minors positive."""
    if not m.is_square or not m.is_symmetric():
        return False
    rows = m.to_rows()
    for k in range(1, m.rows + 1):
        sub = [r[:k] for r in rows[:k]]
        minor = det(QMatrix.from_rows(sub))
        if minor <= 0:
            return False
    return True


def padic_valuation(x, p: int):
    """v_p(x) for exact x; +infinity at 0; normalized so v_p(p) = 1."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    x = as_rational(x)
    if x == 0:
        return INFINITY
    num = abs(x.numerator if isinstance(x, Fraction) else x)
    den = x.denominator if isinstance(x, Fraction) else 1
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class NewtonPolygon:
    """Slope data: nondecreasing (slope, multiplicity) pairs.

    Slopes follow the reciprocal-root convention: an eigenvalue alpha of
    valuation v contributes multiplicity 1 at slope v.
    """

    slopes: tuple

    def __post_init__(self):
        prev = None
        for s, mult in self.slopes:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if prev is not None and s <= prev:
                raise ValueError("slopes must be strictly increasing after merging")
            prev = s

    @staticmethod
    def from_slope_list(slopes: Sequence) -> "NewtonPolygon":
        """Build from an unsorted multiset of slopes, merging duplicates."""
        merged = []
        for s in sorted(as_rational(x) for x in slopes):
            if merged and merged[-1][0] == s:
                merged[-1][1] += 1
            else:
                merged.append([s, 1])
        return NewtonPolygon(tuple((s, m) for s, m in merged))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.slopes)

    def slope_multiset(self) -> list:
        return [s for s, m in self.slopes for _ in range(m)]

    def scaled(self, factor) -> "NewtonPolygon":
        """Polygon with every slope multiplied by ``factor`` (> 0)."""
        factor = as_rational(factor)
        return NewtonPolygon(tuple((as_rational(s * factor), m) for s, m in self.slopes))

    def heights(self) -> list:
        """Partial sums of the sorted slope multiset (polygon vertices)."""
        out = [0]
        for s in self.slope_multiset():
            out.append(as_rational(out[-1] + s))
        return out

    def total(self) -> Rational:
        return as_rational(sum(s * m for s, m in self.slopes))

    def dual(self) -> "NewtonPolygon":
        """Polygon with slopes s -> 1 - s; fixed points of this map are the
        polygons symmetric about slope 1/2."""
        return NewtonPolygon.from_slope_list(
            [1 - s for s, m in self.slopes for _ in range(m)]
        )

    def is_symmetric(self) -> bool:
        return self == self.dual()

    def lies_on_or_above(self, other: "NewtonPolygon") -> bool:
        """Pointwise >= comparison of polygon heights (same dimension)."""
        if self.dimension != other.dimension:
            raise ValueError("polygons have different dimensions")
        return all(a >= b for a, b in zip(self.heights(), other.heights()))


def newton_polygon(coeffs: Sequence, p: int) -> NewtonPolygon:
    """Lower convex hull slopes of (i, v_p(a_i)) for a monic polynomial.

    ``coeffs`` is ascending, leading coefficient 1.  The reported slope of a
    hull segment is its negative, so each eigenvalue alpha shows up at slope
    v_p(alpha).  Rejects the zero polynomial and a zero constant term (an
    eigenvalue 0 has no finite slope).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    coeffs = [as_rational(c) for c in coeffs]
    if not coeffs or all(c == 0 for c in coeffs):
        raise ValueError("zero polynomial")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    n = len(coeffs) - 1
    if n == 0:
        return NewtonPolygon(())
    if coeffs[0] == 0:
        raise ValueError("zero constant term: 0 is an eigenvalue")
    points = [(i, padic_valuation(c, p)) for i, c in enumerate(coeffs) if c != 0]
    # Lower convex hull by monotone chain over the finite points.
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # Drop hull[-1] if it lies on or above the segment hull[-2]..pt.
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        seg = as_rational(Fraction(y1 - y2, x2 - x1))  # negated hull slope
        slopes.extend([seg] * (x2 - x1))
    slopes.sort()
    return NewtonPolygon.from_slope_list(slopes)
