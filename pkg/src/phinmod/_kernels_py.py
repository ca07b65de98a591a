"""Pure-Python kernels: integer matrix elimination and mod-p point counts.

Reference implementations of the hot loops.  The compiled twin in
``_kernels.pyx`` exposes the same five functions with identical semantics;
``phinmod._backend`` picks whichever is available at import time.

All matrix kernels take row-major ``list[list[int]]`` and use exact integer
arithmetic throughout (Bareiss fraction-free elimination, Berkowitz
division-free characteristic polynomial), so intermediate values never leave
the integers.
"""

BACKEND = "python"


def count_points(p: int, a4: int, a6: int) -> int:
    """Number of points of y^2 = x^3 + a4*x + a6 over F_p, infinity included.

    Brute force over x with a precomputed square table.  Caller is
    responsible for p being an odd prime and the curve nonsingular.
    """
    squares = bytearray(p)
    for y in range(p):
        squares[y * y % p] = 1
    n = 1
    for x in range(p):
        v = (x * x % p * x + a4 * x + a6) % p
        if v == 0:
            n += 1
        elif squares[v]:
            n += 2
    return n


def hasse_scan(p: int) -> tuple[int, int]:
    """Scan every nonsingular (a4, a6) over F_p; return (#curves, max a^2 - 4p).

    The trace a = p + 1 - #points is computed for each curve by the same
    brute-force enumeration as :func:`count_points`; the second component is
    nonpositive exactly when every curve satisfies the a^2 <= 4p bound.
    """
    squares = bytearray(p)
    for y in range(p):
        squares[y * y % p] = 1
    cubes = [x * x % p * x % p for x in range(p)]
    ncurves = 0
    worst = -(4 * p)
    for a4 in range(p):
        a4cubed = 4 * a4 * a4 % p * a4 % p
        for a6 in range(p):
            if (a4cubed + 27 * a6 * a6) % p == 0:
                continue
            ncurves += 1
            n = 1
            for x in range(p):
                v = (cubes[x] + a4 * x + a6) % p
                if v == 0:
                    n += 1
                elif squares[v]:
                    n += 2
            a = p + 1 - n
            excess = a * a - 4 * p
            if excess > worst:
                worst = excess
    return ncurves, worst


def det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, so the interior
    divisions are exact and entry growth stays polynomial.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = k
        while piv < n and a[piv][k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over Q, by fraction-free elimination."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = [list(r) for r in rows]
    prev = 1
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = row
        while piv < nrows and a[piv][col] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        pivot = a[row][col]
        row_p = a[row]
        for i in range(row + 1, nrows):
            row_i = a[i]
            aic = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - aic * row_p[j]) // prev
            row_i[col] = 0
        prev = pivot
        row += 1
    return row


def charpoly_int(rows: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(T*I - m) of an integer matrix.

    Berkowitz's division-free algorithm, iterating over trailing principal
    submatrices.  Returns coefficients in ascending degree order with leading
    coefficient 1 (a list of length n + 1).
    """
    n = len(rows)
    poly = [1]
    for k in range(1, n + 1):
        i0 = n - k
        m = k - 1
        corner = rows[i0][i0]
        # Transfer vector [1, -corner, -R C, -R B C, ..., -R B^(m-1) C]
        # for the block split (corner, R; C, B) of the trailing k x k part.
        v = [1, -corner]
        if m:
            r = rows[i0][i0 + 1:]
            w = [rows[i][i0] for i in range(i0 + 1, n)]
            for step in range(m):
                s = 0
                for j in range(m):
                    s += r[j] * w[j]
                v.append(-s)
                if step < m - 1:
                    w = [
                        sum(rows[i0 + 1 + i][i0 + 1 + j] * w[j] for j in range(m))
                        for i in range(m)
                    ]
        new = [0] * (k + 1)
        for i in range(k + 1):
            s = 0
            for j in range(max(0, i - k), min(i, k - 1) + 1):
                s += v[i - j] * poly[j]
            new[i] = s
        poly = new
    poly.reverse()
    return poly
