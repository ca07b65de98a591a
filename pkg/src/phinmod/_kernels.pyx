# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: integer matrix elimination and mod-p point counts.

Mirrors ``_kernels_py`` exactly.  Point counting runs on C integers (safe for
p up to ~2**21, far beyond the configured bound); the matrix kernels keep
Python integers for the entries, since minors and characteristic-polynomial
coefficients overflow machine words, but move all loop control into C.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "cython"


def count_points(p: int, a4: int, a6: int) -> int:
    """Number of points of y^2 = x^3 + a4*x + a6 over F_p, infinity included."""
    cdef long long cp = p
    cdef long long c4 = a4 % cp
    cdef long long c6 = a6 % cp
    cdef long long x, y, v, n
    cdef char *squares = <char *> PyMem_Malloc(cp)
    if squares == NULL:
        raise MemoryError()
    try:
        for x in range(cp):
            squares[x] = 0
        for y in range(cp):
            squares[y * y % cp] = 1
        n = 1
        for x in range(cp):
            v = (x * x % cp * x + c4 * x + c6) % cp
            if v == 0:
                n += 1
            elif squares[v]:
                n += 2
    finally:
        PyMem_Free(squares)
    return n


def hasse_scan(p: int) -> tuple:
    """Scan every nonsingular (a4, a6) over F_p; return (#curves, max a^2 - 4p)."""
    cdef long long cp = p
    cdef long long a4, a6, x, y, v, n, a, excess, a4cubed
    cdef long long ncurves = 0
    cdef long long worst = -(4 * cp)
    cdef char *squares = <char *> PyMem_Malloc(cp)
    cdef long long *cubes = <long long *> PyMem_Malloc(cp * sizeof(long long))
    if squares == NULL or cubes == NULL:
        PyMem_Free(squares)
        PyMem_Free(cubes)
        raise MemoryError()
    try:
        for x in range(cp):
            squares[x] = 0
        for y in range(cp):
            squares[y * y % cp] = 1
        for x in range(cp):
            cubes[x] = x * x % cp * x % cp
        for a4 in range(cp):
            a4cubed = 4 * a4 * a4 % cp * a4 % cp
            for a6 in range(cp):
                if (a4cubed + 27 * a6 * a6) % cp == 0:
                    continue
                ncurves += 1
                n = 1
                for x in range(cp):
                    v = (cubes[x] + a4 * x + a6) % cp
                    if v == 0:
                        n += 1
                    elif squares[v]:
                        n += 2
                a = cp + 1 - n
                excess = a * a - 4 * cp
                if excess > worst:
                    worst = excess
    finally:
        PyMem_Free(squares)
        PyMem_Free(cubes)
    return int(ncurves), int(worst)


def det_int(rows) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t k, i, j, piv
    cdef int sign = 1
    cdef object prev = 1
    cdef object pivot, aik
    cdef list row_k, row_i
    for k in range(n - 1):
        piv = k
        while piv < n and (<list> a[piv])[k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        row_k = <list> a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list> a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list> a[n - 1])[n - 1]


def rank_int(rows) -> int:
    """Rank of an integer matrix over Q, by fraction-free elimination."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t col, i, j, piv
    cdef Py_ssize_t row = 0
    cdef object prev = 1
    cdef object pivot, aic
    cdef list row_p, row_i
    for col in range(ncols):
        if row == nrows:
            break
        piv = row
        while piv < nrows and (<list> a[piv])[col] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        row_p = <list> a[row]
        pivot = row_p[col]
        for i in range(row + 1, nrows):
            row_i = <list> a[i]
            aic = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - aic * row_p[j]) // prev
            row_i[col] = 0
        prev = pivot
        row += 1
    return row


def charpoly_int(rows) -> list:
    """Characteristic polynomial det(T*I - m), ascending coefficients.

    Berkowitz's division-free algorithm over trailing principal submatrices.
    """
    cdef Py_ssize_t n = len(rows)
    cdef list mat = [list(r) for r in rows]
    cdef list poly = [1]
    cdef list v, w, neww, new, r, row_i
    cdef Py_ssize_t k, i0, m, i, j, step, jlo, jhi
    cdef object s, corner
    for k in range(1, n + 1):
        i0 = n - k
        m = k - 1
        corner = (<list> mat[i0])[i0]
        v = [1, -corner]
        if m:
            r = (<list> mat[i0])[i0 + 1:]
            w = [(<list> mat[i])[i0] for i in range(i0 + 1, n)]
            for step in range(m):
                s = 0
                for j in range(m):
                    s += r[j] * w[j]
                v.append(-s)
                if step < m - 1:
                    neww = []
                    for i in range(m):
                        row_i = <list> mat[i0 + 1 + i]
                        s = 0
                        for j in range(m):
                            s += row_i[i0 + 1 + j] * w[j]
                        neww.append(s)
                    w = neww
        new = [0] * (k + 1)
        for i in range(k + 1):
            s = 0
            jlo = i - k
            if jlo < 0:
                jlo = 0
            jhi = i if i < k - 1 else k - 1
            for j in range(jlo, jhi + 1):
                s += v[i - j] * poly[j]
            new[i] = s
        poly = new
    poly.reverse()
    return poly
