"""Exact integer and rational linear algebra on tuples.

Everything here works on plain Python ints and ``Fraction``; matrices are
tuples of row tuples.  Nothing ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def vec_mat(v, m):
    """Row vector times matrix (how a covector pulls back along ``m``)."""
    n = len(m[0]) if m else 0
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(n))


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(m):
    return tuple(zip(*m))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def det(m):
    """Exact determinant by Gaussian elimination over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        out *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return _shrink(out)


def inverse(m):
    """Inverse over Q by Gauss-Jordan; entries come back as ints when integral."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(_shrink(x) for x in row[n:]) for row in a)


def _shrink(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def left_inverse(cols: Sequence[Sequence[int]], dim: int):
    """A rational left inverse P of the dim x k matrix whose columns are ``cols``.

    Requires the columns to be linearly independent.  ``P @ v`` gives the
    coordinates of ``v`` in that basis whenever ``v`` is in the span.
    """
    k = len(cols)
    if k == 0:
        return ()
    c = tuple(tuple(cols[j][i] for j in range(k)) for i in range(dim))
    ct = transpose(c)
    gram = mat_mul(ct, c)
    return mat_mul(inverse(gram), ct)


def coordinates(p, cols, v):
    """Coordinates of ``v`` in the basis ``cols`` (via left inverse ``p``), or None."""
    if not cols:
        return () if all(x == 0 for x in v) else None
    c = tuple(_shrink(Fraction(x)) for x in mat_vec(p, v))
    back = [0] * len(v)
    for coef, col in zip(c, cols):
        for i, x in enumerate(col):
            back[i] += coef * x
    if tuple(back) != tuple(v):
        return None
    return c


def rank(rows) -> int:
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    r = 0
    ncols = len(a[0])
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def smith_normal_form(a):
    """Return ``(U, D, V)`` with ``U a V == D``, U and V unimodular.

    ``D`` is diagonal with non-negative entries and ``d_1 | d_2 | ...``.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    u = [list(row) for row in identity(m)]
    v = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            cand = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not cand:
                break
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
            p = d[t][t]
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, m)) or any(d[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p), None)
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    U = tuple(map(tuple, u))
    D = tuple(map(tuple, d))
    V = tuple(map(tuple, v))
    if m and n:
        assert mat_mul(mat_mul(U, a), V) == D, "Smith form failed re-multiplication"
    return U, D, V


def hermite_rows(rows):
    """Row-style Hermite normal form of an integer row basis (positive pivots)."""
    a = [list(r) for r in rows]
    if not a:
        return ()
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [(abs(a[i][c]), i) for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            _, p = min(nz)
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
        if r == len(a):
            break
    return tuple(tuple(row) for row in a[:r])


def integer_kernel(a, ncols: int | None = None) -> list[tuple[int, ...]]:
    """A Z-basis of {x in Z^n : a x = 0}."""
    n = ncols if ncols is not None else len(a[0])
    if not a:
        return [tuple(r) for r in identity(n)]
    _, d, v = smith_normal_form(a)
    r = sum(1 for i in range(min(len(d), n)) if d[i][i])
    return [tuple(v[i][j] for i in range(n)) for j in range(r, n)]
