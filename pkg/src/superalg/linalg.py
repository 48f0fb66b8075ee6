"""Small exact linear algebra helpers over any field whose elements support
+, -, *, / and an is_zero() predicate (Q(i) scalars or torus functions).

Matrices are lists/tuples of rows.  Nothing here is optimized; dimensions
in this package stay below a few dozen.
"""

from __future__ import annotations


def mat_mul(a, b, zero):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for s in range(k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v, zero):
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            acc = acc + x * y
        out.append(acc)
    return out


def identity(n, zero, one):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def det(a, zero):
    """Determinant by fraction-full Gaussian elimination (entries in a field)."""
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix has no determinant here")
    m = [list(row) for row in a]
    sign = 1
    acc = None
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        acc = pivot if acc is None else acc * pivot
        for r in range(col + 1, n):
            if m[r][col].is_zero():
                continue
            f = m[r][col] / pivot
            for c in range(col, n):
                m[r][c] = m[r][c] - f * m[col][c]
    return acc if sign > 0 else -acc


def inv(a, zero, one):
    """Inverse via Gauss-Jordan; returns None when singular."""
    n = len(a)
    m = [list(row) + list(identity(n, zero, one)[i]) for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for r in range(n):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def rref(a, zero):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r] + [row for row in m[r:]], pivots


def solve_unique(a, b, zero):
    """Solve Ax = b demanding a unique solution.

    Returns (solution, None) or (None, reason) with reason in
    {"underdetermined", "inconsistent"}.
    """
    rows = [list(r) + [bv] for r, bv in zip(a, b)]
    red, pivots = rref(rows, zero)
    ncols = len(a[0])
    if ncols in pivots:
        return None, "inconsistent"
    if len(pivots) < ncols:
        return None, "underdetermined"
    sol = [zero] * ncols
    for r, c in enumerate(pivots):
        sol[c] = red[r][ncols]
    return sol, None
