"""Exact dense linear algebra over Q or a cyclotomic field.

Matrices are lists of lists whose entries support +, -, *, /, == 0 exactly
(Fraction and Cyc both qualify).  Everything here is Gaussian elimination;
no numerical rank decisions are ever made.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = ai[0] * b[0][j]
            for t in range(1, k):
                if ai[t]:
                    s = s + ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = row[0] * v[0]
        for t in range(1, len(v)):
            if row[t]:
                s = s + row[t] * v[t]
        out.append(s)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, m, zero=Fraction(0)):
    return [[zero] * m for _ in range(n)]


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def kron(a, b):
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def rref(mat):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(row) for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat):
    """Basis (list of vectors) of the right kernel."""
    if not mat:
        return []
    cols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    zero = mat[0][0] - mat[0][0]
    one = zero + 1
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def column_space_basis(mat):
    """Indices of pivot columns plus the columns themselves."""
    red, pivots = rref(mat)
    cols = transpose(mat)
    return pivots, [cols[p] for p in pivots]


def solve(a, b):
    """Solve a x = b for one vector b; raises ValueError if inconsistent."""
    n, m = len(a), len(a[0])
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if m in pivots:
        raise ValueError("inconsistent linear system")
    zero = a[0][0] - a[0][0]
    x = [zero] * m
    for r, pc in enumerate(pivots):
        x[pc] = red[r][m]
    return x


def solve_matrix(a, b):
    """Solve a X = b (b a matrix), column by column."""
    cols = transpose(b)
    xs = [solve(a, c) for c in cols]
    return transpose(xs)


def inverse(a):
    n = len(a)
    zero = a[0][0] - a[0][0]
    one = zero + 1
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def charpoly(a):
    """Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.

    Returns coefficients lowest degree first; requires entries embeddable
    in a field of characteristic 0 (division by integers happens).
    """
    n = len(a)
    zero = a[0][0] - a[0][0]
    one = zero + 1
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    m = zeros(n, n, zero)
    c = one
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        am = mat_mul(a, m) if k > 1 else [[zero] * n for _ in range(n)]
        for i in range(n):
            am[i][i] = am[i][i] + c
        m = am
        t = mat_mul(a, m)
        tr = t[0][0]
        for i in range(1, n):
            tr = tr + t[i][i]
        c = -tr / k
        coeffs[n - k] = c
    return coeffs


def intersect_rowspaces(a, b):
    """Basis of the intersection of the row spaces of a and b."""
    if not a or not b:
        return []
    # x in both spaces: x = u a = v b; solve [a^T | -b^T] kernel.
    at, bt = transpose(a), transpose(b)
    stacked = [ra + [-x for x in rb] for ra, rb in zip(at, bt)]
    ker = nullspace(stacked)
    na = len(a)
    out = []
    for k in ker:
        u = k[:na]
        vec = [sum(u[i] * a[i][j] for i in range(na)) for j in range(len(a[0]))]
        if any(vec):
            out.append(vec)
    red, piv = rref(out) if out else ([], [])
    return [red[i] for i in range(len(piv))]
