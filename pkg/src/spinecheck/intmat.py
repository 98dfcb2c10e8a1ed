"""Exact integer and rational matrix helpers.

Everything here is small, dense and exact: Fraction-based elimination,
an LDL^T decomposition used both as a positive-definiteness certificate
and as the driver for lattice point enumeration, a column
triangularization of an integer matrix (Hermite-style) for enumerating
cosets of its column lattice, and the Smith normal form diagonal for
abelianization checks.  Matrices are lists of lists; none of this is
meant for large ranks.
"""

from __future__ import annotations

from fractions import Fraction


def mat_vec(m, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def frac_solve(a, b):
    """Solve a x = b exactly (a square nonsingular), Gauss elimination
    with first-nonzero pivoting.  Raises ZeroDivisionError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def ldl_decomposition(a):
    """A = L D L^T for a symmetric positive-definite matrix, exactly.

    Returns (lower, diag) with unit lower-triangular L and positive
    pivots; all pivots positive is equivalent to the leading principal
    minors of A being positive (minor_k = d_1 ... d_k).  Raises
    ValueError if A is not positive definite.
    """
    n = len(a)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        d = Fraction(a[j][j]) - sum(
            lower[j][k] ** 2 * diag[k] for k in range(j)
        )
        if d <= 0:
            raise ValueError(f"matrix is not positive definite (pivot {j})")
        diag[j] = d
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            lower[i][j] = (
                Fraction(a[i][j])
                - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            ) / d
    return lower, diag


def column_triangularize(m):
    """Lower-triangular basis (positive diagonal) of the column lattice
    of a nonsingular integer matrix, by integer column operations."""
    n = len(m)
    cols = [[m[i][j] for i in range(n)] for j in range(n)]
    for k in range(n):
        while True:
            live = [j for j in range(k, n) if cols[j][k] != 0]
            if not live:
                raise ValueError("matrix is singular")
            j0 = min(live, key=lambda j: (abs(cols[j][k]), j))
            cols[k], cols[j0] = cols[j0], cols[k]
            done = True
            for j in range(k + 1, n):
                if cols[j][k] != 0:
                    q = cols[j][k] // cols[k][k]
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[k])]
                    done = done and cols[j][k] == 0
            if done:
                break
        if cols[k][k] < 0:
            cols[k] = [-x for x in cols[k]]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def reduce_mod_column_lattice(v, h):
    """Canonical representative of v modulo the column lattice of a
    lower-triangular basis h: coordinates reduced into [0, h[k][k])."""
    n = len(v)
    out = list(v)
    for k in range(n):
        q = out[k] // h[k][k]
        for i in range(k, n):
            out[i] -= q * h[i][k]
    return out


def smith_diagonal(m):
    """Diagonal of the Smith normal form of an integer matrix: the
    elementary divisors d_1 | d_2 | ..., nonnegative, zeros trailing."""
    a = [list(map(int, row)) for row in m]
    rows, cols = len(a), len(a[0]) if a else 0
    divisors = []
    t = 0
    while t < min(rows, cols):
        # locate a nonzero entry of least magnitude in the working block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        # clear row and column t; restart if a reduction leaves a remainder
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                for i in range(rows):
                    a[i][j] -= q * a[i][t]
                dirty = dirty or a[t][j] != 0
        if dirty:
            continue
        # divisibility: fold in any entry the pivot does not divide
        pivot = a[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        divisors.append(abs(pivot))
        t += 1
    return divisors
