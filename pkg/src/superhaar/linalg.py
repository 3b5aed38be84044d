"""Exact dense linear algebra over the rationals.

Matrices are lists of rows, rows are lists of ``Fraction``; everything is
computed exactly (first-nonzero pivoting, no tolerances).  Sizes here are
tiny (dimensions of the algebras and modules under study), so clarity wins
over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

Vector = list[Fraction]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            c = row[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        acc[j] += c * bt[j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((c * x for c, x in zip(row, v) if c), ZERO) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat: Matrix) -> int:
    return len(rref(mat)[1]) if mat else 0


def nullspace(mat: Matrix) -> list[Vector]:
    """Canonical basis of the right kernel (free variables set to 1)."""
    if not mat:
        return []
    cols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def column_space_basis(mat: Matrix) -> list[Vector]:
    """Basis of the column span, as a subset of the original columns."""
    if not mat or not mat[0]:
        return []
    _, pivots = rref(mat)
    return [[row[c] for row in mat] for c in pivots]


def row_space_basis(rows: list[Vector]) -> list[Vector]:
    nonzero = [r for r in rows if any(r)]
    if not nonzero:
        return []
    red, pivots = rref(nonzero)
    return [red[i] for i in range(len(pivots))]


def invert(mat: Matrix) -> Matrix:
    n = len(mat)
    aug = [mat[i][:] + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def same_span(a: list[Vector], b: list[Vector]) -> bool:
    """Do the two vector lists span the same subspace?"""
    if not a and not b:
        return True
    if bool(a) != bool(b):
        return not any(any(v) for v in a + b)
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(a + b)


def trace(mat: Matrix) -> Fraction:
    return sum((mat[i][i] for i in range(len(mat))), ZERO)


# -- polynomials (coefficient lists, ascending powers) ----------------------

def poly_normalize(p: Vector) -> Vector:
    while p and not p[-1]:
        p = p[:-1]
    return p


def poly_derivative(p: Vector) -> Vector:
    return [c * i for i, c in enumerate(p)][1:]


def poly_mod(a: Vector, b: Vector) -> Vector:
    a, b = poly_normalize(a[:]), poly_normalize(b)
    while len(a) >= len(b) > 0:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = poly_normalize(a)
    return a


def poly_gcd(a: Vector, b: Vector) -> Vector:
    a, b = poly_normalize(a), poly_normalize(b)
    while b:
        a, b = b, poly_mod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def is_squarefree(p: Vector) -> bool:
    p = poly_normalize(p)
    if len(p) <= 1:
        return True
    return len(poly_gcd(p, poly_derivative(p))) == 1


def minimal_polynomial(mat: Matrix) -> Vector:
    """Monic minimal polynomial of a square rational matrix.

    Found as the first linear dependence among the flattened powers
    I, M, M^2, ...; degree is at most the matrix dimension.
    """
    n = len(mat)
    if n == 0:
        return [ONE]
    powers = [identity(n)]
    for k in range(1, n + 2):
        powers.append(mat_mul(powers[-1], mat))
        stacked = [[powers[j][r][c] for j in range(k + 1)]
                   for r in range(n) for c in range(n)]
        kern = nullspace(stacked)
        for v in kern:
            if v[k]:
                lead = v[k]
                return [c / lead for c in v]
    raise AssertionError("no minimal polynomial found")  # pragma: no cover
