"""Small exact linear-algebra helpers for non-hot paths."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import QuadSqrt3


def _field(x):
    return x if isinstance(x, (Fraction, QuadSqrt3)) else Fraction(x)


def solve(rows: Sequence[Sequence], rhs: Sequence):
    """Solve a (possibly overdetermined) consistent system exactly.

    Returns one solution (free variables set to 0) or None if inconsistent.
    """
    m = [[_field(a) for a in r] + [_field(b)] for r, b in zip(rows, rhs)]
    ncols = len(m[0]) - 1 if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r]
        inv = 1 / p[col]
        p = m[r] = [a * inv for a in p]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], p)]
        pivots.append(col)
        r += 1
    if any(row[-1] != 0 for row in m[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return x


def barycentric(vertices: Sequence[Sequence], x: Sequence):
    """Barycentric coordinates of x w.r.t. affinely independent vertices, or
    None when x is off their affine hull."""
    k = len(vertices)
    d = len(x)
    rows = [[vertices[j][i] for j in range(k)] for i in range(d)] + [[1] * k]
    return solve(rows, list(x) + [1])


def in_closed_simplex(vertices, x) -> bool:
    lam = barycentric(vertices, x)
    return lam is not None and all(v >= 0 for v in lam)


def nullspace_vector(rows: Sequence[Sequence[int]]):
    """Nonzero integer kernel vector of an integer matrix with more columns
    than its rank, by fraction-free (Bareiss) row reduction."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    prev = 1
    r = 0
    pivots = []
    for col in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        p = pr[col]
        for i in range(len(m)):
            f = m[i][col]
            if i < r and f != 0:
                # rows above only need the column cleared; no division
                m[i] = [p * a - f * b for a, b in zip(m[i], pr)]
            elif i > r:
                m[i] = [(p * a - f * b) // prev for a, b in zip(m[i], pr)]
        prev = p
        pivots.append(col)
        r += 1
    free = next(c for c in range(ncols) if c not in pivots)
    # rows above are in reduced (but not normalized) form: row i has pivot
    # column pivots[i]; solve with free variable = 1 using Fractions
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for i in reversed(range(r)):
        col = pivots[i]
        s = sum(m[i][j] * x[j] for j in range(ncols) if j != col)
        x[col] = -s / m[i][col]
    den = 1
    for v in x:
        den = den * v.denominator // _gcd(den, v.denominator)
    return [int(v * den) for v in x]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
