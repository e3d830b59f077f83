"""Pure-Python hot kernels.

Two integer kernels carry almost all of the exact arithmetic:

* ``det_int`` -- Bareiss fraction-free determinant.
* ``lp_max_int`` -- two-phase simplex on an integer tableau with
  Edmonds-style integer-preserving pivots and Bland's rule.

The ``*_field`` variants run the same algorithms over any exact ordered field
(used for Q(sqrt 3) coordinates).  ``_ckernels.pyx`` mirrors the integer API.
"""
from operator import floordiv, truediv

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def _det(rows, div):
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sgn = 1
    prev = 1
    for k in range(n - 1):
        rowk = m[k]
        if rowk[k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    rowk = m[k]
                    sgn = -sgn
                    break
            else:
                return 0 * prev
        pk = rowk[k]
        for i in range(k + 1, n):
            rowi = m[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = div(pk * rowi[j] - mik * rowk[j], prev)
        prev = pk
    d = m[n - 1][n - 1]
    return d if sgn > 0 else -d


def det_int(rows):
    """Determinant of a square integer matrix (list of rows)."""
    return _det(rows, floordiv)


def det_field(rows):
    """Determinant over an exact field (Fractions, QuadSqrt3, ...)."""
    return _det(rows, truediv)


def _lp_max(A, b, c, div):
    m = len(A)
    n = len(c)
    cons = []
    for i in range(m):
        row = list(A[i]) + [0] * m + [b[i]]
        if b[i] < 0:
            row = [-x for x in row]
        row[n + i] = 1
        cons.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1
    obj1 = [0] * width
    for row in cons:
        for j in range(n):
            obj1[j] += row[j]
        obj1[-1] += row[-1]
    obj2 = list(c) + [0] * (m + 1)
    state = {"D": 1}

    def pivot(p, q):
        D = state["D"]
        rp = cons[p]
        piv = rp[q]
        for r in cons + [obj1, obj2]:
            if r is rp:
                continue
            f = r[q]
            if f == 0:
                for j in range(width):
                    if r[j] != 0:
                        r[j] = div(piv * r[j], D)
            else:
                for j in range(width):
                    r[j] = div(piv * r[j] - f * rp[j], D)
        state["D"] = piv
        basis[p] = q

    def run(obj):
        while True:
            q = -1
            for j in range(n):
                if obj[j] > 0:
                    q = j
                    break
            if q < 0:
                return OPTIMAL
            best = -1
            for i in range(len(cons)):
                a = cons[i][q]
                if a > 0:
                    if best < 0:
                        best = i
                        continue
                    lhs = cons[i][-1] * cons[best][q]
                    rhs = cons[best][-1] * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                        best = i
            if best < 0:
                return UNBOUNDED
            pivot(best, q)

    run(obj1)
    if obj1[-1] != 0:
        return INFEASIBLE, None, state["D"], None
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(cons):
        if basis[i] >= n:
            row = cons[i]
            q = next((j for j in range(n) if row[j] != 0), -1)
            if q < 0:
                del cons[i]
                del basis[i]
                continue
            if row[q] < 0:
                cons[i] = row = [-x for x in row]
            pivot(i, q)
        i += 1
    status = run(obj2)
    if status != OPTIMAL:
        return status, None, state["D"], None
    x = [0] * n
    for i, v in enumerate(basis):
        x[v] = cons[i][-1]
    return OPTIMAL, x, state["D"], -obj2[-1]


def lp_max_int(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0 (integer data).

    Returns ``(status, x_num, D, z_num)``: the optimum is ``x_num[j] / D``
    with value ``z_num / D``.  ``D`` is always positive.
    """
    return _lp_max(A, b, c, floordiv)


def lp_max_field(A, b, c):
    return _lp_max(A, b, c, truediv)
