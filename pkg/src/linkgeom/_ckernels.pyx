# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the integer kernels in ``_kernels_py``.

Same algorithms, same results; the values stay Python integers (coordinates
are unbounded), the loops and list indexing are compiled.
"""

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def det_int(rows):
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t n = len(m), i, j, k
    cdef int sgn = 1
    cdef list rowk, rowi
    cdef object prev = 1, pk, mik
    if n == 0:
        return 1
    for k in range(n - 1):
        rowk = <list>m[k]
        if rowk[k] == 0:
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    rowk = <list>m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        pk = rowk[k]
        for i in range(k + 1, n):
            rowi = <list>m[i]
            mik = rowi[k]
            if mik == 0:
                for j in range(k + 1, n):
                    rowi[j] = (pk * rowi[j]) // prev
            else:
                for j in range(k + 1, n):
                    rowi[j] = (pk * rowi[j] - mik * rowk[j]) // prev
        prev = pk
    d = (<list>m[n - 1])[n - 1]
    return d if sgn > 0 else -d


cdef object _pivot(list cons, list objs, list basis, Py_ssize_t p, Py_ssize_t q,
                   Py_ssize_t width, object D):
    cdef list rp = <list>cons[p], r
    cdef object piv = rp[q], f, v
    cdef Py_ssize_t j, i
    for r in cons:
        if r is rp:
            continue
        f = r[q]
        if f == 0:
            for j in range(width):
                v = r[j]
                if v != 0:
                    r[j] = (piv * v) // D
        else:
            for j in range(width):
                r[j] = (piv * r[j] - f * rp[j]) // D
    for r in objs:
        f = r[q]
        if f == 0:
            for j in range(width):
                v = r[j]
                if v != 0:
                    r[j] = (piv * v) // D
        else:
            for j in range(width):
                r[j] = (piv * r[j] - f * rp[j]) // D
    basis[p] = q
    return piv


cdef int _run(list cons, list objs, list obj, list basis, Py_ssize_t n,
              Py_ssize_t width, list Dbox):
    cdef Py_ssize_t q, j, i, best
    cdef list row, brow
    cdef object a, lhs, rhs
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
            row = <list>cons[i]
            a = row[q]
            if a > 0:
                if best < 0:
                    best = i
                    continue
                brow = <list>cons[best]
                lhs = row[width - 1] * brow[q]
                rhs = brow[width - 1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                    best = i
        if best < 0:
            return UNBOUNDED
        Dbox[0] = _pivot(cons, objs, basis, best, q, width, Dbox[0])


def lp_max_int(A, b, c):
    cdef Py_ssize_t m = len(A), n = len(c), i, j, q
    cdef Py_ssize_t width = n + m + 1
    cdef list cons = [], row, basis, obj1, obj2, objs
    cdef list Dbox = [1]
    cdef int status
    for i in range(m):
        row = list(A[i]) + [0] * m + [b[i]]
        if b[i] < 0:
            row = [-x for x in row]
        row[n + i] = 1
        cons.append(row)
    basis = [n + i for i in range(m)]
    obj1 = [0] * width
    for row in cons:
        for j in range(n):
            obj1[j] += row[j]
        obj1[width - 1] += row[width - 1]
    obj2 = list(c) + [0] * (m + 1)
    objs = [obj1, obj2]
    _run(cons, objs, obj1, basis, n, width, Dbox)
    if obj1[width - 1] != 0:
        return INFEASIBLE, None, Dbox[0], None
    i = 0
    while i < len(cons):
        if basis[i] >= n:
            row = <list>cons[i]
            q = -1
            for j in range(n):
                if row[j] != 0:
                    q = j
                    break
            if q < 0:
                del cons[i]
                del basis[i]
                continue
            if row[q] < 0:
                row = [-x for x in row]
                cons[i] = row
            Dbox[0] = _pivot(cons, objs, basis, i, q, width, Dbox[0])
        i += 1
    status = _run(cons, objs, obj2, basis, n, width, Dbox)
    if status != OPTIMAL:
        return status, None, Dbox[0], None
    x = [0] * n
    for i in range(len(basis)):
        if basis[i] < n:
            x[basis[i]] = (<list>cons[i])[width - 1]
    return OPTIMAL, x, Dbox[0], -obj2[width - 1]
