# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the hot kernels in pure.py.

Scalars stay generic Python objects (Fraction / Fp / Dual / float); the
win over the pure backend is loop and dispatch overhead, which dominates
for the small dense matrices this package works with. Semantics must stay
bit-identical to pure.py: the parity test suite compares both backends.
"""

BACKEND = "cython"


def matvec(list a, list v, ring):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(v)
    cdef Py_ssize_t i, j
    zero = ring.zero()
    cdef list out = []
    cdef list row
    for i in range(n):
        row = <list>a[i]
        acc = zero
        for j in range(m):
            acc = acc + row[j] * v[j]
        out.append(acc)
    return out


def matmul(list a, list b, ring):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(<list>b[0]) if k else 0
    cdef Py_ssize_t i, j, t
    zero = ring.zero()
    cdef list out = []
    cdef list ai, row
    for i in range(n):
        ai = <list>a[i]
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                acc = acc + ai[t] * (<list>b[t])[j]
            row.append(acc)
        out.append(row)
    return out


def gauss_solve(list a, list b, ring):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(<list>b[0]) if b else 0
    cdef Py_ssize_t width = n + m
    cdef Py_ssize_t col, r, j, piv
    cdef list aug = []
    cdef list prow, rrow
    for r in range(n):
        aug.append(list(<list>a[r]) + list(<list>b[r]))
    zero = ring.zero()
    for col in range(n):
        piv = -1
        best = None
        for r in range(col, n):
            s = (<list>aug[r])[col]
            if ring.is_unit(s):
                mag = ring.pivot_magnitude(s)
                if mag is None:
                    piv = r
                    break
                if best is None or mag > best:
                    best = mag
                    piv = r
        if piv < 0:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = <list>aug[col]
        inv = ring.invert(prow[col])
        for j in range(col, width):
            prow[j] = inv * prow[j]
        for r in range(n):
            if r == col:
                continue
            rrow = <list>aug[r]
            f = rrow[col]
            if f == zero:
                continue
            for j in range(col, width):
                rrow[j] = rrow[j] - f * prow[j]
    return [(<list>row)[n:] for row in aug]


def gauss_rank(list a, ring):
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return 0
    cdef Py_ssize_t m = len(<list>a[0])
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, j, piv
    cdef list rows = [list(<list>row) for row in a]
    cdef list prow, rrow
    zero = ring.zero()
    for col in range(m):
        piv = -1
        best = None
        for r in range(rank, n):
            s = (<list>rows[r])[col]
            if ring.is_unit(s):
                mag = ring.pivot_magnitude(s)
                if mag is None:
                    piv = r
                    break
                if best is None or mag > best:
                    best = mag
                    piv = r
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = <list>rows[rank]
        inv = ring.invert(prow[col])
        for j in range(col, m):
            prow[j] = inv * prow[j]
        for r in range(n):
            if r == rank:
                continue
            rrow = <list>rows[r]
            f = rrow[col]
            if f == zero:
                continue
            for j in range(col, m):
                rrow[j] = rrow[j] - f * prow[j]
        rank += 1
        if rank == n:
            break
    return rank
