"""Pure-Python matrix kernels over a generic scalar ring.

Matrices are lists of row lists of scalar objects; the `ring` argument
supplies zero/one, the unit test used for pivot admissibility, inversion,
and (for float64) a pivot magnitude. Over dual (local) rings the unit test
looks at re-parts only, which is exactly what makes elimination work
there. The compiled twin in fast.pyx implements the same three hot
entry points (matmul, gauss_solve, gauss_rank) with identical semantics.
"""

BACKEND = "pure"


def matvec(a, v, ring):
    zero = ring.zero()
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            acc = acc + x * y
        out.append(acc)
    return out


def matmul(a, b, ring):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    zero = ring.zero()
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def gauss_solve(a, b, ring):
    """Solve A X = B for square A; returns X rows or None if no unit
    pivot can be found for some column (A not invertible over `ring`)."""
    n = len(a)
    m = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    width = n + m
    for col in range(n):
        piv = -1
        best = None
        for r in range(col, n):
            s = aug[r][col]
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
        inv = ring.invert(aug[col][col])
        prow = aug[col]
        for j in range(col, width):
            prow[j] = inv * prow[j]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f == ring.zero():
                continue
            rrow = aug[r]
            for j in range(col, width):
                rrow[j] = rrow[j] - f * prow[j]
    return [row[n:] for row in aug]


def gauss_rank(a, ring):
    """Number of unit pivots found by row elimination.

    Callers dealing with dual rings strip to re-parts first, so this only
    ever sees fields or float64.
    """
    if not a:
        return 0
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0])
    rank = 0
    for col in range(m):
        piv = -1
        best = None
        for r in range(rank, n):
            s = rows[r][col]
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
        inv = ring.invert(rows[rank][col])
        prow = rows[rank]
        for j in range(col, m):
            prow[j] = inv * prow[j]
        for r in range(n):
            if r == rank:
                continue
            f = rows[r][col]
            if f == ring.zero():
                continue
            rrow = rows[r]
            for j in range(col, m):
                rrow[j] = rrow[j] - f * prow[j]
        rank += 1
        if rank == n:
            break
    return rank


def pivot_columns(a, ring):
    """Column indices where elimination finds a unit pivot."""
    if not a:
        return []
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0])
    rank = 0
    cols = []
    for col in range(m):
        piv = -1
        best = None
        for r in range(rank, n):
            s = rows[r][col]
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
        inv = ring.invert(rows[rank][col])
        prow = rows[rank]
        for j in range(col, m):
            prow[j] = inv * prow[j]
        for r in range(n):
            if r == rank:
                continue
            f = rows[r][col]
            if f == ring.zero():
                continue
            rrow = rows[r]
            for j in range(col, m):
                rrow[j] = rrow[j] - f * prow[j]
        cols.append(col)
        rank += 1
        if rank == n:
            break
    return cols


def madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mneg(a):
    return [[-x for x in r] for r in a]


def mscale(a, s):
    return [[s * x for x in r] for r in a]


def meye(n, ring):
    zero = ring.zero()
    one = ring.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mtranspose(a):
    return [list(col) for col in zip(*a)]
