# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of shadowcover.kernels.pure.

Same algorithms, same outputs, bit for bit; Cython removes the interpreter
overhead of the index loops while all arithmetic stays on arbitrary-precision
Python integers.  Keep this file in lockstep with pure.py — the parity test
compares the two backends on randomised inputs.
"""

from itertools import combinations
from math import gcd, lcm


cdef _content(vec):
    cdef object g = 0
    for x in vec:
        g = gcd(g, x)
    return g


cdef list _reduce_row(list row):
    g = _content(row)
    if g > 1:
        return [x // g for x in row]
    return row


def int_rank(rows):
    """Rank of an integer matrix, by fraction-free Gaussian elimination."""
    cdef list m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cdef Py_ssize_t ncols = len(m[0])
    cdef Py_ssize_t rank = 0, col, i, piv
    cdef list prow, row
    for col in range(ncols):
        piv = -1
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pval = prow[col]
        for i in range(rank + 1, len(m)):
            v = m[i][col]
            if v:
                row = m[i]
                m[i] = _reduce_row([pval * a - v * b for a, b in zip(row, prow)])
        rank += 1
        if rank == len(m):
            break
    return rank


def int_nullspace(rows, ncols):
    """Basis of {x : M x = 0} for an integer matrix M with `ncols` columns.

    Returns content-reduced integer vectors, one per free column of the
    reduced echelon form, in increasing free-column order.
    """
    cdef list m = [list(row_) for row_ in rows if any(row_)]
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, col, i, piv, free, r
    cdef list prow, row, vec, basis
    for col in range(ncols):
        piv = -1
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pval = prow[col]
        for i in range(len(m)):
            if i == rank:
                continue
            v = m[i][col]
            if v:
                row = m[i]
                m[i] = _reduce_row([pval * a - v * b for a, b in zip(row, prow)])
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    pivot_cols = set(pivots)
    denom = 1
    for r in range(len(pivots)):
        denom = lcm(denom, abs(m[r][pivots[r]]))
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [0] * ncols
        vec[free] = denom
        for r in range(len(pivots)):
            c = pivots[r]
            vec[c] = -m[r][free] * (denom // m[r][c])
        g = _content(vec)
        if g > 1:
            vec = [x // g for x in vec]
        basis.append(tuple(vec))
    return basis


def circuits(vectors, min_size, max_size, positive_only=False, limit=0):
    """Minimal linear dependencies (circuits) among integer vectors.

    A circuit is a dependent index set all of whose proper subsets are
    independent; its dependency coefficients are unique up to scale.  Only
    circuits with min_size <= size <= max_size are reported, as
    (member index tuple, integer coefficient tuple) pairs in lexicographic
    member order.  With positive_only, keep just the circuits whose
    coefficients can be signed all-positive (returned positive); otherwise
    coefficients are normalised so the first one is positive.  A nonzero
    `limit` stops the search after that many hits.

    DFS over increasing independent prefixes; the elimination is augmented
    with combination bookkeeping (rows remember how they were built from the
    chosen vectors), so dependency coefficients fall out of the reduction
    with no extra solve.  Invariant while reducing a candidate v: s*v equals
    w plus the combination of chosen vectors with coefficients wc.
    """
    cdef Py_ssize_t nvec = len(vectors)
    if nvec == 0:
        return []
    cdef Py_ssize_t dim = len(vectors[0])
    cdef Py_ssize_t prefix_cap = min(max_size - 1, dim)
    cdef list out = []

    def dfs(Py_ssize_t start, tuple chosen, list echelon):
        cdef Py_ssize_t j, idx, pcol, size, k, np
        cdef list w, wc, coeffs, combo
        k = len(chosen)
        for j in range(start, nvec):
            w = list(vectors[j])
            wc = [0] * k
            s = 1
            for prow, pcol_obj, pcombo in echelon:
                pcol = pcol_obj
                x = w[pcol]
                if x:
                    pv = prow[pcol]
                    w = [pv * a - x * b for a, b in zip(w, prow)]
                    np = len(pcombo)
                    for idx in range(np):
                        wc[idx] = pv * wc[idx] + x * pcombo[idx]
                    for idx in range(np, k):
                        wc[idx] = pv * wc[idx]
                    s = pv * s
            pcol = -1
            for idx in range(dim):
                if w[idx]:
                    pcol = idx
                    break
            if pcol < 0:
                # dependent: sum(wc[i]*u_chosen[i]) - s*v_j = 0
                size = k + 1
                if min_size <= size <= max_size and all(wc):
                    coeffs = wc + [-s]
                    g = _content(coeffs)
                    if g > 1:
                        coeffs = [c // g for c in coeffs]
                    if positive_only:
                        # positive indexing: wraparound is compiled out
                        if coeffs[size - 1] < 0:
                            coeffs = [-c for c in coeffs]
                        if all(c > 0 for c in coeffs):
                            out.append((chosen + (j,), tuple(coeffs)))
                            if limit and len(out) >= limit:
                                return True
                    else:
                        for c in coeffs:
                            if c:
                                if c < 0:
                                    coeffs = [-x for x in coeffs]
                                break
                        out.append((chosen + (j,), tuple(coeffs)))
                        if limit and len(out) >= limit:
                            return True
            elif k + 1 <= prefix_cap:
                combo = [-c for c in wc] + [s]
                g = _content(w + combo)
                if g > 1:
                    w = [y // g for y in w]
                    combo = [c // g for c in combo]
                if dfs(j + 1, chosen + (j,), echelon + [(w, pcol, combo)]):
                    return True
        return False

    dfs(0, (), [])
    return out


cdef _det(list m):
    """Determinant of a small square integer matrix (Bareiss)."""
    cdef Py_ssize_t n = len(m)
    if n == 0:
        return 1
    m = [list(r) for r in m]
    cdef int sign = 1
    cdef Py_ssize_t i, j, k
    cdef bint swapped
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swapped = False
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    swapped = True
                    break
            if not swapped:
                return 0
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row = m[i]
            prow = m[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pkk - mik * prow[j]) // prev
            row[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def cross_rows(rows, dim):
    """Generalised cross product of dim-1 integer row vectors in R^dim.

    The result is orthogonal to every row; it is the zero vector exactly when
    the rows are dependent.  For dim == 1 (no rows) the result is (1,).
    """
    if dim == 1:
        return (1,)
    cdef list res = []
    cdef int sign = 1
    cdef Py_ssize_t k
    for k in range(dim):
        minor = [[r[c] for c in range(dim) if c != k] for r in rows]
        res.append(sign * _det(minor))
        sign = -sign
    return tuple(res)


def hull_facets(points):
    """Facets of the convex hull of full-dimensional integer points.

    Brute force: every point subset of size dim spanning a hyperplane is a
    candidate; a candidate survives when all points lie weakly on one side.
    Returns (outward content-reduced normal, offset, incident point indices)
    triples, sorted; cost is C(V, dim) * V dot products.
    """
    cdef Py_ssize_t npts = len(points)
    cdef Py_ssize_t dim = len(points[0])
    cdef Py_ssize_t i, k
    cdef bint haspos, hasneg
    cdef dict found = {}
    cdef list diffs, sides
    for subset in combinations(range(npts), dim):
        base = points[subset[0]]
        diffs = [[points[i][k] - base[k] for k in range(dim)] for i in subset[1:]]
        nrm = cross_rows(diffs, dim)
        if not any(nrm):
            continue
        g = _content(nrm)
        if g > 1:
            nrm = tuple(x // g for x in nrm)
        b = 0
        for k in range(dim):
            b += nrm[k] * base[k]
        haspos = hasneg = False
        sides = []
        for p in points:
            s = -b
            for k in range(dim):
                s += nrm[k] * p[k]
            sides.append(s)
            if s > 0:
                haspos = True
            elif s < 0:
                hasneg = True
            if haspos and hasneg:
                break
        if haspos and hasneg:
            continue
        if haspos:
            nrm = tuple(-x for x in nrm)
            b = -b
        key = (nrm, b)
        if key not in found:
            found[key] = tuple(i for i, s in enumerate(sides) if s == 0)
    return sorted((n, b, inc) for (n, b), inc in found.items())
