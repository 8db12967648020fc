# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel for the verification sweeps.

Same contract as _fallback.theorem_stats: for one colored permutation,
compute the group-side data (inversions of the permutation, color sum)
and the tableaux-side data (Schensted insertion per color class, row
positions of every label, shape-based statistics) in one pass over C
arrays.  Rank is capped at 64, far beyond anything enumerable.
"""

DEF MAXN = 64


def theorem_stats(perm, colors, int r):
    cdef int n = len(perm)
    if n > MAXN:
        raise ValueError(f"rank {n} exceeds compiled kernel cap {MAXN}")

    cdef int sigma[MAXN]
    cdef int a[MAXN]
    cdef int row_p[MAXN + 1]   # row (0-based) of value label in P
    cdef int row_q[MAXN + 1]   # row of position label in Q
    cdef int comp_of[MAXN + 1]  # color class of value label
    cdef int vals[MAXN][MAXN]
    cdef int rowlen[MAXN]
    cdef int i, j, k, t, c, x, y, nrows, pos
    cdef int inv_sigma = 0, color_sum = 0, e_p = 0, ts = 0
    cdef int inv_p = 0, inv_q = 0

    for i in range(n):
        sigma[i] = perm[i]
        a[i] = colors[i]
        color_sum += a[i]
        comp_of[sigma[i]] = a[i]
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                inv_sigma += 1

    for k in range(r):
        nrows = 0
        for i in range(n):
            if a[i] != k:
                continue
            ts += k
            x = sigma[i]
            t = 0
            while True:
                if t == nrows:
                    vals[t][0] = x
                    rowlen[t] = 1
                    nrows += 1
                    row_p[x] = t
                    break
                pos = -1
                for c in range(rowlen[t]):
                    if vals[t][c] > x:
                        pos = c
                        break
                if pos < 0:
                    vals[t][rowlen[t]] = x
                    rowlen[t] += 1
                    row_p[x] = t
                    break
                y = vals[t][pos]
                vals[t][pos] = x
                row_p[x] = t
                x = y
                t += 1
            # the appended box sits in the row where the bump chain ended
            row_q[i + 1] = t
        for t in range(1, nrows, 2):
            e_p += rowlen[t]

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if comp_of[j] < comp_of[i]:
                inv_p += 1
            elif comp_of[j] == comp_of[i] and row_p[i] > row_p[j]:
                inv_p += 1
    # Q labels are positions; their class is the color at that position
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if a[j - 1] < a[i - 1]:
                inv_q += 1
            elif a[j - 1] == a[i - 1] and row_q[i] > row_q[j]:
                inv_q += 1

    return (inv_sigma, color_sum, e_p, inv_p, inv_q, ts, ts)
