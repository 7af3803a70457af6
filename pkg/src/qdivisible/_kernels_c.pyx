# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contracts as _kernels_py (the reference implementation): flat int
sequences in, plain lists out.  One generic table-driven path; at C speed
a GF(2) special case is not worth the duplication.
"""

import array

from cpython cimport array


cdef int _absorb(int[::1] basis, int[::1] pivs, int nb, int[::1] row,
                 int q, int v, int[::1] add, int[::1] mul,
                 int[::1] neg, int[::1] inv):
    """Reduce row against basis; append normalized if independent.

    Returns the new basis size.  Basis rows have zeros before their pivot
    and lack all earlier pivots, so one in-order pass fully reduces.
    """
    cdef int t, c, p, coeff, li, x
    for t in range(nb):
        p = pivs[t]
        coeff = row[p]
        if coeff != 0:
            for c in range(p, v):
                x = basis[t * v + c]
                if x != 0:
                    row[c] = add[row[c] * q + neg[mul[coeff * q + x]]]
    p = -1
    for c in range(v):
        if row[c] != 0:
            p = c
            break
    if p < 0:
        return nb
    li = inv[row[p]]
    for c in range(v):
        if li != 1 and row[c] != 0:
            basis[nb * v + c] = mul[li * q + row[c]]
        else:
            basis[nb * v + c] = row[c]
    pivs[nb] = p
    return nb + 1


def incidence_histogram(int q, int v, int n, int k, gens_in, add_in, mul_in):
    cdef array.array gens_a = array.array('i', gens_in)
    cdef array.array add_a = array.array('i', add_in)
    cdef array.array mul_a = array.array('i', mul_in)
    cdef int[::1] gens = gens_a
    cdef int[::1] add = add_a
    cdef int[::1] mul = mul_a
    cdef array.array hist_a = array.array('q', bytes(8 * (n + 1)))
    cdef long long[::1] hist = hist_a
    cdef array.array f_a = array.array('i', bytes(4 * v))
    cdef int[::1] f = f_a
    cdef int lead, c, m, r, s, cnt, fc, pos
    cdef bint inside
    for lead in range(v):
        for c in range(v):
            f[c] = 0
        f[lead] = 1
        while True:
            cnt = 0
            for m in range(n):
                inside = 1
                for r in range(k):
                    pos = (m * k + r) * v
                    s = 0
                    for c in range(lead, v):
                        fc = f[c]
                        if fc != 0:
                            s = add[s * q + mul[gens[pos + c] * q + fc]]
                    if s != 0:
                        inside = 0
                        break
                if inside:
                    cnt += 1
            hist[cnt] += 1
            c = lead + 1
            while c < v and f[c] == q - 1:
                f[c] = 0
                c += 1
            if c >= v:
                break
            f[c] += 1
    return list(hist_a)


def triple_dim_histogram(int q, int v, int n, int k, gens_in, add_in, mul_in,
                         neg_in, inv_in):
    cdef array.array hist_a = array.array('q', bytes(8 * (3 * k + 1)))
    if n < 3:
        return list(hist_a)
    cdef array.array gens_a = array.array('i', gens_in)
    cdef array.array add_a = array.array('i', add_in)
    cdef array.array mul_a = array.array('i', mul_in)
    cdef array.array neg_a = array.array('i', neg_in)
    cdef array.array inv_a = array.array('i', inv_in)
    cdef int[::1] gens = gens_a
    cdef int[::1] add = add_a
    cdef int[::1] mul = mul_a
    cdef int[::1] neg = neg_a
    cdef int[::1] inv = inv_a
    cdef long long[::1] hist = hist_a
    cdef array.array basis_a = array.array('i', bytes(4 * 3 * k * v))
    cdef int[::1] basis = basis_a
    cdef array.array pivs_a = array.array('i', bytes(4 * 3 * k))
    cdef int[::1] pivs = pivs_a
    cdef array.array row_a = array.array('i', bytes(4 * v))
    cdef int[::1] row = row_a
    cdef int i, j, l, r, c, nb, nb2
    for i in range(n):
        for j in range(i + 1, n):
            nb = 0
            for r in range(k):
                for c in range(v):
                    row[c] = gens[(i * k + r) * v + c]
                nb = _absorb(basis, pivs, nb, row, q, v, add, mul, neg, inv)
            for r in range(k):
                for c in range(v):
                    row[c] = gens[(j * k + r) * v + c]
                nb = _absorb(basis, pivs, nb, row, q, v, add, mul, neg, inv)
            for l in range(j + 1, n):
                nb2 = nb
                for r in range(k):
                    for c in range(v):
                        row[c] = gens[(l * k + r) * v + c]
                    nb2 = _absorb(basis, pivs, nb2, row, q, v, add, mul, neg, inv)
                hist[nb2] += 1
    return list(hist_a)
