# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word-pairing kernel.

Same contract as freetoeplitz._pure.form_factors; see that module for
the algorithm description.  Words are copied into C integer buffers and
the run comparisons execute as C loops; only the surviving weight-factor
multi-indices are materialized as Python tuples.
"""

from libc.stdlib cimport malloc, free


cdef inline int _fill(tuple word, int* buf) except -1:
    cdef Py_ssize_t k, m
    m = len(word)
    for k in range(m):
        buf[k] = word[k]
    return 0


def form_factors(tuple f, tuple g):
    """Weight-factor multi-indices of the pairing of words f and g.

    Returns a list of multi-index tuples or None when the pairing is
    zero.
    """
    cdef Py_ssize_t mf = len(f)
    cdef Py_ssize_t mg = len(g)
    cdef int* a = <int*> malloc((mf + 1) * sizeof(int))
    cdef int* b = <int*> malloc((mg + 1) * sizeof(int))
    if a == NULL or b == NULL:
        if a != NULL:
            free(a)
        if b != NULL:
            free(b)
        raise MemoryError()
    cdef Py_ssize_t fa = 0, fb = 0   # cursors into a, b
    cdef Py_ssize_t pf, qf, pg, qg, t, u, r
    cdef int s
    cdef int* h
    cdef Py_ssize_t hm, p, q
    cdef bint zero = 0
    cdef list factors = []
    cdef tuple left

    try:
        _fill(f, a)
        _fill(g, b)
        while True:
            if fa == mf and fb == mg:
                return factors
            if fa == mf or fb == mg:
                # one-sided case; the pairing of words is real
                if fa == mf:
                    h = b + fb
                    hm = mg - fb
                else:
                    h = a + fa
                    hm = mf - fa
                s = 1 if h[0] > 0 else -1
                while hm > 0:
                    p = 0
                    while p < hm and h[p] * s > 0:
                        p += 1
                    q = p
                    while q < hm and h[q] * s < 0:
                        q += 1
                    if q - p != p:
                        return None
                    for t in range(p):
                        if h[t] != -h[q - 1 - t]:
                            return None
                    factors.append(
                        tuple([h[t] * s for t in range(p)])
                    )
                    h = h + q
                    hm = hm - q
                return factors
            if (a[fa] > 0) != (b[fb] > 0):
                return None
            s = 1 if a[fa] > 0 else -1
            pf = fa
            while pf < mf and a[pf] * s > 0:
                pf += 1
            qf = pf
            while qf < mf and a[qf] * s < 0:
                qf += 1
            pg = fb
            while pg < mg and b[pg] * s > 0:
                pg += 1
            qg = pg
            while qg < mg and b[qg] * s < 0:
                qg += 1
            # glued lengths must match before comparing entrywise
            if (pf - fa) + (qg - pg) != (pg - fb) + (qf - pf):
                return None
            # left = head(f) + reversed(mid(g)); right = head(g) + reversed(mid(f))
            r = (pf - fa) + (qg - pg)
            for t in range(r):
                if t < pf - fa:
                    u = a[fa + t] * s
                else:
                    u = -b[qg - 1 - (t - (pf - fa))] * s
                if t < pg - fb:
                    if u != b[fb + t] * s:
                        return None
                else:
                    if u != -a[qf - 1 - (t - (pg - fb))] * s:
                        return None
            left = tuple(
                [a[fa + t] * s for t in range(pf - fa)]
                + [-b[t] * s for t in range(qg - 1, pg - 1, -1)]
            )
            factors.append(left)
            fa = qf
            fb = qg
    finally:
        free(a)
        free(b)
