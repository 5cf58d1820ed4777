# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sparse reduced row echelon form modulo a word-sized prime.

Contract identical to ``nal._modrank_py.rref_mod``.  Elimination runs on C
arrays with the GIL released, so independent matrices can be reduced from
several threads.
"""
from libc.stdlib cimport malloc, free, calloc
from libc.stdint cimport int64_t, int32_t


cdef struct SRow:
    int32_t n
    int32_t* cols
    int64_t* vals


cdef inline int64_t _inv(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _eliminate(SRow* inp, Py_ssize_t nrows, Py_ssize_t ncols, int64_t p,
                    SRow* piv, int32_t* pivot_of) noexcept nogil:
    """Echelon form, then back substitution.  Returns -1 on allocation failure."""
    cdef int64_t* acc = <int64_t*> calloc(ncols, sizeof(int64_t))
    cdef int32_t* scratch_c = <int32_t*> malloc(ncols * sizeof(int32_t))
    cdef int64_t* scratch_v = <int64_t*> malloc(ncols * sizeof(int64_t))
    if acc == NULL or scratch_c == NULL or scratch_v == NULL:
        free(acc); free(scratch_c); free(scratch_v)
        return -1
    cdef Py_ssize_t i, k, c, lead, newpiv, m
    cdef int64_t a, f, inv
    cdef SRow* pr
    cdef int status = 0

    for i in range(nrows):
        if inp[i].n == 0:
            continue
        for k in range(inp[i].n):
            acc[inp[i].cols[k]] = inp[i].vals[k]
        lead = inp[i].cols[0]
        newpiv = -1
        for c in range(lead, ncols):
            a = acc[c]
            if a == 0:
                continue
            if pivot_of[c] < 0:
                newpiv = c
                break
            pr = &piv[c]
            f = p - a
            for k in range(pr.n):
                acc[pr.cols[k]] = (acc[pr.cols[k]] + f * pr.vals[k]) % p
        if newpiv < 0:
            continue
        inv = _inv(acc[newpiv], p)
        m = 0
        for c in range(newpiv, ncols):
            if acc[c] != 0:
                scratch_c[m] = <int32_t> c
                scratch_v[m] = acc[c] * inv % p
                m += 1
                acc[c] = 0
        piv[newpiv].n = <int32_t> m
        piv[newpiv].cols = <int32_t*> malloc(m * sizeof(int32_t))
        piv[newpiv].vals = <int64_t*> malloc(m * sizeof(int64_t))
        if piv[newpiv].cols == NULL or piv[newpiv].vals == NULL:
            status = -1
            break
        for k in range(m):
            piv[newpiv].cols[k] = scratch_c[k]
            piv[newpiv].vals[k] = scratch_v[k]
        pivot_of[newpiv] = 1

    # back substitution, largest pivot column first
    if status == 0:
        for c in range(ncols - 1, -1, -1):
            if pivot_of[c] < 0:
                continue
            pr = &piv[c]
            for k in range(pr.n):
                acc[pr.cols[k]] = pr.vals[k]
            for k in range(1, pr.n):
                lead = pr.cols[k]
                a = acc[lead]
                if a == 0 or pivot_of[lead] < 0:
                    continue
                f = p - a
                for m in range(piv[lead].n):
                    acc[piv[lead].cols[m]] = (acc[piv[lead].cols[m]] + f * piv[lead].vals[m]) % p
            m = 0
            for lead in range(c, ncols):
                if acc[lead] != 0:
                    scratch_c[m] = <int32_t> lead
                    scratch_v[m] = acc[lead]
                    m += 1
                    acc[lead] = 0
            free(pr.cols); free(pr.vals)
            pr.n = <int32_t> m
            pr.cols = <int32_t*> malloc(m * sizeof(int32_t))
            pr.vals = <int64_t*> malloc(m * sizeof(int64_t))
            if pr.cols == NULL or pr.vals == NULL:
                status = -1
                break
            for k in range(m):
                pr.cols[k] = scratch_c[k]
                pr.vals[k] = scratch_v[k]

    free(acc); free(scratch_c); free(scratch_v)
    return status


def rref_mod(rows, Py_ssize_t ncols, long long p):
    """Reduced row echelon form of sparse ``rows`` over GF(p), ``p < 2**31``."""
    if p >= (1 << 31) or p < 2:
        raise ValueError("modulus must be a prime below 2**31")
    rows = list(rows)
    cdef Py_ssize_t nrows = len(rows), i, k, n
    cdef SRow* inp = <SRow*> calloc(nrows if nrows else 1, sizeof(SRow))
    cdef SRow* piv = <SRow*> calloc(ncols if ncols else 1, sizeof(SRow))
    cdef int32_t* pivot_of = <int32_t*> malloc((ncols if ncols else 1) * sizeof(int32_t))
    if inp == NULL or piv == NULL or pivot_of == NULL:
        free(inp); free(piv); free(pivot_of)
        raise MemoryError()
    cdef int status
    cdef int64_t v
    try:
        for i in range(ncols):
            pivot_of[i] = -1
        for i in range(nrows):
            cols, vals = rows[i]
            n = len(cols)
            inp[i].cols = <int32_t*> malloc((n if n else 1) * sizeof(int32_t))
            inp[i].vals = <int64_t*> malloc((n if n else 1) * sizeof(int64_t))
            if inp[i].cols == NULL or inp[i].vals == NULL:
                raise MemoryError()
            inp[i].n = 0
            for k in range(n):
                v = vals[k] % p
                if v:
                    c = cols[k]
                    if c < 0 or c >= ncols:
                        raise IndexError(f"column {c} out of range")
                    inp[i].cols[inp[i].n] = <int32_t> c
                    inp[i].vals[inp[i].n] = v
                    inp[i].n += 1
        with nogil:
            status = _eliminate(inp, nrows, ncols, p, piv, pivot_of)
        if status != 0:
            raise MemoryError()
        pivots = []
        reduced = []
        for i in range(ncols):
            if pivot_of[i] < 0:
                continue
            pivots.append(i)
            reduced.append(([piv[i].cols[k] for k in range(piv[i].n)],
                            [piv[i].vals[k] for k in range(piv[i].n)]))
        return pivots, reduced
    finally:
        for i in range(nrows):
            free(inp[i].cols); free(inp[i].vals)
        for i in range(ncols):
            if pivot_of[i] >= 0:
                free(piv[i].cols); free(piv[i].vals)
        free(inp); free(piv); free(pivot_of)
