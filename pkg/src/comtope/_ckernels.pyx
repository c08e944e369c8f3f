# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` for ground sets of at most 63 elements."""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, realloc, free, calloc

NAME = "cython"
MAX_BITS = 63

# tope membership switches from a bitmap to binary search above this many local bits
cdef enum:
    BITMAP_BITS = 26


cdef inline bint _bsearch(const uint64_t* a, Py_ssize_t n, uint64_t key) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and a[lo] == key


cdef inline bint _pair_bsearch(const uint64_t* ap, const uint64_t* am, Py_ssize_t n,
                               uint64_t p, uint64_t m) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if ap[mid] < p or (ap[mid] == p and am[mid] < m):
            lo = mid + 1
        else:
            hi = mid
    return lo < n and ap[lo] == p and am[lo] == m


cdef uint64_t* _to_array(seq) except NULL:
    cdef Py_ssize_t n = len(seq), i
    cdef uint64_t* out = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = <uint64_t> seq[i]
    return out


def reconstruct_range(tope_codes, int k, bint opposite, uint64_t start, uint64_t stop):
    if k > MAX_BITS:
        raise ValueError(f"compiled kernel supports at most {MAX_BITS} coordinates")
    codes_sorted = sorted(set(int(t) for t in tope_codes))
    cdef Py_ssize_t nt = len(codes_sorted)
    cdef uint64_t* codes = _to_array(codes_sorted)
    cdef uint8_t* bitmap = NULL
    cdef bint use_bitmap = k <= BITMAP_BITS
    cdef Py_ssize_t t, i
    cdef uint64_t full = ((<uint64_t> 1) << k) - 1 if k < 64 else <uint64_t> -1
    cdef uint64_t plus = 0, minus = 0, fr, q, bit, c, rest
    cdef bint ok
    cdef int* digits = <int*> malloc((k + 1) * sizeof(int))
    cdef uint64_t* out = NULL
    cdef Py_ssize_t nout = 0, cap = 64

    out = <uint64_t*> malloc(cap * sizeof(uint64_t))
    if use_bitmap:
        bitmap = <uint8_t*> calloc(((<size_t> 1) << k) // 8 + 1, 1)
    if digits == NULL or out == NULL or (use_bitmap and bitmap == NULL):
        free(codes); free(digits); free(out); free(bitmap)
        raise MemoryError()
    try:
        with nogil:
            if use_bitmap:
                for t in range(nt):
                    bitmap[codes[t] >> 3] |= <uint8_t> (1 << (codes[t] & 7))
            rest = start
            for i in range(k - 1, -1, -1):
                digits[i] = <int> (rest % 3)
                rest = rest // 3
                bit = (<uint64_t> 1) << i
                if digits[i] == 0:
                    minus |= bit
                elif digits[i] == 2:
                    plus |= bit
            c = start
            while c < stop:
                fr = full & ~(plus | minus)
                ok = True
                for t in range(nt):
                    if opposite:
                        q = plus | (fr & ~codes[t])
                    else:
                        q = plus | (fr & codes[t])
                    if use_bitmap:
                        if not (bitmap[q >> 3] >> (q & 7)) & 1:
                            ok = False
                            break
                    elif not _bsearch(codes, nt, q):
                        ok = False
                        break
                if ok:
                    if nout == cap:
                        cap *= 2
                        out = <uint64_t*> realloc(out, cap * sizeof(uint64_t))
                        if out == NULL:
                            break
                    out[nout] = c
                    nout += 1
                i = k - 1
                while i >= 0:
                    bit = (<uint64_t> 1) << i
                    if digits[i] == 0:
                        digits[i] = 1
                        minus &= ~bit
                        break
                    if digits[i] == 1:
                        digits[i] = 2
                        plus |= bit
                        break
                    digits[i] = 0
                    plus &= ~bit
                    minus |= bit
                    i -= 1
                c += 1
        if out == NULL:
            raise MemoryError()
        return [out[i] for i in range(nout)]
    finally:
        free(codes)
        free(digits)
        free(out)
        free(bitmap)


def first_closure_violation(plus, minus, bint negate_second):
    cdef Py_ssize_t n = len(plus), i, j
    order = sorted(range(n), key=lambda r: (plus[r], minus[r]))
    cdef uint64_t* p = _to_array(plus)
    cdef uint64_t* m = _to_array(minus)
    cdef uint64_t* sp = _to_array([plus[r] for r in order])
    cdef uint64_t* sm = _to_array([minus[r] for r in order])
    cdef uint64_t fr, yp, ym
    cdef Py_ssize_t wi = -1, wj = -1
    try:
        with nogil:
            for i in range(n):
                fr = ~(p[i] | m[i])
                for j in range(n):
                    if negate_second:
                        yp = m[j]; ym = p[j]
                    else:
                        yp = p[j]; ym = m[j]
                    if not _pair_bsearch(sp, sm, n, p[i] | (yp & fr), m[i] | (ym & fr)):
                        wi = i; wj = j
                        break
                if wi >= 0:
                    break
    finally:
        free(p); free(m); free(sp); free(sm)
    if wi < 0:
        return None
    return wi, wj


def first_elimination_violation(plus, minus):
    cdef Py_ssize_t n = len(plus), i, j, z
    cdef uint64_t* p = _to_array(plus)
    cdef uint64_t* m = _to_array(minus)
    cdef uint64_t xs, sep, keep, tp, tm, covered, missing
    cdef Py_ssize_t wi = -1, wj = -1
    cdef int we = -1
    try:
        with nogil:
            for i in range(n):
                xs = p[i] | m[i]
                for j in range(i + 1, n):
                    sep = (p[i] & m[j]) | (m[i] & p[j])
                    if sep == 0:
                        continue
                    keep = ~sep
                    tp = (p[i] | (p[j] & ~xs)) & keep
                    tm = (m[i] | (m[j] & ~xs)) & keep
                    covered = 0
                    for z in range(n):
                        if (p[z] & keep) == tp and (m[z] & keep) == tm:
                            covered |= sep & ~(p[z] | m[z])
                            if covered == sep:
                                break
                    if covered != sep:
                        missing = sep & ~covered
                        we = 0
                        while not (missing >> we) & 1:
                            we += 1
                        wi = i; wj = j
                        break
                if wi >= 0:
                    break
    finally:
        free(p); free(m)
    if wi < 0:
        return None
    return wi, wj, we
