# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_pykernels``."""
from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 6


cdef unsigned long long _delta_mask(int n, int ngens, int* gens, int* alpha):
    cdef int full = (1 << n) - 1
    cdef int neg = 0
    cdef int i, k, face, allowed, m
    cdef unsigned long long mask = 0
    cdef int* exceed = <int*> malloc(ngens * sizeof(int))
    if exceed == NULL:
        raise MemoryError()
    for i in range(n):
        if alpha[i] < 0:
            neg |= 1 << i
    for k in range(ngens):
        m = 0
        for i in range(n):
            if gens[k * n + i] > alpha[i]:
                m |= 1 << i
        exceed[k] = m
    for face in range(full + 1):
        if face & neg:
            continue
        allowed = full & ~(face | neg)
        for k in range(ngens):
            if not (exceed[k] & allowed):
                break
        else:
            mask |= (<unsigned long long> 1) << face
    free(exceed)
    return mask


cdef int* _pack(gens, int n, int* ngens_out) except NULL:
    cdef int ngens = len(gens)
    cdef int* buf = <int*> malloc((ngens * n + 1) * sizeof(int))
    cdef int k, i
    if buf == NULL:
        raise MemoryError()
    for k, g in enumerate(gens):
        for i in range(n):
            buf[k * n + i] = g[i]
    ngens_out[0] = ngens
    return buf


def delta_mask(gens, alpha):
    cdef int n = len(alpha)
    cdef int ngens
    cdef int a[MAXN]
    cdef int i
    if n > MAXN:
        raise ValueError("too many variables for the compiled kernel")
    for i in range(n):
        a[i] = alpha[i]
    cdef int* buf = _pack(gens, n, &ngens)
    try:
        return _delta_mask(n, ngens, buf, a)
    finally:
        free(buf)


def delta_masks_box(gens, lows, highs):
    cdef int n = len(lows)
    cdef int ngens, i
    cdef int a[MAXN]
    cdef int lo[MAXN]
    cdef int hi[MAXN]
    if n > MAXN:
        raise ValueError("too many variables for the compiled kernel")
    for i in range(n):
        lo[i] = lows[i]
        hi[i] = highs[i]
        if lo[i] > hi[i]:
            return []
        a[i] = lo[i]
    cdef int* buf = _pack(gens, n, &ngens)
    out = []
    try:
        while True:
            out.append((tuple([a[i] for i in range(n)]), _delta_mask(n, ngens, buf, a)))
            # odometer, last coordinate fastest (matches itertools.product)
            i = n - 1
            while i >= 0:
                a[i] += 1
                if a[i] <= hi[i]:
                    break
                a[i] = lo[i]
                i -= 1
            if i < 0:
                break
    finally:
        free(buf)
    return out


def enumerate_s(a):
    cdef int a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4], a6 = a[5]
    cdef int y1, y2, y3, y4
    pts = []
    for y1 in range(a1):
        for y2 in range(a1 - y1):
            for y3 in range(a6):
                if y1 + y3 < a2 or y2 + y3 < a4:
                    continue
                for y4 in range(a6 - y3):
                    if y1 + y4 >= a3 and y2 + y4 >= a5:
                        pts.append((y1, y2, y3, y4))
    return pts
