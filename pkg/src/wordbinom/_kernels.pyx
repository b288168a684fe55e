# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: subsequence-count DP and pairwise projection merge.

Mirrors the reference implementations in ``_pure``; letters are byte-sized
alphabet indices here, so callers route through ``_backend`` which falls back
to the pure versions for alphabets above 256 letters or counts above 64 bits.
"""

from libc.stdlib cimport calloc, free


def count_scattered_u64(const unsigned char[::1] w, const unsigned char[::1] u):
    """Subsequence-embedding count; caller guarantees the result fits 64 bits."""
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t m = u.shape[0]
    cdef Py_ssize_t i, j
    cdef unsigned char c
    cdef unsigned long long *table
    cdef object result
    if m > n:
        return 0
    if m == 0:
        return 1
    table = <unsigned long long *> calloc(m + 1, sizeof(unsigned long long))
    if table == NULL:
        raise MemoryError()
    table[0] = 1
    try:
        for i in range(n):
            c = w[i]
            for j in range(m, 0, -1):
                if u[j - 1] == c:
                    table[j] += table[j - 1]
        result = table[m]
    finally:
        free(table)
    return result


def merge_pairwise(int q, const unsigned char[::1] blob,
                   const long long[::1] offsets, const long long[::1] counts):
    """Merge all two-letter projections back into one word.

    ``blob`` concatenates the projections in canonical pair order; pair p
    occupies ``blob[offsets[p]:offsets[p+1]]``.  Returns the merged word as
    bytes, or None when no word has exactly these projections.
    """
    cdef int npairs = q * (q - 1) // 2
    cdef long long total = 0
    cdef int a, b, c, x, p, top
    cdef long long i, emitted
    cdef int *base = NULL
    cdef long long *ptr = NULL
    cdef long long *rem = NULL
    cdef long long *blocked = NULL
    cdef int *stack = NULL
    cdef unsigned char *out = NULL
    cdef bytes result
    if offsets.shape[0] != npairs + 1:
        raise ValueError("offsets must have one entry per pair plus a sentinel")
    if counts.shape[0] != q:
        raise ValueError("counts must have one entry per letter")
    for a in range(q):
        total += counts[a]

    base = <int *> calloc(q if q > 0 else 1, sizeof(int))
    ptr = <long long *> calloc(npairs + 1, sizeof(long long))
    rem = <long long *> calloc(q if q > 0 else 1, sizeof(long long))
    blocked = <long long *> calloc(q if q > 0 else 1, sizeof(long long))
    stack = <int *> calloc(2 * q + 4, sizeof(int))
    out = <unsigned char *> calloc(total if total > 0 else 1, sizeof(unsigned char))
    if base == NULL or ptr == NULL or rem == NULL or blocked == NULL or stack == NULL or out == NULL:
        free(base); free(ptr); free(rem); free(blocked); free(stack); free(out)
        raise MemoryError()

    try:
        for a in range(q):
            base[a] = a * (q - 1) - a * (a - 1) // 2
            rem[a] = counts[a]
        for a in range(q):
            for b in range(a + 1, q):
                p = base[a] + b - a - 1
                ptr[p] = offsets[p]
                if offsets[p] == offsets[p + 1]:
                    blocked[a] += 1
                    blocked[b] += 1
                elif blob[offsets[p]] == a:
                    blocked[b] += 1
                else:
                    blocked[a] += 1
        top = 0
        for a in range(q):
            if rem[a] > 0 and blocked[a] == 0:
                stack[top] = a
                top += 1
        emitted = 0
        while top > 0:
            top -= 1
            c = stack[top]
            if rem[c] == 0 or blocked[c] != 0:
                continue
            out[emitted] = <unsigned char> c
            emitted += 1
            rem[c] -= 1
            for x in range(q):
                if x == c:
                    continue
                if c < x:
                    p = base[c] + x - c - 1
                else:
                    p = base[x] + c - x - 1
                i = ptr[p] + 1
                ptr[p] = i
                if i == offsets[p + 1]:
                    blocked[c] += 1
                elif blob[i] == x:
                    blocked[c] += 1
                    blocked[x] -= 1
                    if blocked[x] == 0 and rem[x] > 0:
                        if top >= 2 * q + 4:
                            raise RuntimeError("merge stack overflow")
                        stack[top] = x
                        top += 1
            if rem[c] > 0 and blocked[c] == 0:
                if top >= 2 * q + 4:
                    raise RuntimeError("merge stack overflow")
                stack[top] = c
                top += 1
        if emitted != total:
            return None
        for p in range(npairs):
            if ptr[p] != offsets[p + 1]:
                return None
        result = out[:total]
        return result
    finally:
        free(base); free(ptr); free(rem); free(blocked); free(stack); free(out)
