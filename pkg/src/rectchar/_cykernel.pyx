# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled factorization histogram.

Counting lives entirely in C integers; the counts are safe in 64 bits for
k <= 20, far past what the factorial enumeration can reach anyway.  The
caller does all exact big-integer and rational arithmetic on top of the
returned table.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

__all__ = ["factorization_histogram"]


def factorization_histogram(w):
    """Joint cycle-count table over all factorizations of a permutation.

    Same contract as rectchar._pykernel.factorization_histogram.
    """
    wl = list(w)
    cdef Py_ssize_t k = len(wl)
    if sorted(wl) != list(range(k)):
        raise ValueError(f"not a permutation of 0..{k - 1}: {wl}")
    if k > 20:
        raise OverflowError("histogram counts would overflow 64-bit counters")
    if k == 0:
        return [[1]]

    cdef Py_ssize_t side = k + 1
    cdef long long *hist = <long long *> malloc(side * side * sizeof(long long))
    cdef int *a = <int *> malloc(k * sizeof(int))
    cdef int *winv = <int *> malloc(k * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> malloc(k)
    if hist == NULL or a == NULL or winv == NULL or seen == NULL:
        free(hist); free(a); free(winv); free(seen)
        raise MemoryError()
    memset(hist, 0, side * side * sizeof(long long))

    cdef Py_ssize_t i, j, left, right
    cdef int c1, c2, tmp
    for i in range(k):
        a[i] = <int> i
        winv[<int> wl[i]] = <int> i

    while True:
        # cycles of a
        memset(seen, 0, k)
        c1 = 0
        for i in range(k):
            if not seen[i]:
                c1 += 1
                j = i
                while not seen[j]:
                    seen[j] = 1
                    j = a[j]
        # cycles of w^{-1} a, same type as a^{-1} w
        memset(seen, 0, k)
        c2 = 0
        for i in range(k):
            if not seen[i]:
                c2 += 1
                j = i
                while not seen[j]:
                    seen[j] = 1
                    j = winv[a[j]]
        hist[c1 * side + c2] += 1

        # next permutation in lexicographic order
        left = k - 2
        while left >= 0 and a[left] >= a[left + 1]:
            left -= 1
        if left < 0:
            break
        right = k - 1
        while a[right] <= a[left]:
            right -= 1
        tmp = a[left]; a[left] = a[right]; a[right] = tmp
        left += 1
        right = k - 1
        while left < right:
            tmp = a[left]; a[left] = a[right]; a[right] = tmp
            left += 1
            right -= 1

    out = [[hist[i * side + j] for j in range(side)] for i in range(side)]
    free(hist); free(a); free(winv); free(seen)
    return out
