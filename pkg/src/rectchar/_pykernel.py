"""Pure-Python factorization histogram.

Same contract as the compiled kernel in _cykernel.pyx; see rectchar.kernel
for how one of the two is selected at import time.
"""

from __future__ import annotations

from itertools import permutations

__all__ = ["factorization_histogram"]


def factorization_histogram(w) -> list[list[int]]:
    """Joint cycle-count table over all factorizations of a permutation.

    Given w on {0..k-1} in one-line form, returns the (k+1) x (k+1) table
    whose (c1, c2) entry counts permutations s with c1 cycles such that
    s^{-1} w has c2 cycles.  Enumeration is lexicographic over one-line
    arrays and costs O(k! k).
    """
    w = list(w)
    k = len(w)
    if sorted(w) != list(range(k)):
        raise ValueError(f"not a permutation of 0..{k - 1}: {w}")
    hist = [[0] * (k + 1) for _ in range(k + 1)]
    if k == 0:
        hist[0][0] = 1
        return hist
    winv = [0] * k
    for i, x in enumerate(w):
        winv[x] = i
    stamp = [0] * k
    generation = 0
    indices = range(k)
    for a in permutations(indices):
        generation += 1
        c1 = 0
        for i in indices:
            if stamp[i] != generation:
                c1 += 1
                j = i
                while stamp[j] != generation:
                    stamp[j] = generation
                    j = a[j]
        generation += 1
        c2 = 0
        for i in indices:
            if stamp[i] != generation:
                c2 += 1
                j = i
                while stamp[j] != generation:
                    stamp[j] = generation
                    j = winv[a[j]]
        hist[c1][c2] += 1
    return hist
