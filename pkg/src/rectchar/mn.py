"""Murnaghan-Nakayama character evaluation and the normalized character.

character_mn runs the full rim-hook recursion for an arbitrary cycle type;
one_cycle_character handles the single-cycle-plus-fixpoints classes without
deep recursion, which keeps large diagrams cheap.  normalized_character is
the degree-k falling-factorial normalization that turns character ratios
into polynomial data.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import falling_factorial
from .young import Partition, RimHook, dim_f, rim_hooks_of_length

__all__ = [
    "SizeMismatch",
    "OutOfRange",
    "character_mn",
    "one_cycle_character",
    "normalized_character",
]


class SizeMismatch(ValueError):
    """Shape and cycle type do not partition the same number."""


class OutOfRange(ValueError):
    """Requested cycle length does not fit inside the diagram."""


@lru_cache(maxsize=None)
def _hooks(parts: tuple[int, ...], k: int) -> tuple[RimHook, ...]:
    return tuple(rim_hooks_of_length(Partition(parts), k))


def character_mn(shape, cycle_type) -> int:
    """Irreducible character of the shape, evaluated at the cycle type.

    Rim hooks are removed for one part of the cycle type at a time, largest
    part first, with results memoized per call on the remaining shape and
    the position in the part list.

    >>> character_mn(Partition((2, 2)), Partition((3, 1)))
    -1
    """
    lam = Partition(shape)
    mu = Partition(cycle_type)
    if lam.size != mu.size:
        raise SizeMismatch(f"shape {lam} has size {lam.size}, "
                           f"cycle type {mu} has size {mu.size}")
    parts = mu.parts
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def rec(sub: tuple[int, ...], idx: int) -> int:
        if idx == len(parts):
            return 1
        key = (sub, idx)
        known = memo.get(key)
        if known is not None:
            return known
        total = 0
        for hook in _hooks(sub, parts[idx]):
            value = rec(hook.remainder.parts, idx + 1)
            total += -value if hook.height % 2 else value
        memo[key] = total
        return total

    return rec(lam.parts, 0)


def one_cycle_character(shape, k: int) -> int:
    """Character at one k-cycle plus fixpoints, as a single rim-hook sum.

    Each k-hook removal leaves a diagram evaluated at the identity class,
    which is a hook-length count, so there is no deep recursion.

    >>> one_cycle_character(Partition((2, 2)), 3)
    -1
    """
    lam = Partition(shape)
    if k < 1 or k > lam.size:
        raise OutOfRange(f"cycle length {k} does not fit in a diagram of "
                         f"size {lam.size}")
    total = 0
    for hook in _hooks(lam.parts, k):
        value = dim_f(hook.remainder)
        total += -value if hook.height % 2 else value
    return total


def normalized_character(cycle, shape) -> Fraction:
    """The normalized character Ch: falling factorial times character ratio.

    For a cycle type pi of k and a shape of n boxes this is
    n (n-1) ... (n-k+1) times the character at pi completed with fixpoints,
    divided by the dimension; it is 0 whenever n < k.

    >>> normalized_character(Partition((3,)), Partition((2, 2)))
    Fraction(-12, 1)
    """
    pi = Partition(cycle)
    lam = Partition(shape)
    n = lam.size
    k = pi.size
    if n < k:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    if pi.length == 1:
        chi = one_cycle_character(lam, k)
    else:
        mu = Partition(pi.parts + (1,) * (n - k))
        chi = character_mn(lam, mu)
    return Fraction(falling_factorial(n, k) * chi, dim_f(lam))


if __name__ == "__main__":
    import doctest
    doctest.testmod()
