"""Tests for the Murnaghan-Nakayama oracle."""

from fractions import Fraction

import pytest

from rectchar.mn import (
    OutOfRange,
    SizeMismatch,
    character_mn,
    normalized_character,
    one_cycle_character,
)
from rectchar.young import Partition, dim_f, partitions, rectangle, transpose

# Full character table of S_4: rows are shapes, columns are the classes
# 1^4, (2,1,1), (2,2), (3,1), (4).
S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
S4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def test_s4_character_table():
    for shape, row in S4_TABLE.items():
        got = [character_mn(Partition(shape), Partition(mu))
               for mu in S4_CLASSES]
        assert got == row, shape


def test_character_examples():
    assert character_mn(Partition((2, 2)), Partition((3, 1))) == -1
    assert character_mn(Partition((1, 1)), Partition((2,))) == -1
    assert character_mn(Partition(()), Partition(())) == 1


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        character_mn(Partition((2, 2)), Partition((3,)))


def test_identity_class_gives_dimension():
    for n in range(11):
        ones = Partition((1,) * n)
        for lam in partitions(n):
            assert character_mn(lam, ones) == dim_f(lam)


def test_conjugate_shape_sign():
    for n in range(8):
        for lam in partitions(n):
            for mu in partitions(n):
                sign = -1 if (n - mu.length) % 2 else 1
                assert (character_mn(transpose(lam), mu)
                        == sign * character_mn(lam, mu)), (lam, mu)


def test_one_cycle_matches_full_recursion():
    for n in range(1, 10):
        for lam in partitions(n):
            for k in range(1, n + 1):
                mu = Partition((k,) + (1,) * (n - k))
                assert one_cycle_character(lam, k) == character_mn(lam, mu)


def test_one_cycle_out_of_range():
    with pytest.raises(OutOfRange):
        one_cycle_character(Partition((2, 2)), 5)
    with pytest.raises(OutOfRange):
        one_cycle_character(Partition((2, 2)), 0)


def test_one_cycle_cancellation():
    # the two 3-hook removals from the 2 x 5 rectangle have equal dimension
    # and opposite sign
    assert one_cycle_character(Partition((5, 5)), 3) == 0


def test_normalized_examples():
    assert normalized_character(Partition((2,)), rectangle(2, 3)) == 6
    assert normalized_character(Partition((3,)), rectangle(2, 2)) == -12
    assert normalized_character(Partition((3,)), rectangle(2, 5)) == 0
    assert normalized_character(Partition((2, 2)), Partition((2, 1, 1))) == -8


def test_normalized_small_and_empty_cycles():
    assert normalized_character(Partition(()), Partition((3, 1))) == 1
    assert normalized_character(Partition((5,)), Partition((2, 2))) == 0


def test_normalized_general_shapes():
    assert normalized_character(Partition((2,)), Partition((2, 1))) == 0
    assert normalized_character(Partition((3,)), Partition((2, 1))) == -3
    value = normalized_character(Partition((2,)), Partition((3, 1)))
    assert isinstance(value, Fraction)
    assert value == 4
