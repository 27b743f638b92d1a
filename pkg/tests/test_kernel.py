"""Tests for the factorization histogram kernels."""

from math import factorial

import pytest

from bruteforce import stirling_first_unsigned
from rectchar import _pykernel
from rectchar.kernel import BACKEND, factorization_histogram

try:
    from rectchar import _cykernel
except ImportError:
    _cykernel = None

BACKENDS = [("python", _pykernel.factorization_histogram)]
if _cykernel is not None:
    BACKENDS.append(("cython", _cykernel.factorization_histogram))


def _w_for_cycle(k):
    return list(range(1, k)) + [0] if k else []


@pytest.mark.parametrize("name,histogram", BACKENDS)
def test_trivial_sizes(name, histogram):
    assert histogram([]) == [[1]]
    assert histogram([0]) == [[0, 0], [0, 1]]


@pytest.mark.parametrize("name,histogram", BACKENDS)
def test_rejects_non_permutations(name, histogram):
    with pytest.raises(ValueError):
        histogram([0, 0])
    with pytest.raises(ValueError):
        histogram([1, 2])


@pytest.mark.parametrize("name,histogram", BACKENDS)
def test_total_and_marginals_are_stirling(name, histogram):
    for k in range(1, 7):
        table = histogram(_w_for_cycle(k))
        total = sum(sum(row) for row in table)
        assert total == factorial(k)
        stirling = stirling_first_unsigned(k)
        row_marginal = [sum(table[c1]) for c1 in range(k + 1)]
        assert row_marginal == stirling + [0] * (k + 1 - len(stirling))
        col_marginal = [sum(table[c1][c2] for c1 in range(k + 1))
                        for c2 in range(k + 1)]
        assert col_marginal == row_marginal


@pytest.mark.parametrize("name,histogram", BACKENDS)
def test_symmetry(name, histogram):
    for w in ([1, 0, 2, 4, 3], [2, 0, 1, 3], [1, 2, 3, 4, 5, 0]):
        table = histogram(w)
        k = len(w)
        for a in range(k + 1):
            for b in range(k + 1):
                assert table[a][b] == table[b][a]


@pytest.mark.parametrize("name,histogram", BACKENDS)
def test_identity_word_is_diagonal(name, histogram):
    for k in range(1, 6):
        table = histogram(list(range(k)))
        stirling = stirling_first_unsigned(k)
        for a in range(k + 1):
            for b in range(k + 1):
                expected = stirling[a] if a == b and a < len(stirling) else 0
                assert table[a][b] == expected


@pytest.mark.skipif(_cykernel is None, reason="compiled kernel not built")
def test_backends_agree():
    words = [_w_for_cycle(k) for k in range(7)]
    words += [[1, 0, 3, 2, 4], [2, 0, 1, 4, 3, 5], [1, 2, 0, 4, 5, 3]]
    for w in words:
        assert (_pykernel.factorization_histogram(w)
                == _cykernel.factorization_histogram(list(w)))


@pytest.mark.skipif(_cykernel is None, reason="compiled kernel not built")
def test_compiled_kernel_guards_counter_width():
    with pytest.raises(OverflowError):
        _cykernel.factorization_histogram(list(range(21)))


def test_selected_backend_is_consistent():
    assert BACKEND in ("python", "cython")
    assert factorization_histogram([1, 0]) == [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
