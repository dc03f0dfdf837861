"""Tests for subset-labelled matrices."""

from fractions import Fraction

import pytest

from . import utils
from .errors import ShapeMismatchError
from .matrices import (
    IndexedMatrix,
    OrderKind,
    SubsetOrdering,
    even_gap_subsets,
    fraction_free_rank,
    identity_grid,
    kronecker,
    positional_kron,
    subset_labels,
)
from .semiring import BOOLEAN, INTEGER, NEG_INF, RATIONAL, TROPICAL, integer_mod


def _matrix(semiring, rows, ground=1):
    labels = tuple(range(1 << ground))
    return IndexedMatrix(semiring, ground, ground, labels, labels, tuple(tuple(r) for r in rows))


def test_even_gap_subsets_listed_examples():
    assert sorted(utils.members(x) for x in even_gap_subsets(4)) == sorted(
        [[], [1, 2], [1, 4], [3, 4], [1, 2, 3, 4]]
    )
    assert sorted(utils.members(x) for x in even_gap_subsets(5)) == sorted(
        [[1], [3], [5], [1, 2, 3], [1, 2, 5], [1, 4, 5], [3, 4, 5], [1, 2, 3, 4, 5]]
    )


def test_even_gap_counts_are_fibonacci():
    for n in range(21):
        assert len(even_gap_subsets(n)) == utils.fibonacci(n)


def test_orderings():
    assert subset_labels(OrderKind.BINARY, 2) == (0, 1, 2, 3)
    assert subset_labels(OrderKind.PARITY, 2) == (1, 2, 0, 3)
    assert SubsetOrdering(OrderKind.EVEN_GAP, 4).labels == (0, 3, 9, 12, 15)


def test_binary_order_is_built_by_kronecker():
    one = IndexedMatrix.identity(BOOLEAN, 1)
    out = one
    for n in range(2, 5):
        out = kronecker(out, one)
        assert out.row_labels == subset_labels(OrderKind.BINARY, n)


def test_constructors():
    M = IndexedMatrix.from_support(INTEGER, 1, 1, (0, 1), (0, 1), [(0, 1)])
    assert M.data == ((0, 1), (0, 0))
    assert M.entry(0, 1) == 1
    assert M.support() == frozenset({(0, 1)})
    assert M.as_relation() == [(0, 1)]
    assert IndexedMatrix.zeros(INTEGER, 1, 1, (0, 1), (0, 1)).is_zero()
    assert IndexedMatrix.identity(BOOLEAN, 2).data == identity_grid(BOOLEAN, 4)


def test_labels_must_match_grid():
    with pytest.raises(ShapeMismatchError):
        IndexedMatrix(BOOLEAN, 1, 1, (0, 1), (0, 1), ((1, 0),))
    with pytest.raises(ShapeMismatchError, match="distinct"):
        IndexedMatrix(BOOLEAN, 1, 1, (0, 0), (0, 1), ((1, 0), (0, 1)))


def test_transpose_and_symmetry():
    M = IndexedMatrix.from_support(BOOLEAN, 1, 2, (0, 1), (0, 1, 2, 3), [(1, 3)])
    T = M.transpose()
    assert T.shape == (4, 2)
    assert T.entry(3, 1) == 1
    assert T.row_ground == 2
    assert not M.is_symmetric()
    assert IndexedMatrix.identity(BOOLEAN, 2).is_symmetric()


def test_reindex():
    M = _matrix(INTEGER, [[1, 2], [3, 4]])
    assert M.reindex((1, 0), (1, 0)).data == ((4, 3), (2, 1))
    assert M.reindex((1,), (0,)).data == ((3,),)
    with pytest.raises(ShapeMismatchError, match="not present"):
        M.reindex((2,), (0,))


def test_mat_mul_over_each_semiring():
    assert (_matrix(BOOLEAN, [[1, 1], [0, 1]]) @ _matrix(BOOLEAN, [[1, 0], [1, 0]])).data == ((1, 0), (1, 0))
    assert (_matrix(INTEGER, [[1, 1], [0, 1]]) @ _matrix(INTEGER, [[1, 0], [1, 0]])).data == ((2, 0), (1, 0))
    ring = integer_mod(4)
    assert (_matrix(ring, [[3, 3], [0, 1]]) @ _matrix(ring, [[1, 0], [1, 0]])).data == ((2, 0), (1, 0))
    half = Fraction(1, 2)
    assert (_matrix(RATIONAL, [[half, 0], [0, 1]]) @ _matrix(RATIONAL, [[2, 0], [0, 1]])).data == (
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
    )
    A = _matrix(TROPICAL, [[0, NEG_INF], [1, 2]])
    B = _matrix(TROPICAL, [[3, 0], [NEG_INF, 5]])
    assert (A @ B).data == ((3, 0), (4, 7))


def test_mat_mul_mismatch():
    A = _matrix(BOOLEAN, [[1, 0], [0, 1]])
    with pytest.raises(ShapeMismatchError):
        A @ IndexedMatrix.identity(BOOLEAN, 2)
    with pytest.raises(ShapeMismatchError, match="Semirings differ"):
        A @ _matrix(INTEGER, [[1, 0], [0, 1]])


def test_kronecker_uses_labels():
    A = _matrix(INTEGER, [[1, 2], [3, 4]])
    B = _matrix(INTEGER, [[0, 1], [1, 0]])
    K = kronecker(A, B)
    assert K.row_labels == (0, 1, 2, 3)
    # A on bit 0, B on bit 1.
    assert K.entry(0b10, 0b01) == A.entry(0, 1) * B.entry(1, 0)
    assert K.data == positional_kron(INTEGER, B.data, A.data)


def test_leq():
    small = _matrix(BOOLEAN, [[1, 0], [0, 0]])
    big = _matrix(BOOLEAN, [[1, 1], [0, 1]])
    assert small.leq(big)
    assert not big.leq(small)


def test_scale_and_add():
    M = _matrix(INTEGER, [[1, 0], [2, 1]])
    assert M.scale(3).data == ((3, 0), (6, 3))
    assert (M + M).data == M.scale(2).data


def test_with_semiring():
    M = _matrix(BOOLEAN, [[1, 0], [0, 1]])
    assert M.with_semiring(TROPICAL).data == ((0, NEG_INF), (NEG_INF, 0))


@pytest.mark.parametrize(
    "rows, rank",
    [
        ([], 0),
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1]], 2),
        ([[Fraction(1, 2), 1], [1, 2]], 1),
        ([[0, 0, 1], [0, 1, 0], [0, 1, 1]], 2),
        ([[2, 0, 0], [0, 3, 0], [0, 0, 5], [1, 1, 1]], 3),
    ],
)
def test_fraction_free_rank(rows, rank):
    assert fraction_free_rank(rows) == rank
