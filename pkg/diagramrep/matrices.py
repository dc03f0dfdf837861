"""Subset-labelled matrices over a semiring, subset orderings and exact rank."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import lcm
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import ShapeMismatchError
from .semiring import BooleanSemiring, IntegerModRing, IntegerRing, NaturalSemiring, RationalField, Semiring


class OrderKind(str, Enum):
    BINARY = "binary"
    PARITY = "parity"
    EVEN_GAP = "evengap"


@lru_cache(maxsize=None)
def even_gap_subsets(n: int) -> Tuple[int, ...]:
    """Subsets of [n] whose complement is a disjoint union of even-length intervals."""
    if n == 0:
        return (0,)
    if n == 1:
        return (1,)
    top = 1 << (n - 1)
    return tuple(sorted([x | top for x in even_gap_subsets(n - 1)] + list(even_gap_subsets(n - 2))))


@lru_cache(maxsize=None)
def subset_labels(kind: OrderKind, n: int) -> Tuple[int, ...]:
    kind = OrderKind(kind)
    if kind is OrderKind.BINARY:
        return tuple(range(1 << n))
    if kind is OrderKind.PARITY:
        masks = range(1 << n)
        return tuple([x for x in masks if x.bit_count() % 2] + [x for x in masks if not x.bit_count() % 2])
    return even_gap_subsets(n)


def odd_subsets(n: int) -> Tuple[int, ...]:
    return tuple(x for x in range(1 << n) if x.bit_count() % 2)


def even_subsets(n: int) -> Tuple[int, ...]:
    return tuple(x for x in range(1 << n) if not x.bit_count() % 2)


@dataclass(frozen=True)
class SubsetOrdering:
    kind: OrderKind
    n: int

    @property
    def labels(self) -> Tuple[int, ...]:
        return subset_labels(self.kind, self.n)


@dataclass(frozen=True)
class IndexedMatrix:
    """A dense matrix whose rows and columns are labelled by subsets.

    `row_ground`/`col_ground` are the sizes of the ground sets the labels
    are subsets of; the labels themselves are bitmasks.
    """

    semiring: Semiring
    row_ground: int
    col_ground: int
    row_labels: Tuple[int, ...]
    col_labels: Tuple[int, ...]
    data: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.data) != len(self.row_labels) or any(
            len(row) != len(self.col_labels) for row in self.data
        ):
            raise ShapeMismatchError("Entry grid does not match the label sequences")
        if len(set(self.row_labels)) != len(self.row_labels) or len(set(self.col_labels)) != len(
            self.col_labels
        ):
            raise ShapeMismatchError("Labels must be distinct")

    # Constructors
    @classmethod
    def from_support(
        cls,
        semiring: Semiring,
        row_ground: int,
        col_ground: int,
        row_labels: Sequence[int],
        col_labels: Sequence[int],
        support: Iterable[Tuple[int, int]],
    ) -> "IndexedMatrix":
        """Zero-one matrix with ones exactly at the labelled pairs in `support`."""
        rows = {x: i for i, x in enumerate(row_labels)}
        cols = {y: j for j, y in enumerate(col_labels)}
        grid = [[semiring.zero] * len(cols) for _ in rows]
        for x, y in support:
            if x in rows and y in cols:
                grid[rows[x]][cols[y]] = semiring.one
        return cls(semiring, row_ground, col_ground, tuple(row_labels), tuple(col_labels), _freeze(grid))

    @classmethod
    def zeros(
        cls, semiring: Semiring, row_ground: int, col_ground: int, row_labels: Sequence[int], col_labels: Sequence[int]
    ) -> "IndexedMatrix":
        return cls.from_support(semiring, row_ground, col_ground, row_labels, col_labels, ())

    @classmethod
    def identity(cls, semiring: Semiring, n: int, labels: Optional[Sequence[int]] = None) -> "IndexedMatrix":
        labels = tuple(range(1 << n)) if labels is None else tuple(labels)
        return cls.from_support(semiring, n, n, labels, labels, ((x, x) for x in labels))

    # Basic views
    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    @cached_property
    def row_index(self) -> Dict[int, int]:
        return {x: i for i, x in enumerate(self.row_labels)}

    @cached_property
    def col_index(self) -> Dict[int, int]:
        return {y: j for j, y in enumerate(self.col_labels)}

    def entry(self, x: int, y: int) -> Any:
        return self.data[self.row_index[x]][self.col_index[y]]

    def support(self) -> FrozenSet[Tuple[int, int]]:
        zero = self.semiring.zero
        return frozenset(
            (x, y)
            for x, row in zip(self.row_labels, self.data)
            for y, v in zip(self.col_labels, row)
            if v != zero
        )

    def as_relation(self) -> List[Tuple[int, int]]:
        """The pairs (X, Y) with a nonzero entry, in label order."""
        zero = self.semiring.zero
        return [
            (x, y)
            for x, row in zip(self.row_labels, self.data)
            for y, v in zip(self.col_labels, row)
            if v != zero
        ]

    def is_zero(self) -> bool:
        zero = self.semiring.zero
        return all(v == zero for row in self.data for v in row)

    def is_symmetric(self) -> bool:
        return self.row_labels == self.col_labels and self.data == self.transpose().data

    def _check_compatible(self, other: "IndexedMatrix") -> None:
        if self.semiring != other.semiring:
            raise ShapeMismatchError(f"Semirings differ: {self.semiring} vs {other.semiring}")
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ShapeMismatchError("Label sequences differ")

    def leq(self, other: "IndexedMatrix") -> bool:
        """Entrywise zero-one order: every one of `self` is a one of `other`."""
        self._check_compatible(other)
        one = self.semiring.one
        return all(
            b == one
            for row_a, row_b in zip(self.data, other.data)
            for a, b in zip(row_a, row_b)
            if a == one
        )

    # Arithmetic
    def transpose(self) -> "IndexedMatrix":
        return IndexedMatrix(
            self.semiring,
            self.col_ground,
            self.row_ground,
            self.col_labels,
            self.row_labels,
            tuple(zip(*self.data)) if self.data else tuple(() for _ in self.col_labels),
        )

    def scale(self, k: Any) -> "IndexedMatrix":
        mul = self.semiring.mul
        return self._with_data(tuple(tuple(mul(k, v) for v in row) for row in self.data))

    def add(self, other: "IndexedMatrix") -> "IndexedMatrix":
        self._check_compatible(other)
        add = self.semiring.add
        return self._with_data(
            tuple(tuple(add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data))
        )

    def reindex(self, row_labels: Sequence[int], col_labels: Sequence[int]) -> "IndexedMatrix":
        """The submatrix (or permutation) on the given labels."""
        try:
            rows = [self.row_index[x] for x in row_labels]
            cols = [self.col_index[y] for y in col_labels]
        except KeyError as e:
            raise ShapeMismatchError(f"Label {e.args[0]} is not present in the matrix") from e
        return IndexedMatrix(
            self.semiring,
            self.row_ground,
            self.col_ground,
            tuple(row_labels),
            tuple(col_labels),
            tuple(tuple(self.data[i][j] for j in cols) for i in rows),
        )

    def with_semiring(self, semiring: Semiring) -> "IndexedMatrix":
        """Reinterpret a zero-one matrix over another semiring."""
        old = self.semiring
        return IndexedMatrix(
            semiring,
            self.row_ground,
            self.col_ground,
            self.row_labels,
            self.col_labels,
            tuple(tuple(semiring.one if v == old.one else semiring.zero for v in row) for row in self.data),
        )

    def _with_data(self, data: Tuple[Tuple[Any, ...], ...]) -> "IndexedMatrix":
        return IndexedMatrix(self.semiring, self.row_ground, self.col_ground, self.row_labels, self.col_labels, data)

    def __matmul__(self, other: "IndexedMatrix") -> "IndexedMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "IndexedMatrix") -> "IndexedMatrix":
        return self.add(other)

    def format(self) -> str:
        return "\n".join(" ".join(self.semiring.format(v) for v in row) for row in self.data)


def _freeze(grid: List[List[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    return tuple(tuple(row) for row in grid)


def mat_mul(A: IndexedMatrix, B: IndexedMatrix) -> IndexedMatrix:
    """Exact sum-of-products; requires cols(A) = rows(B) as sequences."""
    if A.semiring != B.semiring:
        raise ShapeMismatchError(f"Semirings differ: {A.semiring} vs {B.semiring}")
    if A.col_labels != B.row_labels or A.col_ground != B.row_ground:
        raise ShapeMismatchError(
            f"Cannot multiply {A.shape[0]}x{A.shape[1]} by {B.shape[0]}x{B.shape[1]}: labels differ"
        )
    S = A.semiring
    width = len(B.col_labels)

    if isinstance(S, BooleanSemiring):
        bits = [sum(1 << j for j, v in enumerate(row) if v) for row in B.data]
        data = []
        for row in A.data:
            acc = 0
            for k, v in enumerate(row):
                if v:
                    acc |= bits[k]
            data.append(tuple((acc >> j) & 1 for j in range(width)))
        return IndexedMatrix(S, A.row_ground, B.col_ground, A.row_labels, B.col_labels, tuple(data))

    native = isinstance(S, (NaturalSemiring, IntegerRing, RationalField, IntegerModRing))
    columns = list(zip(*B.data)) if B.data else [() for _ in range(width)]
    data = []
    for row in A.data:
        if native:
            out = tuple(sum(a * b for a, b in zip(row, col) if a) for col in columns)
            if isinstance(S, IntegerModRing):
                out = tuple(v % S.modulus for v in out)
            elif isinstance(S, RationalField):
                out = tuple(Fraction(v) for v in out)
        else:
            out = tuple(S.sum(S.mul(a, b) for a, b in zip(row, col)) for col in columns)
        data.append(out)
    return IndexedMatrix(S, A.row_ground, B.col_ground, A.row_labels, B.col_labels, tuple(data))


def kronecker(A: IndexedMatrix, B: IndexedMatrix) -> IndexedMatrix:
    """(A (x) B)_{X u (U+m), Y u (V+n)} = A_{X,Y} B_{U,V}, built on labels.

    The rows are listed with B's label outermost, so binary-ordered inputs
    give a binary-ordered output.
    """
    if A.semiring != B.semiring:
        raise ShapeMismatchError(f"Semirings differ: {A.semiring} vs {B.semiring}")
    mul = A.semiring.mul
    m, n = A.row_ground, A.col_ground
    rows = tuple(x | (u << m) for u in B.row_labels for x in A.row_labels)
    cols = tuple(y | (v << n) for v in B.col_labels for y in A.col_labels)
    data = tuple(
        tuple(mul(a, b) for b in brow for a in arow)
        for brow in B.data
        for arow in A.data
    )
    return IndexedMatrix(A.semiring, m + B.row_ground, n + B.col_ground, rows, cols, data)


def positional_kron(semiring: Semiring, *grids: Sequence[Sequence[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    """Plain Kronecker product of entry grids, first factor most significant."""
    mul = semiring.mul

    def pair(P, Q):
        return tuple(
            tuple(mul(p, q) for p in prow for q in qrow)
            for prow in P
            for qrow in Q
        )

    return reduce(pair, grids)


def identity_grid(semiring: Semiring, size: int) -> Tuple[Tuple[Any, ...], ...]:
    return tuple(
        tuple(semiring.one if i == j else semiring.zero for j in range(size)) for i in range(size)
    )


def fraction_free_rank(rows: Sequence[Sequence[Any]]) -> int:
    """Rank over Q by Bareiss elimination on integer rows (Fractions are cleared first)."""
    work = []
    for row in rows:
        denom = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        work.append([int(Fraction(v) * denom) for v in row])
    if not work or not work[0]:
        return 0
    nrows, ncols = len(work), len(work[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank][col]
        prow = work[rank]
        for r in range(rank + 1, nrows):
            row = work[r]
            factor = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - factor * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
