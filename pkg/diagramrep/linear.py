"""Linear diagram categories twisted by delta, and the module V = span{v_X}.

Coefficients are Fractions throughout: the V+/V- projections divide by 2.
"""

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from . import diagrams, utils
from .diagrams import Family, Partition, Twisted, TwistedElement, ZeroMorphism
from .errors import DiagramError, RepresentationInapplicableError, ShapeMismatchError, SizeGuardError
from .matrices import IndexedMatrix, fraction_free_rank
from .semiring import RATIONAL, Semiring

Scalar = Union[int, Fraction]
MAX_CLOSURE_SHAPE = 4


@dataclass(frozen=True)
class LinearCombination:
    """A finite sum of diagrams of one shape with nonzero rational coefficients."""

    m: int
    n: int
    terms: Tuple[Tuple[Partition, Fraction], ...]

    @classmethod
    def from_terms(
        cls, m: int, n: int, terms: Union[Mapping[Partition, Scalar], Iterable[Tuple[Partition, Scalar]]]
    ) -> "LinearCombination":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Partition, Fraction] = {}
        for a, c in items:
            if a.shape != (m, n):
                raise ShapeMismatchError(f"Term {a} does not have shape {m}x{n}")
            acc[a] = acc.get(a, Fraction(0)) + Fraction(c)
        kept = sorted(((a, c) for a, c in acc.items() if c), key=lambda t: t[0].sort_key())
        return cls(m, n, tuple(kept))

    @classmethod
    def of(cls, a: Partition, coefficient: Scalar = 1) -> "LinearCombination":
        return cls.from_terms(a.m, a.n, [(a, coefficient)])

    @classmethod
    def zero(cls, m: int, n: int) -> "LinearCombination":
        return cls(m, n, ())

    def coefficient(self, a: Partition) -> Fraction:
        return dict(self.terms).get(a, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if (self.m, self.n) != (other.m, other.n):
            raise ShapeMismatchError(f"Cannot add {self.m}x{self.n} to {other.m}x{other.n}")
        return LinearCombination.from_terms(self.m, self.n, [*self.terms, *other.terms])

    def __neg__(self) -> "LinearCombination":
        return self.scale(-1)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def scale(self, k: Scalar) -> "LinearCombination":
        return LinearCombination.from_terms(self.m, self.n, [(a, c * k) for a, c in self.terms])

    __rmul__ = scale


def linear_compose(u: LinearCombination, v: LinearCombination, delta: Scalar = 2) -> LinearCombination:
    """Bilinear extension of a * b = delta^Phi(a,b) ab."""
    if u.n != v.m:
        raise ShapeMismatchError(f"Cannot compose {u.m}x{u.n} with {v.m}x{v.n}")
    delta = Fraction(delta)
    out = []
    for a, ca in u.terms:
        for b, cb in v.terms:
            result = diagrams.compose(a, b)
            out.append((result.product, ca * cb * delta**result.floats))
    return LinearCombination.from_terms(u.m, v.n, out)


def linear_involution(u: LinearCombination) -> LinearCombination:
    return LinearCombination.from_terms(u.n, u.m, [(diagrams.involution(a), c) for a, c in u.terms])


def linear_tensor(u: LinearCombination, v: LinearCombination) -> LinearCombination:
    return LinearCombination.from_terms(
        u.m + v.m,
        u.n + v.n,
        [(diagrams.tensor_sum(a, b), ca * cb) for a, ca in u.terms for b, cb in v.terms],
    )


def phi_linear(u: LinearCombination, semiring: Semiring = RATIONAL) -> IndexedMatrix:
    """Coefficient-weighted sum of phi over the terms, in binary order."""
    if semiring.characteristic != 0 or not semiring.supports_negation:
        raise RepresentationInapplicableError(
            f"The linear representation needs a ring of characteristic 0, got {semiring.name}"
        )
    acc: Dict[Tuple[int, int], Fraction] = {}
    for a, c in u.terms:
        for cell in a.block_unions:
            acc[cell] = acc.get(cell, Fraction(0)) + c
    rows, cols = range(1 << u.m), range(1 << u.n)
    data = tuple(
        tuple(semiring.coerce(acc.get((x, y), 0)) for y in cols) for x in rows
    )
    return IndexedMatrix(semiring, u.m, u.n, tuple(rows), tuple(cols), data)


def independence_rank(family: Family, m: int, n: int, max_size: Optional[int] = None) -> int:
    """Rank over Q of the flattened phi(a), a running over the hom-set."""
    width = 1 << n
    vectors = []
    for a in diagrams.enumerate_diagrams(family, m, n, max_size):
        row = [0] * (1 << (m + n))
        for x, y in a.block_unions:
            row[x * width + y] = 1
        vectors.append(row)
    return fraction_free_rank(vectors)


# The module V_n
@dataclass(frozen=True)
class ModuleVector:
    """sum of lambda_X v_{n,X}, stored sparsely by subset bitmask."""

    n: int
    coords: Tuple[Tuple[int, Fraction], ...]

    @classmethod
    def from_coords(cls, n: int, coords: Mapping[int, Scalar]) -> "ModuleVector":
        for X in coords:
            if X >> n:
                raise ShapeMismatchError(f"Subset {utils.format_subset(X)} is not inside [{n}]")
        return cls(n, tuple(sorted((X, Fraction(c)) for X, c in coords.items() if c)))

    @classmethod
    def basis(cls, n: int, X: int) -> "ModuleVector":
        return cls.from_coords(n, {X: 1})

    @classmethod
    def zero(cls, n: int) -> "ModuleVector":
        return cls(n, ())

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coords)

    def coordinate(self, X: int) -> Fraction:
        return self.as_dict().get(X, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.n != other.n:
            raise ShapeMismatchError(f"Cannot add vectors of V_{self.n} and V_{other.n}")
        acc = self.as_dict()
        for X, c in other.coords:
            acc[X] = acc.get(X, Fraction(0)) + c
        return ModuleVector.from_coords(self.n, acc)

    def scale(self, k: Scalar) -> "ModuleVector":
        return ModuleVector.from_coords(self.n, {X: c * k for X, c in self.coords})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def complement_image(self) -> "ModuleVector":
        """The vector with lambda_X moved to X^c."""
        return ModuleVector.from_coords(self.n, {utils.complement(X, self.n): c for X, c in self.coords})

    def is_complement_symmetric(self) -> bool:
        return self == self.complement_image()

    def is_complement_antisymmetric(self) -> bool:
        return self == self.complement_image().scale(-1)


def module_action(x: Union[Twisted, Partition], v: ModuleVector) -> ModuleVector:
    """(i, a) . v = 2^i phi(a) v."""
    if isinstance(x, Partition):
        x = TwistedElement(0, x)
    if x.n != v.n:
        raise ShapeMismatchError(f"Cannot act with a {x.m}x{x.n} element on V_{v.n}")
    if isinstance(x, ZeroMorphism):
        return ModuleVector.zero(x.m)
    scale = Fraction(2**x.twist)
    coords = v.as_dict()
    acc: Dict[int, Fraction] = {}
    for X, Y in x.diagram.block_unions:
        if Y in coords:
            acc[X] = acc.get(X, Fraction(0)) + scale * coords[Y]
    return ModuleVector.from_coords(x.m, acc)


def plus_minus_split(v: ModuleVector) -> Tuple[ModuleVector, ModuleVector]:
    """v = v+ + v- with v+ complement-symmetric and v- antisymmetric."""
    flipped = v.complement_image()
    half = Fraction(1, 2)
    return (v + flipped).scale(half), (v - flipped).scale(half)


def plus_basis(n: int) -> List[ModuleVector]:
    """v_X + v_{X^c}, one per complementary pair."""
    return [
        ModuleVector.basis(n, X) + ModuleVector.basis(n, utils.complement(X, n))
        for X in range(1 << n)
        if X <= utils.complement(X, n)
    ]


def minus_basis(n: int) -> List[ModuleVector]:
    """v_X - v_{X^c}, one per complementary pair with X < X^c."""
    return [
        ModuleVector.basis(n, X) - ModuleVector.basis(n, utils.complement(X, n))
        for X in range(1 << n)
        if X < utils.complement(X, n)
    ]


def canonical_seeds(n: int) -> Dict[str, ModuleVector]:
    """v_[n] + v_0 and v_[n] - v_0, the generators of V+ and V-."""
    top, bottom = ModuleVector.basis(n, utils.full_mask(n)), ModuleVector.basis(n, 0)
    return {"plus": top + bottom, "minus": top - bottom}


class RationalSubspace:
    """An echelon basis over Q; each basis vector has a distinct smallest support index."""

    def __init__(self, n: int):
        self.n = n
        self._rows: Dict[int, Dict[int, Fraction]] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        work = {X: Fraction(c) for X, c in vector.items() if c}
        for pivot in sorted(self._rows):
            c = work.get(pivot)
            if not c:
                continue
            for X, b in self._rows[pivot].items():
                value = work.get(X, Fraction(0)) - c * b
                if value:
                    work[X] = value
                else:
                    work.pop(X, None)
        return work

    def contains(self, v: ModuleVector) -> bool:
        return not self._reduce(v.as_dict())

    def add(self, v: ModuleVector) -> bool:
        """Extend the span by v; True when the dimension grew."""
        rest = self._reduce(v.as_dict())
        if not rest:
            return False
        pivot = min(rest)
        lead = rest[pivot]
        self._rows[pivot] = {X: c / lead for X, c in rest.items()}
        return True

    def basis(self) -> List[ModuleVector]:
        return [ModuleVector.from_coords(self.n, row) for _, row in sorted(self._rows.items())]

    def contains_all(self, vectors: Iterable[ModuleVector]) -> bool:
        return all(self.contains(v) for v in vectors)


def submodule_closure(
    seed: ModuleVector,
    max_m: int = 3,
    monoid: bool = False,
    family: Family = Family.PARTITION,
) -> Dict[int, RationalSubspace]:
    """The span of everything reachable from `seed` under (0, a), shapes <= max_m.

    With `monoid` only the endomorphisms a in P_n act, so the result lives in
    V_n alone.
    """
    if max_m > MAX_CLOSURE_SHAPE:
        raise SizeGuardError(f"Closure is limited to shapes <= {MAX_CLOSURE_SHAPE}, got {max_m}")
    if seed.n > max_m:
        raise ShapeMismatchError(f"Seed lives in V_{seed.n}, beyond max_m={max_m}")
    shapes = [seed.n] if monoid else list(range(max_m + 1))
    spaces = {k: RationalSubspace(k) for k in shapes}
    queue = deque()
    if spaces[seed.n].add(seed):
        queue.append(seed)
    while queue and not all(s.dimension == 1 << k for k, s in spaces.items()):
        w = queue.popleft()
        for j in shapes:
            if spaces[j].dimension == 1 << j:
                continue
            for a in diagrams.enumerate_diagrams(family, j, w.n):
                out = module_action(a, w)
                if not out.is_zero() and spaces[j].add(out):
                    queue.append(out)
    return spaces


def closure_contains_slice(spaces: Mapping[int, RationalSubspace], sign: str) -> bool:
    """Whether every computed shape of the closure contains V+ (or V-) there."""
    pick = plus_basis if sign == "plus" else minus_basis
    return all(space.contains_all(pick(n)) for n, space in spaces.items())


def random_nonzero_vector(n: int, rng: random.Random) -> ModuleVector:
    while True:
        v = ModuleVector.from_coords(n, {X: rng.randint(-3, 3) for X in range(1 << n)})
        if not v.is_zero():
            return v


def decomposition_witnesses(n: int, Y: int) -> Dict[str, Partition]:
    """Four partitions of P_n, for a proper nonempty Y, acting alike on one summand.

    a and b agree on V+, c and d agree on V-.
    """
    full = utils.full_mask(n)
    if not 0 < Y < full:
        raise DiagramError(f"Y must be a proper nonempty subset of [{n}]")
    Yc = utils.complement(Y, n)
    y, yc = utils.members(Y), utils.members(Yc)
    make = diagrams.Partition.from_blocks
    return {
        "a": make(n, n, [y + [-i for i in y], yc, [-i for i in yc]]),
        "b": make(n, n, [y + [-i for i in yc], yc, [-i for i in y]]),
        "c": make(n, n, [y, yc, [-i for i in y], [-i for i in yc]]),
        "d": make(n, n, [y, yc, [-i for i in range(1, n + 1)]]),
    }


def act_alike(x: Union[Twisted, Partition], y: Union[Twisted, Partition], vectors: Iterable[ModuleVector]) -> bool:
    return all(module_action(x, v) == module_action(y, v) for v in vectors)


def cap_linear(m: int, n: int) -> LinearCombination:
    return LinearCombination.of(diagrams.cap_element(m, n))
