"""Brute-force oracles and the verification suites.

Every suite returns a `VerificationReport`; nothing here prints. Random
sampling always goes through a `random.Random(seed)` so a report can be
reproduced from its recorded seed, and counterexamples are written in the
diagram text format so they can be replayed with `diagramrep compose`.
"""

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import diagrams, linear, rep, utils
from .config import Settings
from .diagrams import (
    Family,
    GeneratorKind,
    GeneratorSpec,
    Partition,
    TwistedElement,
    ZeroMorphism,
)
from .errors import RepresentationInapplicableError, ShapeMismatchError, SizeGuardError
from .formats import parse_partition as parse
from .matrices import IndexedMatrix, OrderKind, even_gap_subsets, kronecker, odd_subsets
from .semiring import BOOLEAN, INTEGER, RATIONAL, TROPICAL, Semiring, get_semiring, integer_mod, semiring_laws_check

MIDDLE_ROW_GUARD = 24
MAX_RECORDED_FAILURES = 25
DEFAULT_RANDOM_CASES = 10**4


# Reports
@dataclass
class Failure:
    case: int
    message: str
    counterexample: str = ""


@dataclass
class VerificationReport:
    suite: str
    seed: int = 0
    cases: int = 0
    failure_count: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time: float = 0.0
    inapplicable: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.inapplicable:
            return "inapplicable"
        return "fail" if self.failure_count else "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def check(self, ok: bool, message: str, counterexample: Any = "") -> bool:
        """Count one case and record it as a failure when `ok` is false."""
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(Failure(self.cases, message, str(counterexample)))
        return ok

    def absorb(self, other: "VerificationReport") -> None:
        """Fold a sub-report into this one, prefixing its messages."""
        offset = self.cases
        self.cases += other.cases
        self.failure_count += other.failure_count
        for f in other.failures:
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(Failure(offset + f.case, f"{other.suite}: {f.message}", f.counterexample))
        self.notes += [f"{other.suite}: {n}" for n in other.notes]
        if other.inapplicable and not self.inapplicable:
            self.inapplicable = other.inapplicable

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["status"] = self.status
        return out


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self) -> VerificationReport:
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.wall_time += time.perf_counter() - self.start


def _mask_text(mask: int) -> str:
    return utils.format_subset(mask)


# Intertwining sets
@dataclass(frozen=True)
class IntertwineQuery:
    a: Partition
    b: Partition
    X: int
    Y: int

    def __post_init__(self):
        if self.a.n != self.b.m:
            raise ShapeMismatchError(f"Cannot compose {self.a.m}x{self.a.n} with {self.b.m}x{self.b.n}")
        if self.X >> self.a.m or self.Y >> self.b.n:
            raise ShapeMismatchError("X must lie in [m] and Y in [t]")

    def __str__(self) -> str:
        return f"a={self.a} b={self.b} X={_mask_text(self.X)} Y={_mask_text(self.Y)}"


def intertwining_sets(q: IntertwineQuery, guard: int = MIDDLE_ROW_GUARD) -> List[int]:
    """Every Z with X u Z' a union of a-blocks and Z u Y' a union of b-blocks."""
    n = q.a.n
    if n > guard:
        raise SizeGuardError(f"Middle row of size {n} exceeds the scan guard {guard}")
    return [
        Z
        for Z in range(1 << n)
        if q.a.is_union_of_blocks(q.X, Z) and q.b.is_union_of_blocks(Z, q.Y)
    ]


def z_zero(a: Partition, b: Partition, X: int, Y: int) -> int:
    """The union of the classes of coker(a) v ker(b) that meet Xa u bY."""
    q = IntertwineQuery(a, b, X, Y)
    n = q.a.n
    ds = utils.DisjointSet(n)
    for _, lower in a.block_masks:
        ds.union_chain([j - 1 for j in utils.members(lower)])
    for upper, _ in b.block_masks:
        ds.union_chain([j - 1 for j in utils.members(upper)])
    seeds = rep.image(a, X) | rep.preimage(b, Y)
    roots = {ds.find(j - 1) for j in utils.members(seeds)}
    return utils.mask_of(j + 1 for j in range(n) if ds.find(j) in roots)


def check_count_formula(
    pairs: Iterable[Tuple[Partition, Partition]], suite: str = "count-formula"
) -> VerificationReport:
    """|intertwining sets| = 2^Phi or 0, and they are exactly Z0 u (unions of floats)."""
    report = VerificationReport(suite)
    with _Timer(report):
        for a, b in pairs:
            out = diagrams.compose(a, b)
            floats = diagrams.floating_components(a, b)
            float_unions = sorted({reduce_or(c) for c in _subsets(floats)})
            for X in range(1 << a.m):
                for Y in range(1 << b.n):
                    q = IntertwineQuery(a, b, X, Y)
                    sets = intertwining_sets(q)
                    joined = out.product.is_union_of_blocks(X, Y)
                    expected = (1 << out.floats) if joined else 0
                    if not report.check(len(sets) == expected, f"{len(sets)} sets, expected {expected}", q):
                        continue
                    if not sets:
                        continue
                    z0 = z_zero(a, b, X, Y)
                    report.check(
                        z0 in sets and all(z0 & ~Z == 0 for Z in sets),
                        "Z0 is not the least intertwining set",
                        q,
                    )
                    report.check(
                        sets == sorted(z0 | f for f in float_unions),
                        "intertwining sets differ from Z0 u floats",
                        q,
                    )
    return report


def _subsets(items: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    return itertools.chain.from_iterable(
        itertools.combinations(items, k) for k in range(len(items) + 1)
    )


def reduce_or(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def check_lemma_ones(m: int = 2, n: int = 3) -> VerificationReport:
    """Three descriptions of phi(a)_{X,Y} = 1 agree on every a in P_{m,n}."""
    report = VerificationReport("ones")
    with _Timer(report):
        for a in diagrams.enumerate_diagrams(Family.PARTITION, m, n):
            uppers = [u for u, l in a.block_masks if u]
            lowers = [l for u, l in a.block_masks if l]
            upper_only = reduce_or(u for u, l in a.block_masks if not l)
            lower_only = reduce_or(l for u, l in a.block_masks if not u)
            for X in range(1 << m):
                for Y in range(1 << n):
                    first = a.is_union_of_blocks(X, Y)
                    Xa, aY = rep.image(a, X), rep.preimage(a, Y)
                    P, Q = Y & ~Xa, X & ~aY
                    second = (
                        all(X & u in (0, u) for u in uppers)
                        and Xa & ~Y == 0
                        and P & ~lower_only == 0
                        and all(P & l in (0, l) for u, l in a.block_masks if not u)
                    )
                    third = (
                        all(Y & low in (0, low) for low in lowers)
                        and aY & ~X == 0
                        and Q & ~upper_only == 0
                        and all(Q & u in (0, u) for u, l in a.block_masks if not l)
                    )
                    report.check(
                        first == second == third,
                        f"descriptions disagree ({first}, {second}, {third})",
                        f"a={a} X={_mask_text(X)} Y={_mask_text(Y)}",
                    )
    return report


# Representations under test
class Rep(str, Enum):
    PHI = "phi"
    ODD = "odd"
    EVEN = "even"
    MU = "mu"
    MU_EVEN = "mu_even"
    RHO = "rho"
    RHO_D = "rho_d"
    RHO_ODD = "rho_odd"
    RHO_EVEN = "rho_even"

    @property
    def twisted(self) -> bool:
        return self in (Rep.RHO, Rep.RHO_D, Rep.RHO_ODD, Rep.RHO_EVEN)

    @property
    def tensorial(self) -> bool:
        return self in (Rep.PHI, Rep.RHO, Rep.RHO_D)


def _rep_map(kind: Rep, semiring: Semiring, d: Optional[int]) -> Callable[[Any], IndexedMatrix]:
    if kind is Rep.PHI:
        return lambda a: rep.phi(a, semiring)
    if kind is Rep.ODD:
        return lambda a: rep.reduced(a, rep.ODD, semiring)
    if kind is Rep.EVEN:
        return lambda a: rep.reduced(a, rep.EVEN, semiring)
    if kind is Rep.MU:
        return lambda a: rep.mu(a, semiring)
    if kind is Rep.MU_EVEN:
        return lambda a: rep.mu_even(a, semiring)
    if kind is Rep.RHO:
        return lambda x: rep.rho(x, semiring)
    if kind is Rep.RHO_D:
        return lambda x: rep.rho_d(x, d, semiring)
    if kind is Rep.RHO_ODD:
        return lambda x: rep.rho_reduced(x, rep.ODD, semiring, d)
    return lambda x: rep.rho_reduced(x, rep.EVEN, semiring, d)


def _hypothesis_note(kind: Rep, semiring: Semiring) -> Optional[str]:
    if not kind.twisted and not semiring.is_idempotent:
        return f"{semiring.name} is not idempotent; the morphism property is not expected to hold"
    return None


class _Algebra:
    """Composition, involution and tensor for plain or twisted elements."""

    def __init__(self, family: Family, twisted: bool, d: Optional[int], max_twist: int):
        self.family, self.twisted, self.d, self.max_twist = family, twisted, d, max_twist

    def elements(self, m: int, n: int) -> List[Any]:
        if self.twisted:
            return diagrams.enumerate_twisted(self.family, m, n, self.max_twist, self.d)
        return list(diagrams.enumerate_diagrams(self.family, m, n))

    def compose(self, x: Any, y: Any) -> Any:
        if self.twisted:
            return diagrams.twisted_compose(x, y, self.d)
        return diagrams.compose(x, y).product

    def involution(self, x: Any) -> Any:
        return diagrams.twisted_involution(x) if self.twisted else diagrams.involution(x)

    def tensor(self, x: Any, y: Any) -> Any:
        return diagrams.twisted_tensor(x, y, self.d) if self.twisted else diagrams.tensor_sum(x, y)

    def identity(self, n: int) -> Any:
        ident = Partition.identity(n)
        return TwistedElement(0, ident) if self.twisted else ident

    def random(self, m: int, n: int, rng: random.Random) -> Any:
        a = diagrams.random_diagram(self.family, m, n, rng)
        if not self.twisted:
            return a
        top = self.max_twist if self.d is None else min(self.max_twist, self.d)
        return TwistedElement(rng.randint(0, top), a)


def _identity_like(M: IndexedMatrix) -> IndexedMatrix:
    return IndexedMatrix.identity(M.semiring, M.row_ground, M.row_labels)


def check_homomorphism(
    kind: Rep,
    family: Family,
    sizes: Sequence[int],
    semiring: Semiring,
    random_cases: int = 0,
    random_sizes: Optional[Sequence[int]] = None,
    seed: int = 0,
    d: Optional[int] = None,
    max_twist: int = 0,
    exhaustive: bool = True,
    tensor_sizes: Optional[Sequence[int]] = None,
) -> VerificationReport:
    """rep(xy) = rep(x)rep(y), rep(x*) = rep(x)^T, rep(id) = I and, for tensor
    representations, rep(x (+) y) = rep(x) (x) rep(y).

    Runs even when the semiring misses the theorem's hypothesis (the report
    then carries a note and is expected to fail); representations that refuse
    the semiring outright make the report inapplicable.
    """
    kind, family = Rep(kind), Family(family)
    report = VerificationReport(f"{kind.value}/{family.value}/{semiring.name}", seed=seed)
    note = _hypothesis_note(kind, semiring)
    if note:
        report.notes.append(note)
    rmap = _rep_map(kind, semiring, d)
    alg = _Algebra(family, kind.twisted, d, max_twist)
    cache: Dict[Any, IndexedMatrix] = {}

    def image(x: Any) -> IndexedMatrix:
        if x not in cache:
            cache[x] = rmap(x)
        return cache[x]

    with _Timer(report):
        try:
            image(alg.identity(sizes[0]))
        except RepresentationInapplicableError as e:
            report.inapplicable = str(e)
            return report

        homs = {(m, n): alg.elements(m, n) for m in sizes for n in sizes}
        for n in sizes:
            ident = image(alg.identity(n))
            report.check(ident == _identity_like(ident), "identity is not sent to I", alg.identity(n))
        for (m, n), xs in homs.items():
            for x in xs:
                report.check(
                    image(alg.involution(x)) == image(x).transpose(), "involution is not transpose", x
                )
        if exhaustive:
            for m, n, t in itertools.product(sizes, repeat=3):
                for x in homs[(m, n)]:
                    for y in homs[(n, t)]:
                        report.check(
                            image(alg.compose(x, y)) == image(x) @ image(y),
                            "rep(xy) != rep(x) rep(y)",
                            f"{x} ; {y}",
                        )
        if kind.tensorial:
            tsizes = list(tensor_sizes if tensor_sizes is not None else sizes)
            elements = [x for (m, n), xs in homs.items() if m in tsizes and n in tsizes for x in xs]
            for x in elements:
                for y in elements:
                    report.check(
                        image(alg.tensor(x, y)) == kronecker(image(x), image(y)),
                        "rep(x + y) != rep(x) (x) rep(y)",
                        f"{x} ; {y}",
                    )
        if random_cases:
            rng = random.Random(seed)
            pool = list(random_sizes or sizes)
            for _ in range(random_cases):
                m = rng.choice(pool)
                same = [k for k in pool if family is Family.PARTITION or k % 2 == m % 2]
                n, t = rng.choice(same), rng.choice(same)
                x, y = alg.random(m, n, rng), alg.random(n, t, rng)
                report.check(
                    rmap(alg.compose(x, y)) == rmap(x) @ rmap(y),
                    "rep(xy) != rep(x) rep(y)",
                    f"{x} ; {y}",
                )
    return report


def _predicted_kernel(kind: Rep) -> Optional[Callable[[Partition, Partition], bool]]:
    if kind is Rep.ODD:
        return lambda a, b: diagrams.statistics(a).rank == 0 == diagrams.statistics(b).rank
    if kind is Rep.EVEN:

        def same_class(a: Partition, b: Partition) -> bool:
            sa, sb = diagrams.statistics(a), diagrams.statistics(b)
            return sa.rank == sb.rank == 2 and sa.ker == sb.ker and sa.coker == sb.coker

        return same_class
    return None


def check_faithful(
    kind: Rep,
    family: Family,
    m: int,
    n: int,
    semiring: Semiring = BOOLEAN,
    kernel: bool = False,
    d: Optional[int] = None,
    max_twist: int = 0,
    max_size: Optional[int] = None,
) -> VerificationReport:
    """Images are pairwise distinct or, in kernel mode, collide exactly as predicted."""
    kind, family = Rep(kind), Family(family)
    mode = "kernel" if kernel else "injective"
    report = VerificationReport(f"{kind.value}/{family.value}_{m},{n}/{mode}")
    rmap = _rep_map(kind, semiring, d)
    with _Timer(report):
        if kind.twisted:
            elements: List[Any] = diagrams.enumerate_twisted(family, m, n, max_twist, d, max_size)
        else:
            elements = list(diagrams.enumerate_diagrams(family, m, n, max_size))
        try:
            images = [rmap(x) for x in elements]
        except RepresentationInapplicableError as e:
            report.inapplicable = str(e)
            return report
        groups: Dict[IndexedMatrix, List[int]] = {}
        for i, M in enumerate(images):
            groups.setdefault(M, []).append(i)
        identified = {
            (i, j) for members in groups.values() for i, j in itertools.combinations(members, 2)
        }
        if not kernel:
            for i, x in enumerate(elements):
                clash = [j for j in groups[images[i]] if j != i]
                report.check(not clash, "image shared with another element", f"{x} ~ {elements[clash[0]]}" if clash else x)
            return report
        predictor = _predicted_kernel(kind) or (lambda a, b: False)
        for i, j in itertools.combinations(range(len(elements)), 2):
            predicted = predictor(elements[i], elements[j])
            report.check(
                ((i, j) in identified) == predicted,
                "expected to be identified" if predicted else "identified unexpectedly",
                f"{elements[i]} ~ {elements[j]}",
            )
        report.notes.append(f"{len(identified)} identified pairs")
    return report


def orbits(family: Family, n: int) -> List[List[int]]:
    """Classes of subsets of [n] linked by the relations phi(a), a in the monoid."""
    if n > 4:
        raise SizeGuardError(f"Orbit computation is limited to n <= 4, got {n}")
    ds = utils.DisjointSet(1 << n)
    for a in diagrams.enumerate_diagrams(family, n, n):
        for X, Y in a.block_unions:
            ds.union(X, Y)
    return sorted(ds.groups().values())


def check_orbits(family: Family, n: int) -> VerificationReport:
    """One transitive orbit for P_n; the odd and even subsets for B_n."""
    family = Family(family)
    report = VerificationReport(f"orbits/{family.value}_{n}")
    with _Timer(report):
        found = orbits(family, n)
        everything = list(range(1 << n))
        if family is Family.PARTITION or n == 0:
            expected = [everything]
        else:
            expected = sorted(
                [[x for x in everything if not x.bit_count() % 2], [x for x in everything if x.bit_count() % 2]]
            )
        report.check(found == expected, f"orbits {found}, expected {expected}", f"{family.value}_{n}")
        related = {cell for a in diagrams.enumerate_diagrams(family, n, n) for cell in a.block_unions}
        for orbit in expected:
            for X in orbit:
                for Y in orbit:
                    report.check((X, Y) in related, "pair inside an orbit is not related", f"{_mask_text(X)} -> {_mask_text(Y)}")
    return report


# Exhaustive triple checks
class CompositionTable:
    """Products and float counts of every composable pair with row sizes <= max_size.

    Diagrams are referred to by their position in the canonical enumeration of
    their hom-set; `product[(m, n, t)][i, j]` is the position of a_i b_j in
    the (m, t) hom-set and `floats[(m, n, t)][i, j]` its float count.
    """

    def __init__(self, family: Family, max_size: int):
        self.family, self.max_size = family, max_size
        sizes = range(max_size + 1)
        self.homs = {(m, n): diagrams.enumerate_diagrams(family, m, n) for m in sizes for n in sizes}
        index = {shape: {a: i for i, a in enumerate(hom)} for shape, hom in self.homs.items()}
        self.product: Dict[Tuple[int, int, int], np.ndarray] = {}
        self.floats: Dict[Tuple[int, int, int], np.ndarray] = {}
        for m, n, t in itertools.product(sizes, repeat=3):
            left, right = self.homs[(m, n)], self.homs[(n, t)]
            prod = np.zeros((len(left), len(right)), dtype=np.int64)
            fl = np.zeros((len(left), len(right)), dtype=np.int64)
            target = index[(m, t)]
            for i, a in enumerate(left):
                for j, b in enumerate(right):
                    out = diagrams.compose(a, b)
                    prod[i, j] = target[out.product]
                    fl[i, j] = out.floats
            self.product[(m, n, t)] = prod
            self.floats[(m, n, t)] = fl

    def shapes(self) -> Iterable[Tuple[int, int, int, int]]:
        return itertools.product(range(self.max_size + 1), repeat=4)

    def twisting_violations(self, m: int, n: int, t: int, s: int) -> Iterable[Tuple[int, int, int]]:
        """(i, j, k) with Phi(a,b) + Phi(ab,c) != Phi(a,bc) + Phi(b,c)."""
        ab, f_ab = self.product[(m, n, t)], self.floats[(m, n, t)]
        bc, f_bc = self.product[(n, t, s)], self.floats[(n, t, s)]
        f_ab_c, f_a_bc = self.floats[(m, t, s)], self.floats[(m, n, s)]
        for i in range(ab.shape[0]):
            lhs = f_ab[i][:, None] + f_ab_c[ab[i]]
            rhs = f_a_bc[i][bc] + f_bc
            for j, k in np.argwhere(lhs != rhs):
                yield i, int(j), int(k)

    def associativity_violations(self, m: int, n: int, t: int, s: int) -> Iterable[Tuple[int, int, int]]:
        """(i, j, k) with (ab)c != a(bc)."""
        ab, bc = self.product[(m, n, t)], self.product[(n, t, s)]
        ab_c, a_bc = self.product[(m, t, s)], self.product[(m, n, s)]
        for i in range(ab.shape[0]):
            for j, k in np.argwhere(ab_c[ab[i]] != a_bc[i][bc]):
                yield i, int(j), int(k)

    def triple(self, m: int, n: int, t: int, s: int, i: int, j: int, k: int) -> str:
        return f"{self.homs[(m, n)][i]} ; {self.homs[(n, t)][j]} ; {self.homs[(t, s)][k]}"

    def triple_count(self, m: int, n: int, t: int, s: int) -> int:
        return len(self.homs[(m, n)]) * len(self.homs[(n, t)]) * len(self.homs[(t, s)])


_TABLES: Dict[Tuple[Family, int], CompositionTable] = {}


def composition_table(family: Family, max_size: int) -> CompositionTable:
    key = (Family(family), max_size)
    if key not in _TABLES:
        _TABLES[key] = CompositionTable(*key)
    return _TABLES[key]


def _random_triples(
    family: Family, count: int, max_size: int, rng: random.Random
) -> Iterable[Tuple[Partition, Partition, Partition]]:
    for _ in range(count):
        m = rng.randint(0, max_size)
        pool = [k for k in range(max_size + 1) if family is Family.PARTITION or k % 2 == m % 2]
        n, t, s = (rng.choice(pool) for _ in range(3))
        yield (
            diagrams.random_diagram(family, m, n, rng),
            diagrams.random_diagram(family, n, t, rng),
            diagrams.random_diagram(family, t, s, rng),
        )


def _triple_check(
    suite: str,
    table_check: str,
    direct: Callable[[Partition, Partition, Partition], bool],
    message: str,
    max_exhaustive: int,
    random_cases: int,
    random_max_size: int,
    seed: int,
    family: Family,
) -> VerificationReport:
    report = VerificationReport(suite, seed=seed)
    with _Timer(report):
        table = composition_table(family, max_exhaustive)
        for shape in table.shapes():
            bad = list(getattr(table, table_check)(*shape))
            total = table.triple_count(*shape)
            report.cases += total - len(bad)
            for ijk in bad:
                report.check(False, message, table.triple(*shape, *ijk))
        rng = random.Random(seed)
        for a, b, c in _random_triples(family, random_cases, random_max_size, rng):
            report.check(direct(a, b, c), message, f"{a} ; {b} ; {c}")
    return report


def _twisting_holds(a: Partition, b: Partition, c: Partition) -> bool:
    ab, bc = diagrams.compose(a, b), diagrams.compose(b, c)
    return ab.floats + diagrams.compose(ab.product, c).floats == diagrams.compose(a, bc.product).floats + bc.floats


def _associative(a: Partition, b: Partition, c: Partition) -> bool:
    ab, bc = diagrams.compose(a, b), diagrams.compose(b, c)
    return diagrams.compose(ab.product, c).product == diagrams.compose(a, bc.product).product


def check_twisting_identity(
    max_exhaustive: int = 3,
    random_cases: int = DEFAULT_RANDOM_CASES,
    random_max_size: int = 5,
    seed: int = 0,
    family: Family = Family.PARTITION,
) -> VerificationReport:
    """Phi(a,b) + Phi(ab,c) = Phi(a,bc) + Phi(b,c)."""
    return _triple_check(
        "twisting", "twisting_violations", _twisting_holds, "twisting identity fails",
        max_exhaustive, random_cases, random_max_size, seed, family,
    )


def check_associativity(
    max_exhaustive: int = 3,
    random_cases: int = DEFAULT_RANDOM_CASES,
    random_max_size: int = 5,
    seed: int = 0,
    family: Family = Family.PARTITION,
) -> VerificationReport:
    return _triple_check(
        "associativity", "associativity_violations", _associative, "(ab)c != a(bc)",
        max_exhaustive, random_cases, random_max_size, seed, family,
    )


def _hom_elements(family: Family, sizes: Sequence[int]) -> Dict[Tuple[int, int], Sequence[Partition]]:
    return {(m, n): diagrams.enumerate_diagrams(family, m, n) for m in sizes for n in sizes}


def check_laws(max_size: int = 2, regular_max: int = 3, interchange_max: Optional[int] = None) -> VerificationReport:
    """Involution laws, the interchange law and a = a a* a."""
    report = VerificationReport("laws")
    interchange_max = max_size if interchange_max is None else interchange_max
    with _Timer(report):
        sizes = range(max_size + 1)
        homs = _hom_elements(Family.PARTITION, sizes)
        inv, comp, tensor = diagrams.involution, diagrams.compose, diagrams.tensor_sum
        for n in sizes:
            report.check(inv(Partition.identity(n)) == Partition.identity(n), "id* != id", n)
        for (m, n), xs in homs.items():
            for a in xs:
                report.check(inv(inv(a)) == a, "a** != a", a)
        for m, n, t in itertools.product(sizes, repeat=3):
            for a in homs[(m, n)]:
                for b in homs[(n, t)]:
                    out = comp(a, b)
                    back = comp(inv(b), inv(a))
                    report.check(
                        inv(out.product) == back.product and out.floats == back.floats,
                        "(ab)* != b*a*",
                        f"{a} ; {b}",
                    )
        flat = [a for xs in homs.values() for a in xs]
        for a in flat:
            for b in flat:
                report.check(inv(tensor(a, b)) == tensor(inv(a), inv(b)), "(a+b)* != a*+b*", f"{a} ; {b}")

        small = [k for k in sizes if k <= interchange_max]
        pairs = [
            (a, b)
            for m, n, t in itertools.product(small, repeat=3)
            for a in homs[(m, n)]
            for b in homs[(n, t)]
        ]
        for a, b in pairs:
            ab = comp(a, b)
            for c, d in pairs:
                cd = comp(c, d)
                lhs = tensor(ab.product, cd.product)
                rhs = comp(tensor(a, c), tensor(b, d))
                report.check(
                    lhs == rhs.product and ab.floats + cd.floats == rhs.floats,
                    "interchange law fails",
                    f"{a} ; {b} ; {c} ; {d}",
                )

        for m in range(regular_max + 1):
            for n in range(regular_max + 1):
                for a in diagrams.enumerate_diagrams(Family.PARTITION, m, n):
                    aa = comp(a, inv(a)).product
                    report.check(comp(aa, a).product == a, "a != a a* a", a)
    return report


def check_semiring_laws(samples: int = DEFAULT_RANDOM_CASES, seed: int = 0) -> VerificationReport:
    report = VerificationReport("semiring-laws", seed=seed)
    with _Timer(report):
        for S in (BOOLEAN, get_semiring("nat"), INTEGER, RATIONAL, TROPICAL, integer_mod(4), integer_mod(8)):
            laws = semiring_laws_check(S, samples, seed)
            report.cases += laws.cases
            for v in laws.violations:
                report.check(False, v, S.name)
    return report


def check_enumeration(max_total: int = 10, materialize_up_to: int = 8) -> VerificationReport:
    """Hom-set sizes against Bell, double factorial and Catalan numbers.

    Partition hom-sets above `materialize_up_to` are counted from the raw
    generator so the cache stays small.
    """
    report = VerificationReport("enumeration")
    with _Timer(report):
        for total in range(max_total + 1):
            for m in range(total + 1):
                n = total - m
                expected = {
                    Family.PARTITION: utils.bell(total),
                    Family.BRAUER: utils.double_factorial_matchings(total),
                    Family.TEMPERLEY_LIEB: utils.catalan(total // 2) if total % 2 == 0 else 0,
                }
                for family, count in expected.items():
                    if family is Family.PARTITION and total > materialize_up_to:
                        found = sum(1 for _ in diagrams._set_partitions(diagrams._row_vertices(m, n)))
                        report.check(found == count, f"{found} partitions, expected {count}", f"{m},{n}")
                        continue
                    hom = diagrams.enumerate_diagrams(family, m, n)
                    report.check(len(hom) == count, f"{len(hom)} {family.label} diagrams, expected {count}", f"{m},{n}")
                    report.check(len(set(hom)) == len(hom), "duplicates in enumeration", f"{m},{n}")
                    report.check(
                        all(diagrams.in_family(a, family) for a in hom), "diagram outside its family", f"{m},{n}"
                    )
                    if family is Family.TEMPERLEY_LIEB:
                        for a in hom:
                            violated = diagrams.parity_clauses(a)
                            report.check(not violated, f"parity clauses fail: {violated}", a)
        for n in range(21):
            report.check(len(even_gap_subsets(n)) == utils.fibonacci(n), "even-gap count is not f_n", n)
        for n, listed in EVEN_GAP_EXAMPLES.items():
            found = [utils.members(x) for x in even_gap_subsets(n)]
            report.check(sorted(found) == sorted(listed), f"even-gap subsets of [{n}] differ", found)
    return report


EVEN_GAP_EXAMPLES = {
    4: [[], [1, 2], [1, 4], [3, 4], [1, 2, 3, 4]],
    5: [[1], [3], [5], [1, 2, 3], [1, 2, 5], [1, 4, 5], [3, 4, 5], [1, 2, 3, 4, 5]],
}


def check_order_correspondence(shapes: Sequence[Tuple[int, int]] = ((2, 2), (2, 3))) -> VerificationReport:
    """a refines b exactly when phi(a) >= phi(b) entrywise."""
    report = VerificationReport("order")
    with _Timer(report):
        for m, n in shapes:
            hom = diagrams.enumerate_diagrams(Family.PARTITION, m, n)
            images = {a: rep.phi(a) for a in hom}
            for a in hom:
                for b in hom:
                    report.check(
                        diagrams.refines(a, b) == images[b].leq(images[a]),
                        "refinement and matrix order disagree",
                        f"{a} ; {b}",
                    )
    return report


# Fixtures shared by the suites and the tests
FIGURE_A = "4,6:{1,4}{2,3,4',5'}{1',2',6'}{3'}"
FIGURE_B = "6,5:{1,2}{3,4,1'}{5,4',5'}{6}{2',3'}"
FIGURE_AB = "4,5:{1,4}{2,3,1',4',5'}{2',3'}"
FIGURE_A_STAR = "6,4:{1,2,6}{3}{4,5,2',3'}{1',4'}"

P2_EXAMPLES = {
    "a": ("2,2:{1,2,1'}{2'}", ["1010", "0000", "0000", "0101"]),
    "b": ("2,2:{1,2,2'}{1'}", ["1100", "0000", "0000", "0011"]),
    "c": ("2,2:{1}{2}{1',2'}", ["1001", "1001", "1001", "1001"]),
}
P2_SUM = [[3, 1, 1, 1], [1, 0, 0, 1], [1, 0, 0, 1], [1, 1, 1, 3]]

B3_A = ["3,3:{3,1'}{1,2}{2',3'}", "3,3:{2,2'}{1,3}{1',3'}", "3,3:{1,3'}{2,1'}{3,2'}"]
B3_B = ["3,3:{3,2'}{1,2}{1',3'}", "3,3:{2,1'}{1,3}{2',3'}", "3,3:{1,3'}{2,2'}{3,1'}"]
B3_ORDER = (0, 1, 2, 4, 3, 5, 6, 7)
B3_SUM = [
    "30000110",
    "00010000",
    "01100001",
    "01100001",
    "10000110",
    "10000110",
    "00001000",
    "01100003",
]

TL4_ORDER = (0, 9, 15, 3, 12)
TL4_A = ("4,4:{1,4}{2,3}{1',4'}{2',3'}", ["11100", "11100", "11100", "00000", "00000"])
TL4_B = ("4,4:{1,1'}{4,4'}{2,3}{2',3'}", ["10000", "01100", "01100", "00000", "00000"])


def _grid(rows: Sequence[Any]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(ch) for ch in row) if isinstance(row, str) else tuple(row) for row in rows)


def check_figure1() -> VerificationReport:
    report = VerificationReport("figure1")
    with _Timer(report):
        a, b = parse(FIGURE_A), parse(FIGURE_B)
        out = diagrams.compose(a, b)
        report.check(out.product == parse(FIGURE_AB), f"ab = {out.product}", f"{a} ; {b}")
        report.check(out.floats == 1, f"Phi(a,b) = {out.floats}, expected 1", f"{a} ; {b}")
        report.check(diagrams.involution(a) == parse(FIGURE_A_STAR), "a* differs", a)
        stats = diagrams.statistics(a)
        report.check(
            (stats.rank, stats.dom, stats.codom) == (1, 0b0110, 0b011000),
            "rank/dom/codom differ",
            a,
        )
        q = IntertwineQuery(a, b, 0b1111, utils.mask_of([1, 4, 5]))
        report.check(
            intertwining_sets(q) == [utils.mask_of([3, 4, 5]), utils.full_mask(6)],
            "intertwining sets differ",
            q,
        )
        report.check(z_zero(a, b, q.X, q.Y) == utils.mask_of([3, 4, 5]), "Z0 differs", q)
        report.check(rep.phi(a) @ rep.phi(b) == rep.phi(out.product), "phi(a)phi(b) != phi(ab)", q)
        report.check(
            rep.phi(a, INTEGER) @ rep.phi(b, INTEGER) == rep.phi(out.product, INTEGER).scale(2),
            "over Z, phi(a)phi(b) != 2 phi(ab)",
            q,
        )
        left = parse("4,3:{1,2,1',3'}{3,4}{2'}")
        right = parse("4,6:{1,2,3,4,4',5',6'}{1',2'}{3'}")
        report.check(
            diagrams.tensor_sum(left, right) == parse("8,9:{1,2,1',3'}{3,4}{2'}{5,6,7,8,7',8',9'}{4',5'}{6'}"),
            "tensor example differs",
            f"{left} ; {right}",
        )
        planar = parse("10,8:{1,3'}{8,8'}{3,4}{5,6}{9,10}{2,7}{1',2'}{5',6'}{4',7'}")
        crossing = parse("10,8:{2,3'}{8,8'}{3,4}{5,6}{9,10}{1,7}{1',2'}{5',6'}{4',7'}")
        report.check(diagrams.classify(planar) is Family.TEMPERLEY_LIEB, "expected temperley_lieb", planar)
        report.check(diagrams.classify(crossing) is Family.BRAUER, "expected brauer", crossing)
    return report


def check_eq_p2() -> VerificationReport:
    report = VerificationReport("eq-p2")
    with _Timer(report):
        for name, (text, rows) in P2_EXAMPLES.items():
            a = parse(text)
            report.check(rep.phi(a).data == _grid(rows), f"phi({name}) differs", a)
    return report


def check_partition_rep(semirings: Sequence[Semiring], seed: int = 0, random_cases: int = 1000) -> VerificationReport:
    report = VerificationReport("partition-rep", seed=seed)
    with _Timer(report):
        for S in semirings:
            report.absorb(
                check_homomorphism(
                    Rep.PHI, Family.PARTITION, range(3), S,
                    random_cases=random_cases, random_sizes=range(5), seed=seed,
                )
            )
        for total in range(7):
            for m in range(total + 1):
                report.absorb(check_faithful(Rep.PHI, Family.PARTITION, m, total - m))
        for n in range(1, 5):
            a = Partition.from_blocks(n, n, [range(1, n + 1), range(-1, -n - 1, -1)])
            M = rep.phi(a, INTEGER)
            report.check(M @ M != M, "two-block partition is idempotent over Z", a)
        for m in range(4):
            for n in range(4):
                for a in diagrams.enumerate_diagrams(Family.BRAUER, m, n):
                    report.check(
                        all(x.bit_count() % 2 == y.bit_count() % 2 for x, y in a.block_unions),
                        "Brauer image mixes parities",
                        a,
                    )
                    parity = rep.phi(a, order=OrderKind.PARITY)
                    odd_rows, odd_cols = len(odd_subsets(m)), len(odd_subsets(n))
                    off_diagonal = [
                        v
                        for i, row in enumerate(parity.data)
                        for j, v in enumerate(row)
                        if (i < odd_rows) != (j < odd_cols)
                    ]
                    report.check(not any(off_diagonal), "parity-ordered image is not block diagonal", a)
        for m in range(6):
            for n in range(6):
                report.check(
                    rep.object_dimension(m + n) == rep.object_dimension(m) * rep.object_dimension(n),
                    "object map is not multiplicative",
                    f"{m},{n}",
                )
    return report


def check_twisted_rep(integer: Semiring = INTEGER, seed: int = 0) -> VerificationReport:
    report = VerificationReport("twisted-rep", seed=seed)
    with _Timer(report):
        report.absorb(check_homomorphism(Rep.RHO, Family.PARTITION, range(3), integer, max_twist=4, tensor_sizes=range(2)))
        if report.inapplicable:
            return report
        for m in range(3):
            for n in range(3):
                report.absorb(check_faithful(Rep.RHO, Family.PARTITION, m, n, integer, max_twist=4))
        for d in (1, 2):
            ring = integer_mod(2 ** (d + 1))
            report.absorb(check_homomorphism(Rep.RHO_D, Family.PARTITION, range(3), ring, d=d, max_twist=d + 2, tensor_sizes=range(2)))
            for m in range(3):
                for n in range(3):
                    report.absorb(check_faithful(Rep.RHO_D, Family.PARTITION, m, n, ring, d=d, max_twist=d + 2))
            for kind in (Rep.RHO_ODD, Rep.RHO_EVEN):
                report.absorb(check_homomorphism(kind, Family.BRAUER, (1, 3), ring, d=d, max_twist=d))
        for kind in (Rep.RHO_ODD, Rep.RHO_EVEN):
            report.absorb(check_homomorphism(kind, Family.BRAUER, (1, 3), integer, max_twist=2))
            report.absorb(check_faithful(kind, Family.BRAUER, 3, 3, integer, max_twist=2))
        a, b = parse(FIGURE_A), parse(FIGURE_B)
        ring = integer_mod(4)
        product = rep.rho_d(TwistedElement(1, a), 1, ring) @ rep.rho_d(TwistedElement(1, b), 1, ring)
        report.check(product.is_zero(), "rho_1((1,a)) rho_1((1,b)) is not zero", f"{a} ; {b}")
        report.check(
            diagrams.twisted_compose(TwistedElement(1, a), TwistedElement(1, b), 1) == ZeroMorphism(4, 5),
            "(1,a)(1,b) does not vanish at d=1",
            f"{a} ; {b}",
        )
    return report


def check_brauer(semiring: Semiring = BOOLEAN) -> VerificationReport:
    report = VerificationReport("brauer")
    with _Timer(report):
        for kind in (Rep.ODD, Rep.EVEN):
            report.absorb(check_homomorphism(kind, Family.BRAUER, range(4), semiring))
            for m in (1, 3, 5):
                for n in (1, 3, 5):
                    report.absorb(check_faithful(kind, Family.BRAUER, m, n, semiring))
            report.absorb(check_faithful(kind, Family.BRAUER, 4, 4, semiring, kernel=True))
        a = parse("4,4:{1,1'}{2,2'}{3,4}{3',4'}")
        b = parse("4,4:{1,2'}{2,1'}{3,4}{3',4'}")
        report.check(rep.reduced(a, rep.EVEN, semiring) == rep.reduced(b, rep.EVEN, semiring), "even images of the witness pair differ", f"{a} ; {b}")
        zero_rank = parse("2,2:{1,2}{1',2'}")
        report.check(rep.reduced(zero_rank, rep.ODD, semiring).is_zero(), "rank-0 odd image is not zero", zero_rank)
    return report


def check_temperley_lieb(semiring: Semiring = BOOLEAN, max_size: int = 5, faithful_total: int = 10) -> VerificationReport:
    report = VerificationReport("temperley-lieb")
    with _Timer(report):
        report.absorb(check_homomorphism(Rep.MU, Family.TEMPERLEY_LIEB, range(max_size + 1), semiring))
        report.absorb(check_homomorphism(Rep.MU_EVEN, Family.TEMPERLEY_LIEB, range(min(max_size, 4) + 1), semiring))
        for total in range(0, faithful_total + 1, 2):
            for m in range(total + 1):
                report.absorb(check_faithful(Rep.MU, Family.TEMPERLEY_LIEB, m, total - m, semiring))
                if total <= 8:
                    report.absorb(check_faithful(Rep.MU_EVEN, Family.TEMPERLEY_LIEB, m, total - m, semiring))
        for text, rows in (TL4_A, TL4_B):
            x = parse(text)
            report.check(rep.mu(x).reindex(TL4_ORDER, TL4_ORDER).data == _grid(rows), "mu image differs", x)
        a = parse(TL4_A[0])
        Ma = rep.mu(a, INTEGER)
        out = diagrams.compose(a, a)
        report.check(out.floats == 2 and out.product == a, "(0,a)(0,a) != (2,a)", a)
        report.check(Ma @ Ma == Ma.scale(3), "mu(a)^2 != 3 mu(a)", a)
        report.check(Ma @ Ma != Ma.scale(2**out.floats), "mu carries the twist", a)
        b = parse(TL4_B[0])
        Mb = rep.mu(b, INTEGER)
        expected = _grid(["10000", "02200", "02200", "00000", "00000"])
        report.check((Mb @ Mb).reindex(TL4_ORDER, TL4_ORDER).data == expected, "mu(b)^2 differs", b)
    return report


def check_generators(max_total: int = 8, max_n: int = 6) -> VerificationReport:
    report = VerificationReport("generators")
    with _Timer(report):
        for total in range(0, max_total + 1, 2):
            for m in range(total + 1):
                n = total - m
                for a in diagrams.enumerate_diagrams(Family.TEMPERLEY_LIEB, m, n):
                    word = diagrams.factorize(a)
                    report.check(
                        diagrams.multiply_generators(word, a.m).product == a,
                        "generator word does not evaluate to a",
                        a,
                    )
        for n in range(2, max_n + 1):
            for i in range(1, n):
                e = diagrams.generator(GeneratorKind.E, i, n)
                e_star = diagrams.generator(GeneratorKind.E_STAR, i, n)
                h = diagrams.generator(GeneratorKind.H, i, n)
                report.check(diagrams.compose(e, e_star) == diagrams.CompositionOutcome(h, 0), "e e* != h", h)
                report.check(
                    diagrams.compose(e_star, e) == diagrams.CompositionOutcome(Partition.identity(n - 2), 1),
                    "e* e != (id, 1)",
                    e,
                )
                H = rep.brauer_H(i, n)
                report.check(H == rep.phi(h), "H_{i,n} != phi(h_{i,n})", GeneratorSpec(GeneratorKind.H, i, n))
                report.check(H.is_symmetric() and H @ H == H, "H_{i,n} is not a symmetric idempotent", h)
        convention, table = rep.resolve_h_convention(max_n)
        report.check(convention == "mirrored", f"uniform positional form is {convention}", "h_{i,n}")
        symmetric = [(i, n) for i, n, matched in table if len(matched) == 2]
        for i, n, matched in table:
            if i - 1 != n - i - 1:
                report.check(matched == ["mirrored"], f"candidates matching: {matched}", f"h_{{{i},{n}}}")
        report.notes.append(
            "phi(h_{i,n}) = I_{2^(n-i-1)} (x) M (x) I_{2^(i-1)} positionally under binary order; "
            f"both forms coincide at {symmetric}"
        )
    return report


def check_linear(seed: int = 0, random_cases: int = 200) -> VerificationReport:
    report = VerificationReport("linear", seed=seed)
    with _Timer(report):
        combo = linear.LinearCombination.from_terms(2, 2, [(parse(t), 1) for t, _ in P2_EXAMPLES.values()])
        M = linear.phi_linear(combo, INTEGER)
        report.check(M.data == _grid(P2_SUM), "a+b+c image differs", combo)
        starred = linear.linear_involution(combo)
        report.check(starred != combo and linear.phi_linear(starred, INTEGER) == M, "a*+b*+c* does not collide", combo)
        for group in (B3_A, B3_B):
            combo = linear.LinearCombination.from_terms(3, 3, [(parse(t), 1) for t in group])
            image = linear.phi_linear(combo, INTEGER).reindex(B3_ORDER, B3_ORDER)
            report.check(image.data == _grid(B3_SUM), "Brauer sum image differs", group)
        for n in range(5):
            report.check(linear.independence_rank(Family.TEMPERLEY_LIEB, n, n) == utils.catalan(n), "TL images are dependent", n)
        for m in range(5):
            for n in range(m % 2, 5, 2):
                size = len(diagrams.enumerate_diagrams(Family.TEMPERLEY_LIEB, m, n))
                report.check(linear.independence_rank(Family.TEMPERLEY_LIEB, m, n) == size, "TL images are dependent", f"{m},{n}")
        report.check(linear.independence_rank(Family.PARTITION, 2, 2) < 15, "P_2 images are independent", "2,2")
        report.check(linear.independence_rank(Family.BRAUER, 3, 3) < 15, "B_3 images are independent", "3,3")

        h = linear.LinearCombination.of(diagrams.generator(GeneratorKind.H, 1, 2))
        report.check(linear.linear_compose(h, h) == h.scale(2), "h h != 2h", h)
        for n in range(4):
            for k in range(3):
                c = linear.cap_linear(n + 2 * k, n)
                expected = linear.LinearCombination.of(Partition.identity(n), 2**k)
                report.check(linear.linear_compose(linear.linear_involution(c), c) == expected, "c* c != 2^k id", c)

        rng = random.Random(seed)
        for _ in range(random_cases):
            m, n, t, s = (rng.randint(0, 3) for _ in range(4))
            u, v, w = (_random_combination(x, y, rng) for x, y in ((m, n), (n, t), (t, s)))
            uv = linear.linear_compose(u, v)
            report.check(
                linear.phi_linear(uv, RATIONAL) == linear.phi_linear(u, RATIONAL) @ linear.phi_linear(v, RATIONAL),
                "phi is not multiplicative on combinations",
                f"{u} ; {v}",
            )
            report.check(
                linear.linear_compose(uv, w) == linear.linear_compose(u, linear.linear_compose(v, w)),
                "composition of combinations is not associative",
                f"{u} ; {v} ; {w}",
            )
    return report


def _random_combination(m: int, n: int, rng: random.Random) -> linear.LinearCombination:
    terms = [(diagrams.random_diagram(Family.PARTITION, m, n, rng), rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))]
    return linear.LinearCombination.from_terms(m, n, terms)


def check_decomposition(seed: int = 0, random_seeds: int = 100, max_m: int = 3) -> VerificationReport:
    report = VerificationReport("decomposition", seed=seed)
    with _Timer(report):
        for m in range(max_m + 1):
            for n in range(max_m + 1):
                plus, minus = linear.plus_basis(n), linear.minus_basis(n)
                for a in diagrams.enumerate_diagrams(Family.PARTITION, m, n):
                    for v in plus:
                        report.check(linear.module_action(a, v).is_complement_symmetric(), "V+ is not invariant", a)
                    for v in minus:
                        report.check(linear.module_action(a, v).is_complement_antisymmetric(), "V- is not invariant", a)

        for n in [k for k in (1, 2) if k <= max_m]:
            for sign, seed_vector in linear.canonical_seeds(n).items():
                spaces = linear.submodule_closure(seed_vector, max_m)
                pick = linear.plus_basis if sign == "plus" else linear.minus_basis
                for k, space in spaces.items():
                    report.check(
                        space.contains_all(pick(k)) and space.dimension == len(pick(k)),
                        f"closure of the {sign} seed in V_{n} is not V{'+' if sign == 'plus' else '-'} at {k}",
                        seed_vector,
                    )
                spaces = linear.submodule_closure(seed_vector, max_m, monoid=True)
                report.check(
                    spaces[n].dimension == len(pick(n)) and spaces[n].contains_all(pick(n)),
                    f"monoid closure of the {sign} seed is not V{'+' if sign == 'plus' else '-'}_{n}",
                    seed_vector,
                )

        rng = random.Random(seed)
        for n in [k for k in (2, 3) if k <= max_m]:
            for _ in range(random_seeds):
                v = linear.random_nonzero_vector(n, rng)
                spaces = linear.submodule_closure(v, max_m)
                report.check(
                    linear.closure_contains_slice(spaces, "plus") or linear.closure_contains_slice(spaces, "minus"),
                    "closure contains neither V+ nor V-",
                    v,
                )
        report.notes.append(f"irreducibility evidence covers shapes <= {max_m} only")

        for n in (2, 3):
            plus, minus = linear.plus_basis(n), linear.minus_basis(n)
            for Y in range(1, utils.full_mask(n)):
                w = linear.decomposition_witnesses(n, Y)
                for i in (0, 1):
                    twisted = {k: TwistedElement(i, p) for k, p in w.items()}
                    report.check(
                        linear.act_alike(twisted["a"], twisted["b"], plus),
                        "a and b act differently on V+",
                        w["a"],
                    )
                    report.check(
                        linear.act_alike(twisted["c"], twisted["d"], minus),
                        "c and d act differently on V-",
                        w["c"],
                    )
    return report


# Registry
@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Callable[[Settings, Optional[Semiring]], VerificationReport]
    requires: Optional[str] = None


def _random_cases(settings: Settings, default: int) -> int:
    return default if settings.random_cases is None else settings.random_cases


def _suite_partition_rep(settings: Settings, S: Optional[Semiring]) -> VerificationReport:
    return check_partition_rep([S] if S else [BOOLEAN, TROPICAL], settings.seed, _random_cases(settings, 1000))


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("figure1", "Worked composition, reflection, tensor and classification examples", lambda st, S: check_figure1()),
        Suite(
            "twisting",
            "Phi(a,b)+Phi(ab,c) = Phi(a,bc)+Phi(b,c): exhaustive at sizes <= 3 plus random triples",
            lambda st, S: check_twisting_identity(random_cases=_random_cases(st, DEFAULT_RANDOM_CASES), seed=st.seed),
        ),
        Suite(
            "associativity",
            "(ab)c = a(bc): exhaustive at sizes <= 3 plus random triples",
            lambda st, S: check_associativity(random_cases=_random_cases(st, DEFAULT_RANDOM_CASES), seed=st.seed),
        ),
        Suite("laws", "Involution, interchange and regularity laws; semiring axioms", lambda st, S: _merged("laws", check_laws(), check_semiring_laws(seed=st.seed))),
        Suite("enumeration", "Hom-set sizes, TL parity clauses and even-gap counts", lambda st, S: check_enumeration()),
        Suite(
            "intertwining",
            "Intertwining-set counts are 2^Phi or 0, with Z0 the least one",
            lambda st, S: check_count_formula(_all_pairs(2), "intertwining"),
        ),
        Suite("ones", "Three descriptions of a one in phi(a)", lambda st, S: check_lemma_ones()),
        Suite("partition-rep", "phi is a faithful tensor representation over idempotent semirings", _suite_partition_rep, "idempotent"),
        Suite("order", "Refinement matches the reversed entrywise order", lambda st, S: check_order_correspondence()),
        Suite("eq-p2", "The three 4x4 images of P_2 elements", lambda st, S: check_eq_p2()),
        Suite("twisted-rep", "rho and rho_d are faithful representations of the twisted categories", lambda st, S: check_twisted_rep(S or INTEGER, st.seed), "char0"),
        Suite("brauer", "Reduced Brauer maps: morphisms, injectivity and kernels", lambda st, S: check_brauer(S or BOOLEAN), "idempotent"),
        Suite("temperley-lieb", "The even-gap map mu: morphism, injectivity and twist failure", lambda st, S: check_temperley_lieb(S or BOOLEAN), "idempotent"),
        Suite("generators", "TL factorisation, h = e e* and the H_{i,n} convention", lambda st, S: check_generators()),
        Suite("linear", "Linear combinations at delta=2 and independence ranks", lambda st, S: check_linear(st.seed)),
        Suite("decomposition", "V+ and V- submodules and closures", lambda st, S: check_decomposition(st.seed)),
        Suite(
            "orbits",
            "Transitivity of P_n and the two parity orbits of B_n",
            lambda st, S: _merged(
                "orbits",
                *[check_orbits(Family.PARTITION, n) for n in range(4)],
                *[check_orbits(Family.BRAUER, n) for n in range(5)],
            ),
        ),
    )
}


def _merged(name: str, *reports: VerificationReport) -> VerificationReport:
    out = VerificationReport(name)
    for r in reports:
        out.absorb(r)
        out.wall_time += r.wall_time
    return out


def _all_pairs(n: int) -> List[Tuple[Partition, Partition]]:
    hom = diagrams.enumerate_diagrams(Family.PARTITION, n, n)
    return [(a, b) for a in hom for b in hom]


def _applicable(requirement: Optional[str], semiring: Semiring) -> Optional[str]:
    if requirement == "idempotent" and not semiring.is_idempotent:
        return f"{semiring.name} is not idempotent"
    if requirement == "char0" and semiring.characteristic != 0:
        return f"{semiring.name} does not have characteristic 0"
    return None


def run_suite(name: str, settings: Settings, semiring: Optional[str] = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"Unknown suite '{name}'. Available: {', '.join(SUITES)}")
    suite = SUITES[name]
    S = get_semiring(semiring) if semiring else None
    if S is not None:
        reason = _applicable(suite.requires, S)
        if reason:
            return VerificationReport(name, seed=settings.seed, inapplicable=reason)
    start = time.perf_counter()
    report = suite.run(settings, S)
    report.suite, report.seed = name, settings.seed
    report.wall_time = time.perf_counter() - start
    return report


def run_suites(
    names: Sequence[str], settings: Settings, semiring: Optional[str] = None, jobs: int = 1
) -> List[VerificationReport]:
    """Run suites (all of them when `names` is empty), in registry order."""
    chosen = [n for n in SUITES if n in set(names)] if names else list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"Unknown suite(s): {', '.join(unknown)}. Available: {', '.join(SUITES)}")
    if jobs > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(
                pool.map(run_suite, chosen, [settings] * len(chosen), [semiring] * len(chosen))
            )
    return [run_suite(n, settings, semiring) for n in chosen]
