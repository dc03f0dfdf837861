"""Partition, Brauer and Temperley-Lieb diagrams, their composition and the twisted categories."""

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from . import config, utils
from .errors import DiagramError, ShapeMismatchError, SizeGuardError

Block = Tuple[int, ...]


class Family(str, Enum):
    """The three diagram categories, P > B > TL."""

    PARTITION = "P"
    BRAUER = "B"
    TEMPERLEY_LIEB = "TL"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "p": cls.PARTITION,
            "partition": cls.PARTITION,
            "b": cls.BRAUER,
            "brauer": cls.BRAUER,
            "tl": cls.TEMPERLEY_LIEB,
            "temperley_lieb": cls.TEMPERLEY_LIEB,
        }
        if key not in aliases:
            raise ValueError(f"Unknown diagram family: {text}")
        return aliases[key]

    @property
    def label(self) -> str:
        return {
            Family.PARTITION: "partition",
            Family.BRAUER: "brauer",
            Family.TEMPERLEY_LIEB: "temperley_lieb",
        }[self]


def _vertex_key(v: int, m: int) -> int:
    # Total order +1 < ... < +m < -1 < ... < -n.
    return v if v > 0 else m - v


def _vertex_label(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def _sorted_block(vertices: Iterable[int], m: int) -> Block:
    return tuple(sorted(vertices, key=lambda v: _vertex_key(v, m)))


@dataclass(frozen=True)
class Partition:
    """A set partition of [m] u [n]': upper vertex i is +i, lower vertex j' is -j.

    Use `Partition.from_blocks` to validate and canonicalise arbitrary input;
    the dataclass constructor trusts `blocks` to be canonical already.
    """

    m: int
    n: int
    blocks: Tuple[Block, ...]

    @classmethod
    def from_blocks(cls, m: int, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        if m < 0 or n < 0:
            raise DiagramError(f"Row sizes must be natural numbers, got {m},{n}")
        seen = set()
        canon = []
        for block in blocks:
            vertices = list(block)
            if not vertices:
                raise DiagramError("Blocks must be nonempty")
            for v in vertices:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise DiagramError(f"Vertex {v!r} is not an integer label")
                if v == 0 or v > m or -v > n:
                    raise DiagramError(
                        f"Vertex {_vertex_label(v) if v else 0} is outside [{m}] u [{n}]'"
                    )
                if v in seen:
                    raise DiagramError(f"Vertex {_vertex_label(v)} appears in two blocks")
                seen.add(v)
            canon.append(_sorted_block(vertices, m))
        if len(seen) != m + n:
            missing = [
                _vertex_label(v)
                for v in [*range(1, m + 1), *range(-1, -n - 1, -1)]
                if v not in seen
            ]
            raise DiagramError(f"Vertices not covered by any block: {', '.join(missing)}")
        return cls._canonical(m, n, canon)

    @classmethod
    def _canonical(cls, m: int, n: int, blocks: Iterable[Block]) -> "Partition":
        # Each block must already be internally sorted.
        return cls(m, n, tuple(sorted(blocks, key=lambda b: _vertex_key(b[0], m))))

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(n, n, tuple((i, -i) for i in range(1, n + 1)))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.m, self.n)

    @cached_property
    def block_masks(self) -> Tuple[Tuple[int, int], ...]:
        """(upper mask, lower mask) for each block."""
        out = []
        for block in self.blocks:
            upper = lower = 0
            for v in block:
                if v > 0:
                    upper |= 1 << (v - 1)
                else:
                    lower |= 1 << (-v - 1)
            out.append((upper, lower))
        return tuple(out)

    @cached_property
    def block_unions(self) -> FrozenSet[Tuple[int, int]]:
        """Every (X, Y) with X u Y' a (possibly empty) union of blocks."""
        unions = [(0, 0)]
        for upper, lower in self.block_masks:
            unions += [(x | upper, y | lower) for x, y in unions]
        return frozenset(unions)

    @cached_property
    def block_index(self) -> Dict[int, int]:
        """Vertex -> index of the block containing it."""
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    def is_union_of_blocks(self, upper: int, lower: int) -> bool:
        """Whether X u Y' (given as bitmasks) is a union of blocks."""
        for bu, bl in self.block_masks:
            hit_u, hit_l = bu & upper, bl & lower
            if (hit_u or hit_l) and (hit_u != bu or hit_l != bl):
                return False
        return (upper >> self.m) == 0 and (lower >> self.n) == 0

    def sort_key(self) -> Tuple:
        return (self.m, self.n, tuple(tuple(_vertex_key(v, self.m) for v in b) for b in self.blocks))

    def __str__(self) -> str:
        body = "".join(
            "{" + ",".join(_vertex_label(v) for v in block) + "}" for block in self.blocks
        )
        return f"{self.m},{self.n}:{body}"


@dataclass(frozen=True)
class CompositionOutcome:
    """The product ab together with the number of floating components."""

    product: Partition
    floats: int


@dataclass(frozen=True)
class DiagramStatistics:
    rank: int
    dom: int
    codom: int
    ker: Tuple[Tuple[int, ...], ...]
    coker: Tuple[Tuple[int, ...], ...]


# Composition
def _product_graph(a: Partition, b: Partition) -> utils.DisjointSet:
    """Union-find over upper (m), middle (n) and lower (t) rows of the product graph."""
    if a.n != b.m:
        raise ShapeMismatchError(
            f"Cannot compose {a.m}x{a.n} with {b.m}x{b.n}: middle rows differ"
        )
    m, n, t = a.m, a.n, b.n
    ds = utils.DisjointSet(m + n + t)
    for block in a.blocks:
        ds.union_chain([v - 1 if v > 0 else m - v - 1 for v in block])
    for block in b.blocks:
        ds.union_chain([m + v - 1 if v > 0 else m + n - v - 1 for v in block])
    return ds


def compose(a: Partition, b: Partition) -> CompositionOutcome:
    """The product ab and the floating-component count Phi(a, b)."""
    ds = _product_graph(a, b)
    m, n, t = a.m, a.n, b.n
    outer: Dict[int, List[int]] = {}
    for i in range(m):
        outer.setdefault(ds.find(i), []).append(i + 1)
    for k in range(t):
        outer.setdefault(ds.find(m + n + k), []).append(-(k + 1))
    middle_roots = {ds.find(m + j) for j in range(n)}
    floats = len(middle_roots - outer.keys())
    return CompositionOutcome(Partition._canonical(m, t, map(tuple, outer.values())), floats)


def floating_components(a: Partition, b: Partition) -> Tuple[int, ...]:
    """Middle-row components of the product graph, as bitmasks over [n]."""
    ds = _product_graph(a, b)
    m, n, t = a.m, a.n, b.n
    outer_roots = {ds.find(i) for i in range(m)} | {ds.find(m + n + k) for k in range(t)}
    comps: Dict[int, int] = {}
    for j in range(n):
        root = ds.find(m + j)
        if root not in outer_roots:
            comps[root] = comps.get(root, 0) | (1 << j)
    return tuple(sorted(comps.values()))


def involution(a: Partition) -> Partition:
    """The reflection a*, swapping i and i'."""
    return Partition._canonical(a.n, a.m, (_sorted_block((-v for v in b), a.n) for b in a.blocks))


def tensor_sum(a: Partition, b: Partition) -> Partition:
    """Place b to the right of a."""
    shifted = (tuple(v + a.m if v > 0 else v - a.n for v in block) for block in b.blocks)
    return Partition._canonical(a.m + b.m, a.n + b.n, (*a.blocks, *shifted))


def statistics(a: Partition) -> DiagramStatistics:
    rank = dom = codom = 0
    ker = []
    coker = []
    for (upper, lower), block in zip(a.block_masks, a.blocks):
        if upper and lower:
            rank += 1
            dom |= upper
            codom |= lower
        if upper:
            ker.append(tuple(v for v in block if v > 0))
        if lower:
            coker.append(tuple(-v for v in block if v < 0))
    return DiagramStatistics(rank, dom, codom, tuple(sorted(ker)), tuple(sorted(coker)))


def refines(a: Partition, b: Partition) -> bool:
    """Whether every a-block lies inside a b-block."""
    if a.shape != b.shape:
        raise ShapeMismatchError(f"Cannot compare {a.m}x{a.n} with {b.m}x{b.n}")
    where = b.block_index
    return all(len({where[v] for v in block}) == 1 for block in a.blocks)


def is_planar_matching(a: Partition) -> bool:
    """Non-crossing chords around the boundary 1, ..., m, n', ..., 1'."""
    size = a.m + a.n

    def position(v: int) -> int:
        return v - 1 if v > 0 else a.m + a.n + v

    partner = [0] * size
    for block in a.blocks:
        if len(block) != 2:
            return False
        p, q = position(block[0]), position(block[1])
        partner[p], partner[q] = q, p
    stack: List[int] = []
    for pos in range(size):
        if partner[pos] > pos:
            stack.append(pos)
        elif not stack or stack.pop() != partner[pos]:
            return False
    return True


def classify(a: Partition) -> Family:
    """The smallest of P, B, TL containing a."""
    if any(len(block) != 2 for block in a.blocks):
        return Family.PARTITION
    return Family.TEMPERLEY_LIEB if is_planar_matching(a) else Family.BRAUER


def in_family(a: Partition, family: Family) -> bool:
    found = classify(a)
    if family is Family.PARTITION:
        return True
    if family is Family.BRAUER:
        return found is not Family.PARTITION
    return found is Family.TEMPERLEY_LIEB


# Enumeration
def _row_vertices(m: int, n: int) -> List[int]:
    return [*range(1, m + 1), *range(-1, -n - 1, -1)]


def _set_partitions(vertices: Sequence[int]) -> Iterable[List[List[int]]]:
    if not vertices:
        yield []
        return
    first = vertices[0]
    for part in _set_partitions(vertices[1:]):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _matchings(vertices: Sequence[int]) -> Iterable[List[Tuple[int, int]]]:
    if not vertices:
        yield []
        return
    first = vertices[0]
    for k in range(1, len(vertices)):
        rest = [*vertices[1:k], *vertices[k + 1 :]]
        for matching in _matchings(rest):
            yield [(first, vertices[k])] + matching


def _noncrossing(lo: int, hi: int) -> List[List[Tuple[int, int]]]:
    """Non-crossing perfect matchings of boundary positions lo..hi-1."""
    if lo >= hi:
        return [[]]
    out = []
    for k in range(lo + 1, hi, 2):
        for inner in _noncrossing(lo + 1, k):
            for outer in _noncrossing(k + 1, hi):
                out.append([(lo, k)] + inner + outer)
    return out


def _boundary_vertex(pos: int, m: int, n: int) -> int:
    return pos + 1 if pos < m else -(m + n - pos)


def _check_guard(m: int, n: int, max_size: Optional[int]) -> None:
    limit = config.default_max_size() if max_size is None else max_size
    if m < 0 or n < 0:
        raise DiagramError(f"Row sizes must be natural numbers, got {m},{n}")
    if m + n > limit:
        raise SizeGuardError(
            f"Refusing to enumerate a hom-set with m+n={m + n} > {limit} "
            f"(raise --max-size or {config.MAX_SIZE_ENV})"
        )


@lru_cache(maxsize=None)
def _enumerate(family: Family, m: int, n: int) -> Tuple[Partition, ...]:
    vertices = _row_vertices(m, n)
    if family is Family.PARTITION:
        found = [Partition._canonical(m, n, map(tuple, p)) for p in _set_partitions(vertices)]
    elif family is Family.BRAUER:
        found = [
            Partition._canonical(m, n, (_sorted_block(pair, m) for pair in matching))
            for matching in _matchings(vertices)
        ]
    else:
        found = [
            Partition._canonical(
                m,
                n,
                (
                    _sorted_block((_boundary_vertex(p, m, n), _boundary_vertex(q, m, n)), m)
                    for p, q in matching
                ),
            )
            for matching in (_noncrossing(0, m + n) if (m + n) % 2 == 0 else [])
        ]
    return tuple(sorted(found, key=Partition.sort_key))


def enumerate_diagrams(
    family: Family, m: int, n: int, max_size: Optional[int] = None
) -> Tuple[Partition, ...]:
    """Every diagram of the hom-set, in canonical order."""
    _check_guard(m, n, max_size)
    return _enumerate(Family(family), m, n)


def random_diagram(family: Family, m: int, n: int, rng: random.Random) -> Partition:
    """A seeded random element of the hom-set (uniform for B and TL)."""
    vertices = _row_vertices(m, n)
    if family is Family.PARTITION:
        if not vertices:
            return Partition(0, 0, ())
        k = rng.randint(1, len(vertices))
        groups: Dict[int, List[int]] = {}
        for v in vertices:
            groups.setdefault(rng.randrange(k), []).append(v)
        return Partition._canonical(m, n, (tuple(g) for g in groups.values()))
    if (m + n) % 2:
        raise DiagramError(f"No {family.label} diagrams of shape {m}x{n}")
    if family is Family.BRAUER:
        rng.shuffle(vertices)
        pairs = zip(vertices[0::2], vertices[1::2])
        return Partition._canonical(m, n, (_sorted_block(p, m) for p in pairs))

    pairs = []
    stack = [(0, m + n)]
    while stack:
        lo, hi = stack.pop()
        if lo >= hi:
            continue
        choices = list(range(lo + 1, hi, 2))
        weights = [utils.catalan((k - lo - 1) // 2) * utils.catalan((hi - k - 1) // 2) for k in choices]
        k = rng.choices(choices, weights=weights)[0]
        pairs.append((_boundary_vertex(lo, m, n), _boundary_vertex(k, m, n)))
        stack += [(lo + 1, k), (k + 1, hi)]
    return Partition._canonical(m, n, (_sorted_block(p, m) for p in pairs))


# Temperley-Lieb generators
class GeneratorKind(str, Enum):
    E = "e"
    E_STAR = "e_star"
    H = "h"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    i: int
    n: int

    @property
    def diagram(self) -> Partition:
        return generator(self.kind, self.i, self.n)

    def __str__(self) -> str:
        return f"{self.kind.value}_{{{self.i},{self.n}}}"


def generator(kind: GeneratorKind, i: int, n: int) -> Partition:
    """e_{i,n} in TL_{n,n-2}, its reflection, or h_{i,n} = e_{i,n} e_{i,n}* in TL_n."""
    kind = GeneratorKind(kind)
    if n < 2 or not 1 <= i <= n - 1:
        raise DiagramError(f"Generator index out of range: i={i}, n={n} (need 1 <= i <= n-1)")
    if kind is GeneratorKind.H:
        blocks = [(i, i + 1), (-i, -(i + 1))]
        blocks += [(j, -j) for j in range(1, n + 1) if j not in (i, i + 1)]
        return Partition._canonical(n, n, blocks)
    blocks = [(i, i + 1)]
    blocks += [(j, -j) for j in range(1, i)]
    blocks += [(j, -(j - 2)) for j in range(i + 2, n + 1)]
    e = Partition._canonical(n, n - 2, blocks)
    return e if kind is GeneratorKind.E else involution(e)


def _drop_pair(a: Partition, first: int) -> Partition:
    """Remove the adjacent block {first, first+1} (same sign) and close the gap."""
    sign = 1 if first > 0 else -1
    top = abs(first) + 1
    blocks = []
    for block in a.blocks:
        if block == (first, first + sign):
            continue
        blocks.append(
            tuple(v - 2 * sign if (v * sign > 0 and abs(v) > top) else v for v in block)
        )
    m, n = (a.m - 2, a.n) if sign > 0 else (a.m, a.n - 2)
    return Partition._canonical(m, n, (_sorted_block(b, m) for b in blocks))


def factorize(a: Partition) -> List[GeneratorSpec]:
    """Write a TL diagram as a product of generators e_{i,n}, e_{i,n}*.

    Innermost upper caps are peeled off on the left and innermost lower cups
    on the right until only an identity remains; an empty list means a = id.
    """
    if classify(a) is not Family.TEMPERLEY_LIEB:
        raise DiagramError("Only Temperley-Lieb diagrams factor over e and e*")
    left: List[GeneratorSpec] = []
    right: List[GeneratorSpec] = []
    current = a
    while True:
        cap = next((b[0] for b in current.blocks if b[0] > 0 and b[1] == b[0] + 1), None)
        if cap is not None:
            left.append(GeneratorSpec(GeneratorKind.E, cap, current.m))
            current = _drop_pair(current, cap)
            continue
        cup = next((b[0] for b in current.blocks if b[0] < 0 and b[1] == b[0] - 1), None)
        if cup is not None:
            right.append(GeneratorSpec(GeneratorKind.E_STAR, -cup, current.n))
            current = _drop_pair(current, cup)
            continue
        break
    if current != Partition.identity(current.m):
        raise DiagramError(f"Factorisation left a non-identity remainder {current}")
    return left + right[::-1]


def multiply_generators(word: Sequence[GeneratorSpec], n: int) -> CompositionOutcome:
    """Evaluate a generator word starting from the object n, accumulating floats."""
    product = Partition.identity(n)
    floats = 0
    for g in word:
        out = compose(product, g.diagram)
        product, floats = out.product, floats + out.floats
    return CompositionOutcome(product, floats)


def cap_element(m: int, n: int) -> Partition:
    """id_n followed by (m-n)/2 adjacent upper caps; the reflection when m < n."""
    if (m - n) % 2:
        raise DiagramError(f"No Temperley-Lieb diagrams of shape {m}x{n}")
    if m < n:
        return involution(cap_element(n, m))
    blocks = [(j, -j) for j in range(1, n + 1)]
    blocks += [(j, j + 1) for j in range(n + 1, m, 2)]
    return Partition._canonical(m, n, blocks)


def parity_clauses(a: Partition) -> List[str]:
    """Names of the TL parity properties that a violates (empty when all hold)."""
    violated = []
    upper = [b for b in a.blocks if b[1] > 0]
    lower = [b for b in a.blocks if b[0] < 0]
    trans = [b for b in a.blocks if b[0] > 0 > b[1]]
    if any((b[0] - b[1]) % 2 == 0 for b in upper):
        violated.append("upper-block")
    if any((b[0] - b[1]) % 2 == 0 for b in lower):
        violated.append("lower-block")
    if any((b[0] + b[1]) % 2 for b in trans):
        violated.append("transversal")
    stats = statistics(a)
    if not (stats.rank % 2 == a.m % 2 == a.n % 2):
        violated.append("rank")
    if any(x % 2 != i % 2 for i, x in enumerate(utils.members(stats.dom), 1)):
        violated.append("dom")
    if any(y % 2 != i % 2 for i, y in enumerate(utils.members(stats.codom), 1)):
        violated.append("codom")
    return violated


# Twisted categories
@dataclass(frozen=True)
class TwistedElement:
    """(i, a) in the twisted category."""

    twist: int
    diagram: Partition

    @property
    def m(self) -> int:
        return self.diagram.m

    @property
    def n(self) -> int:
        return self.diagram.n

    def __str__(self) -> str:
        return f"({self.twist}, {self.diagram})"


@dataclass(frozen=True)
class ZeroMorphism:
    """The zero of shape (m, n) in a d-truncated twisted category."""

    m: int
    n: int

    def __str__(self) -> str:
        return f"zero:{self.m},{self.n}"


Twisted = Union[TwistedElement, ZeroMorphism]


def _check_truncated(x: Twisted, d: Optional[int]) -> None:
    if isinstance(x, ZeroMorphism):
        if d is None:
            raise DiagramError("Zero morphisms only exist in a d-truncated category")
    elif x.twist < 0 or (d is not None and x.twist > d):
        raise DiagramError(f"Twist {x.twist} outside the range 0..{d}")


def twisted_compose(x: Twisted, y: Twisted, d: Optional[int] = None) -> Twisted:
    """(i,a)(j,b) = (i+j+Phi(a,b), ab), truncated to zero above d when d is given."""
    if x.n != y.m:
        raise ShapeMismatchError(f"Cannot compose {x.m}x{x.n} with {y.m}x{y.n}")
    _check_truncated(x, d)
    _check_truncated(y, d)
    if isinstance(x, ZeroMorphism) or isinstance(y, ZeroMorphism):
        return ZeroMorphism(x.m, y.n)
    out = compose(x.diagram, y.diagram)
    twist = x.twist + y.twist + out.floats
    if d is not None and twist > d:
        return ZeroMorphism(x.m, y.n)
    return TwistedElement(twist, out.product)


def twisted_involution(x: Twisted) -> Twisted:
    if isinstance(x, ZeroMorphism):
        return ZeroMorphism(x.n, x.m)
    return TwistedElement(x.twist, involution(x.diagram))


def twisted_tensor(x: Twisted, y: Twisted, d: Optional[int] = None) -> Twisted:
    _check_truncated(x, d)
    _check_truncated(y, d)
    if isinstance(x, ZeroMorphism) or isinstance(y, ZeroMorphism):
        return ZeroMorphism(x.m + y.m, x.n + y.n)
    twist = x.twist + y.twist
    if d is not None and twist > d:
        return ZeroMorphism(x.m + y.m, x.n + y.n)
    return TwistedElement(twist, tensor_sum(x.diagram, y.diagram))


def enumerate_twisted(
    family: Family,
    m: int,
    n: int,
    max_twist: int,
    d: Optional[int] = None,
    max_size: Optional[int] = None,
) -> List[Twisted]:
    """All (i, a) with i <= max_twist (and i <= d), plus the zero when d is given."""
    top = max_twist if d is None else min(max_twist, d)
    out: List[Twisted] = [
        TwistedElement(i, a)
        for i in range(top + 1)
        for a in enumerate_diagrams(family, m, n, max_size)
    ]
    if d is not None:
        out.append(ZeroMorphism(m, n))
    return out
