"""Matrix representations of the diagram categories.

phi sends a in P_{m,n} to the 2^m x 2^n zero-one matrix with a one at (X, Y)
exactly when X u Y' is a union of a-blocks. The Brauer and Temperley-Lieb maps
are submatrices of it, and the twisted maps scale it by 2^i.
"""

from typing import Dict, List, Optional, Tuple

from . import diagrams, utils
from .diagrams import Family, GeneratorKind, Partition, Twisted, ZeroMorphism
from .errors import DiagramError, RepresentationInapplicableError
from .matrices import (
    IndexedMatrix,
    OrderKind,
    even_gap_subsets,
    even_subsets,
    identity_grid,
    kronecker,
    odd_subsets,
    positional_kron,
    subset_labels,
)
from .semiring import BOOLEAN, IntegerModRing, Semiring

ODD = "odd"
EVEN = "even"


def phi(a: Partition, semiring: Semiring = BOOLEAN, order: OrderKind = OrderKind.BINARY) -> IndexedMatrix:
    return IndexedMatrix.from_support(
        semiring,
        a.m,
        a.n,
        subset_labels(order, a.m),
        subset_labels(order, a.n),
        a.block_unions,
    )


def image(a: Partition, X: int) -> int:
    """Xa: the lower parts of the blocks meeting X."""
    out = 0
    for upper, lower in a.block_masks:
        if upper & X:
            out |= lower
    return out


def preimage(a: Partition, Y: int) -> int:
    """aY: the upper parts of the blocks meeting Y'."""
    out = 0
    for upper, lower in a.block_masks:
        if lower & Y:
            out |= upper
    return out


# Brauer
def _require_brauer(a: Partition) -> None:
    if diagrams.classify(a) is Family.PARTITION:
        raise DiagramError(f"Expected a Brauer diagram, got {a}")


def _parity_labels(parity: str, n: int) -> Tuple[int, ...]:
    if parity == ODD:
        return odd_subsets(n)
    if parity == EVEN:
        return even_subsets(n)
    raise ValueError(f"Parity must be '{ODD}' or '{EVEN}', got {parity!r}")


def reduced(a: Partition, parity: str, semiring: Semiring = BOOLEAN) -> IndexedMatrix:
    """The odd- (or even-) cardinality diagonal block of phi(a), for Brauer a."""
    _require_brauer(a)
    rows, cols = _parity_labels(parity, a.m), _parity_labels(parity, a.n)
    return IndexedMatrix.from_support(semiring, a.m, a.n, rows, cols, a.block_unions)


# Temperley-Lieb
def mu(a: Partition, semiring: Semiring = BOOLEAN) -> IndexedMatrix:
    """The f_m x f_n submatrix of phi(a) on even-gap subsets, for TL a."""
    if diagrams.classify(a) is not Family.TEMPERLEY_LIEB:
        raise DiagramError(f"Expected a Temperley-Lieb diagram, got {a}")
    return IndexedMatrix.from_support(
        semiring, a.m, a.n, even_gap_subsets(a.m), even_gap_subsets(a.n), a.block_unions
    )


def mu_even(a: Partition, semiring: Semiring = BOOLEAN) -> IndexedMatrix:
    """The even-cardinality block of phi(a) for TL a (the larger faithful TL map)."""
    if diagrams.classify(a) is not Family.TEMPERLEY_LIEB:
        raise DiagramError(f"Expected a Temperley-Lieb diagram, got {a}")
    return reduced(a, EVEN, semiring)


# Twisted
def require_characteristic_zero(semiring: Semiring) -> None:
    if semiring.characteristic != 0:
        raise RepresentationInapplicableError(
            f"The twisted representation needs a semiring of characteristic 0, "
            f"got {semiring.name} (characteristic {semiring.characteristic})"
        )


def require_truncation_ring(semiring: Semiring, d: int) -> None:
    if not (
        isinstance(semiring, IntegerModRing)
        and semiring.supports_negation
        and semiring.modulus == 2 ** (d + 1)
    ):
        raise RepresentationInapplicableError(
            f"The {d}-truncated representation needs a ring of characteristic {2 ** (d + 1)}, "
            f"got {semiring.name}"
        )


def rho(x: Twisted, semiring: Semiring) -> IndexedMatrix:
    """(i, a) -> 2^i phi(a) over a characteristic-0 semiring."""
    require_characteristic_zero(semiring)
    if isinstance(x, ZeroMorphism):
        raise DiagramError("The untruncated twisted category has no zero morphisms")
    return phi(x.diagram, semiring).scale(semiring.embed_natural(2**x.twist))


def rho_d(x: Twisted, d: int, semiring: Semiring) -> IndexedMatrix:
    """(i, a) -> 2^i phi(a) and zero -> O over Z/2^(d+1)."""
    require_truncation_ring(semiring, d)
    if isinstance(x, ZeroMorphism):
        return IndexedMatrix.zeros(
            semiring, x.m, x.n, subset_labels(OrderKind.BINARY, x.m), subset_labels(OrderKind.BINARY, x.n)
        )
    if x.twist > d:
        raise DiagramError(f"Twist {x.twist} exceeds the truncation depth {d}")
    return phi(x.diagram, semiring).scale(semiring.embed_natural(2**x.twist))


def rho_reduced(
    x: Twisted, parity: str, semiring: Semiring, d: Optional[int] = None
) -> IndexedMatrix:
    """The twisted versions of the reduced Brauer maps."""
    if d is None:
        require_characteristic_zero(semiring)
    else:
        require_truncation_ring(semiring, d)
    if isinstance(x, ZeroMorphism):
        if d is None:
            raise DiagramError("The untruncated twisted category has no zero morphisms")
        return IndexedMatrix.zeros(
            semiring, x.m, x.n, _parity_labels(parity, x.m), _parity_labels(parity, x.n)
        )
    return reduced(x.diagram, parity, semiring).scale(semiring.embed_natural(2**x.twist))


# Brauer's H_{i,n}
def _check_h_index(i: int, n: int) -> None:
    if n < 2 or not 1 <= i <= n - 1:
        raise DiagramError(f"H index out of range: i={i}, n={n} (need 1 <= i <= n-1)")


def brauer_H(i: int, n: int, semiring: Semiring = BOOLEAN) -> IndexedMatrix:
    """I_{2^(i-1)} (x) M (x) I_{2^(n-i-1)} built on subset labels, with M = phi(h_{1,2})."""
    _check_h_index(i, n)
    M = phi(diagrams.generator(GeneratorKind.H, 1, 2), semiring)
    left = IndexedMatrix.identity(semiring, i - 1)
    right = IndexedMatrix.identity(semiring, n - i - 1)
    return kronecker(kronecker(left, M), right)


def brauer_H_candidates(i: int, n: int, semiring: Semiring = BOOLEAN) -> Dict[str, IndexedMatrix]:
    """The two positional readings of I (x) M (x) I, labelled in binary order.

    `stated` puts I_{2^(i-1)} in the most significant position, `mirrored`
    puts I_{2^(n-i-1)} there.
    """
    _check_h_index(i, n)
    M = phi(diagrams.generator(GeneratorKind.H, 1, 2), semiring).data
    labels = subset_labels(OrderKind.BINARY, n)
    small, large = identity_grid(semiring, 2 ** (i - 1)), identity_grid(semiring, 2 ** (n - i - 1))
    return {
        name: IndexedMatrix(semiring, n, n, labels, labels, grid)
        for name, grid in (
            ("stated", positional_kron(semiring, small, M, large)),
            ("mirrored", positional_kron(semiring, large, M, small)),
        )
    }


def resolve_h_convention(max_n: int = 6, semiring: Semiring = BOOLEAN) -> Tuple[Optional[str], List[Tuple[int, int, List[str]]]]:
    """Which positional candidate equals phi(h_{i,n}) for every 1 <= i < n <= max_n.

    Returns the uniform winner (or None) and, per (i, n), the names of the
    candidates that matched.
    """
    table = []
    winners = {"stated", "mirrored"}
    for n in range(2, max_n + 1):
        for i in range(1, n):
            target = phi(diagrams.generator(GeneratorKind.H, i, n), semiring)
            matched = [name for name, cand in brauer_H_candidates(i, n, semiring).items() if cand == target]
            table.append((i, n, matched))
            winners &= set(matched)
    return (winners.pop() if len(winners) == 1 else None), table


def object_dimension(n: int, kind: str = "phi") -> int:
    """Dimension of the space the object n is sent to."""
    if kind == "phi":
        return 2**n
    if kind in (ODD, EVEN):
        return 2 ** (n - 1) if n >= 1 else (0 if kind == ODD else 1)
    if kind == "mu":
        return utils.fibonacci(n)
    raise ValueError(f"Unknown representation kind: {kind}")
