"""Tests for diagram composition, enumeration and the twisted categories."""

import os
import random
from unittest.mock import patch

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from . import diagrams, utils
from .config import MAX_SIZE_ENV
from .diagrams import (
    CompositionOutcome,
    Family,
    GeneratorKind,
    Partition,
    TwistedElement,
    ZeroMorphism,
)
from .errors import DiagramError, ShapeMismatchError, SizeGuardError
from .formats import parse_partition as parse

FIG_A = "4,6:{1,4}{2,3,4',5'}{1',2',6'}{3'}"
FIG_B = "6,5:{1,2}{3,4,1'}{5,4',5'}{6}{2',3'}"


@st.composite
def partitions(draw, m=None, n=None, max_row=3):
    """Random partition diagrams built from a block label per vertex."""
    m = draw(st.integers(0, max_row)) if m is None else m
    n = draw(st.integers(0, max_row)) if n is None else n
    vertices = [*range(1, m + 1), *range(-1, -n - 1, -1)]
    labels = draw(st.lists(st.integers(0, max(len(vertices) - 1, 0)), min_size=len(vertices), max_size=len(vertices)))
    groups = {}
    for v, label in zip(vertices, labels):
        groups.setdefault(label, []).append(v)
    return Partition.from_blocks(m, n, groups.values())


@st.composite
def family_diagrams(draw, family, m, n):
    """Seeded random elements of B or TL hom-sets."""
    seed = draw(st.integers(0, 2**32 - 1))
    return diagrams.random_diagram(family, m, n, random.Random(seed))


@st.composite
def composable_triples(draw, max_row=3):
    m, n, t, s = (draw(st.integers(0, max_row)) for _ in range(4))
    return draw(partitions(m, n)), draw(partitions(n, t)), draw(partitions(t, s))


def test_figure_composition():
    out = diagrams.compose(parse(FIG_A), parse(FIG_B))
    assert out.product == parse("4,5:{1,4}{2,3,1',4',5'}{2',3'}")
    assert out.floats == 1
    assert diagrams.floating_components(parse(FIG_A), parse(FIG_B)) == (utils.mask_of([1, 2, 6]),)


def test_figure_involution_and_statistics():
    a = parse(FIG_A)
    assert diagrams.involution(a) == parse("6,4:{1,2,6}{3}{4,5,2',3'}{1',4'}")
    stats = diagrams.statistics(a)
    assert stats.rank == 1
    assert stats.dom == utils.mask_of([2, 3])
    assert stats.codom == utils.mask_of([4, 5])
    assert stats.ker == ((1, 4), (2, 3))
    assert stats.coker == ((1, 2, 6), (3,), (4, 5))


def test_tensor_example():
    a = parse("4,3:{1,2,1',3'}{3,4}{2'}")
    b = parse("4,6:{1,2,3,4,4',5',6'}{1',2'}{3'}")
    assert diagrams.tensor_sum(a, b) == parse("8,9:{1,2,1',3'}{3,4}{2'}{5,6,7,8,7',8',9'}{4',5'}{6'}")


def test_classify():
    planar = parse("10,8:{1,3'}{8,8'}{3,4}{5,6}{9,10}{2,7}{1',2'}{5',6'}{4',7'}")
    crossing = parse("10,8:{2,3'}{8,8'}{3,4}{5,6}{9,10}{1,7}{1',2'}{5',6'}{4',7'}")
    assert diagrams.classify(planar) is Family.TEMPERLEY_LIEB
    assert diagrams.classify(crossing) is Family.BRAUER
    assert diagrams.classify(parse(FIG_A)) is Family.PARTITION
    assert diagrams.in_family(planar, Family.BRAUER)
    assert not diagrams.in_family(crossing, Family.TEMPERLEY_LIEB)


def test_canonical_form_ignores_input_order():
    assert Partition.from_blocks(2, 2, [[-2, 2], [-1, 1]]) == Partition.identity(2)
    assert str(Partition.from_blocks(2, 1, [[2, 1], [-1]])) == "2,1:{1,2}{1'}"


@pytest.mark.parametrize(
    "blocks, message",
    [
        ([[1, -1], [2, -2], [1]], "two blocks"),
        ([[1, -1]], "not covered"),
        ([[1, -1], [2, -3]], "outside"),
        ([[1, -1], [], [2, -2]], "nonempty"),
    ],
)
def test_from_blocks_rejects_non_partitions(blocks, message):
    with pytest.raises(DiagramError, match=message):
        Partition.from_blocks(2, 2, blocks)


def test_compose_shape_mismatch():
    with pytest.raises(ShapeMismatchError, match="middle rows differ"):
        diagrams.compose(Partition.identity(2), Partition.identity(3))


def test_refines():
    fine = parse("2,2:{1}{2}{1'}{2'}")
    coarse = parse("2,2:{1,2,1',2'}")
    assert diagrams.refines(fine, coarse)
    assert not diagrams.refines(coarse, fine)
    with pytest.raises(ShapeMismatchError):
        diagrams.refines(fine, Partition.identity(1))


@pytest.mark.parametrize(
    "family, m, n, expected",
    [
        (Family.PARTITION, 2, 2, 15),
        (Family.PARTITION, 0, 0, 1),
        (Family.PARTITION, 3, 1, 15),
        (Family.BRAUER, 2, 2, 3),
        (Family.BRAUER, 3, 3, 15),
        (Family.TEMPERLEY_LIEB, 2, 2, 2),
        (Family.TEMPERLEY_LIEB, 4, 4, 14),
        (Family.TEMPERLEY_LIEB, 1, 2, 0),
    ],
)
def test_enumeration_sizes(family, m, n, expected):
    hom = diagrams.enumerate_diagrams(family, m, n)
    assert len(hom) == expected
    assert len(set(hom)) == expected
    assert list(hom) == sorted(hom, key=Partition.sort_key)


def test_enumeration_matches_counting_sequences():
    for total in range(7):
        for m in range(total + 1):
            n = total - m
            assert len(diagrams.enumerate_diagrams(Family.PARTITION, m, n)) == utils.bell(total)
            assert len(diagrams.enumerate_diagrams(Family.BRAUER, m, n)) == utils.double_factorial_matchings(total)
            tl = diagrams.enumerate_diagrams(Family.TEMPERLEY_LIEB, m, n)
            assert len(tl) == (utils.catalan(total // 2) if total % 2 == 0 else 0)
            assert all(not diagrams.parity_clauses(a) for a in tl)


def test_enumeration_guard():
    with pytest.raises(SizeGuardError):
        diagrams.enumerate_diagrams(Family.PARTITION, 9, 9, max_size=16)


def test_enumeration_guard_from_environment():
    with patch.dict(os.environ, {MAX_SIZE_ENV: "4"}):
        with pytest.raises(SizeGuardError):
            diagrams.enumerate_diagrams(Family.BRAUER, 3, 3)
        assert len(diagrams.enumerate_diagrams(Family.BRAUER, 2, 2)) == 3


def test_random_diagrams_stay_in_family():
    rng = random.Random(7)
    for _ in range(50):
        assert diagrams.classify(diagrams.random_diagram(Family.TEMPERLEY_LIEB, 4, 6, rng)) is Family.TEMPERLEY_LIEB
        assert diagrams.in_family(diagrams.random_diagram(Family.BRAUER, 3, 5, rng), Family.BRAUER)
    with pytest.raises(DiagramError):
        diagrams.random_diagram(Family.BRAUER, 2, 1, rng)


def test_random_diagrams_are_reproducible():
    first = [diagrams.random_diagram(Family.PARTITION, 3, 3, random.Random(11)) for _ in range(3)]
    second = [diagrams.random_diagram(Family.PARTITION, 3, 3, random.Random(11)) for _ in range(3)]
    assert first == second


@given(partitions())
def test_identity_is_neutral(a):
    assert diagrams.compose(Partition.identity(a.m), a) == CompositionOutcome(a, 0)
    assert diagrams.compose(a, Partition.identity(a.n)) == CompositionOutcome(a, 0)


@given(composable_triples())
@settings(max_examples=200)
def test_associativity_and_twisting_identity(triple):
    a, b, c = triple
    ab, bc = diagrams.compose(a, b), diagrams.compose(b, c)
    ab_c, a_bc = diagrams.compose(ab.product, c), diagrams.compose(a, bc.product)
    assert ab_c.product == a_bc.product
    assert ab.floats + ab_c.floats == a_bc.floats + bc.floats


@given(partitions(), partitions())
def test_involution_is_antihomomorphism(a, b):
    assert diagrams.involution(diagrams.involution(a)) == a
    if a.n == b.m:
        out = diagrams.compose(a, b)
        back = diagrams.compose(diagrams.involution(b), diagrams.involution(a))
        assert back == CompositionOutcome(diagrams.involution(out.product), out.floats)


@given(partitions(max_row=2))
def test_regularity(a):
    aa = diagrams.compose(a, diagrams.involution(a)).product
    assert diagrams.compose(aa, a).product == a


class TestGenerators:
    def test_h_is_e_times_e_star(self):
        for n in range(2, 6):
            for i in range(1, n):
                e = diagrams.generator(GeneratorKind.E, i, n)
                e_star = diagrams.generator(GeneratorKind.E_STAR, i, n)
                assert e.shape == (n, n - 2)
                assert diagrams.compose(e, e_star) == CompositionOutcome(diagrams.generator(GeneratorKind.H, i, n), 0)
                assert diagrams.compose(e_star, e) == CompositionOutcome(Partition.identity(n - 2), 1)

    def test_generator_index_range(self):
        with pytest.raises(DiagramError, match="out of range"):
            diagrams.generator(GeneratorKind.E, 3, 3)

    def test_factorize_round_trip(self):
        for total in range(0, 9, 2):
            for m in range(total + 1):
                for a in diagrams.enumerate_diagrams(Family.TEMPERLEY_LIEB, m, total - m):
                    word = diagrams.factorize(a)
                    assert diagrams.multiply_generators(word, a.m).product == a

    def test_factorize_identity_is_empty(self):
        assert diagrams.factorize(Partition.identity(3)) == []

    def test_factorize_rejects_crossings(self):
        with pytest.raises(DiagramError):
            diagrams.factorize(parse("2,2:{1,2'}{2,1'}"))

    def test_cap_element(self):
        c = diagrams.cap_element(5, 1)
        assert c == parse("5,1:{1,1'}{2,3}{4,5}")
        assert diagrams.cap_element(1, 5) == diagrams.involution(c)
        out = diagrams.compose(diagrams.involution(c), c)
        assert out == CompositionOutcome(Partition.identity(1), 2)
        with pytest.raises(DiagramError):
            diagrams.cap_element(3, 2)


def test_parity_clauses_flag_violations():
    # A crossing matching breaks the transversal clause.
    assert "transversal" in diagrams.parity_clauses(parse("2,2:{1,2'}{2,1'}"))
    assert diagrams.parity_clauses(parse("4,4:{1,4}{2,3}{1',4'}{2',3'}")) == []


class TestTwisted:
    def test_compose_adds_twists_and_floats(self):
        a, b = parse(FIG_A), parse(FIG_B)
        out = diagrams.twisted_compose(TwistedElement(1, a), TwistedElement(2, b))
        assert out == TwistedElement(4, diagrams.compose(a, b).product)

    def test_truncation(self):
        a, b = parse(FIG_A), parse(FIG_B)
        assert diagrams.twisted_compose(TwistedElement(1, a), TwistedElement(1, b), d=2) == ZeroMorphism(4, 5)
        assert diagrams.twisted_compose(TwistedElement(0, a), TwistedElement(1, b), d=2) == TwistedElement(2, parse("4,5:{1,4}{2,3,1',4',5'}{2',3'}"))
        assert diagrams.twisted_compose(ZeroMorphism(4, 6), TwistedElement(0, b), d=1) == ZeroMorphism(4, 5)

    def test_zero_needs_truncation(self):
        with pytest.raises(DiagramError):
            diagrams.twisted_compose(ZeroMorphism(1, 1), TwistedElement(0, Partition.identity(1)))
        with pytest.raises(DiagramError):
            diagrams.twisted_compose(TwistedElement(3, Partition.identity(1)), TwistedElement(0, Partition.identity(1)), d=2)

    def test_involution_and_tensor(self):
        a = TwistedElement(1, parse(FIG_A))
        assert diagrams.twisted_involution(a) == TwistedElement(1, diagrams.involution(a.diagram))
        assert diagrams.twisted_involution(ZeroMorphism(2, 3)) == ZeroMorphism(3, 2)
        ident = TwistedElement(1, Partition.identity(1))
        assert diagrams.twisted_tensor(a, ident) == TwistedElement(2, diagrams.tensor_sum(a.diagram, ident.diagram))
        assert diagrams.twisted_tensor(a, ident, d=1) == ZeroMorphism(5, 7)

    def test_enumerate_twisted(self):
        plain = diagrams.enumerate_twisted(Family.PARTITION, 1, 1, max_twist=3)
        assert len(plain) == 2 * 4
        truncated = diagrams.enumerate_twisted(Family.PARTITION, 1, 1, max_twist=3, d=1)
        assert len(truncated) == 2 * 2 + 1
        assert truncated[-1] == ZeroMorphism(1, 1)
