"""Tests for the text, JSON and CSV codecs."""

import json
from fractions import Fraction

import pytest

from . import diagrams, formats, rep
from .diagrams import Family, Partition, TwistedElement, ZeroMorphism
from .errors import DiagramError, DiagramParseError
from .linear import LinearCombination
from .matrices import OrderKind
from .semiring import INTEGER, NEG_INF, TROPICAL
from .verify import FIGURE_A, P2_EXAMPLES


@pytest.mark.parametrize("total", range(6))
def test_text_and_json_round_trip(total):
    for m in range(total + 1):
        for a in diagrams.enumerate_diagrams(Family.PARTITION, m, total - m):
            assert formats.parse_partition(formats.format_partition(a)) == a
            assert formats.partition_from_json(json.dumps(formats.partition_to_json(a))) == a


def test_parse_tolerates_whitespace_and_order():
    a = formats.parse_partition(" 2 , 2 : { 2', 1 } {2 ,1'} ")
    assert a == Partition.from_blocks(2, 2, [[1, -2], [2, -1]])
    assert str(a) == "2,2:{1,2'}{2,1'}"


def test_empty_diagram():
    assert formats.parse_partition("0,0:") == Partition.identity(0)


@pytest.mark.parametrize(
    "text, position, message",
    [
        ("2,2{1,1'}", 0, "header"),
        ("2,2:{1,1'}{2,2'", 15, "Expected '}'"),
        ("2,2:{1,1'}{}{2,2'}", 10, "Empty block"),
        ("2,2:{1,3'}{2,1'}{2'}", 4, "outside"),
        ("2,2:{1,1'}{x}", 11, "vertex"),
        ("2,2:{1,1'}{2,2'} trailing", 17, "Unexpected"),
        ("2,2:{1,1'}{2'}", 14, "not covered"),
    ],
)
def test_parse_errors_report_positions(text, position, message):
    with pytest.raises(DiagramParseError, match=message) as exc:
        formats.parse_partition(text)
    assert exc.value.position == position
    assert f"(at position {position})" in str(exc.value)


def test_parse_twisted():
    a = formats.parse_partition(FIGURE_A)
    assert formats.parse_twisted(f"(2, {FIGURE_A})") == TwistedElement(2, a)
    assert formats.parse_twisted(FIGURE_A) == TwistedElement(0, a)
    assert formats.parse_twisted("zero:4,5") == ZeroMorphism(4, 5)
    assert formats.format_twisted(TwistedElement(1, Partition.identity(1))) == "(1, 1,1:{1,1'})"
    assert formats.format_twisted(ZeroMorphism(2, 0)) == "zero:2,0"


def test_parse_twisted_shifts_error_positions():
    with pytest.raises(DiagramParseError) as exc:
        formats.parse_twisted("(1, 1,1:{1,1'}{})")
    assert exc.value.position == 14


def test_partition_from_json_rejects_bad_input():
    with pytest.raises(DiagramParseError, match="Invalid JSON"):
        formats.partition_from_json("{")
    with pytest.raises(DiagramParseError, match="keys"):
        formats.partition_from_json({"m": 1})
    with pytest.raises(DiagramParseError):
        formats.partition_from_json({"m": 1, "n": 1, "blocks": [[1]]})


@pytest.mark.parametrize(
    "obj",
    [
        {"m": 1, "n": 1, "blocks": [[1.0, -1]]},
        {"m": 1, "n": 1, "blocks": [[True, -1]]},
        {"m": 2, "n": 0, "blocks": [[1.0, 2]]},
        {"m": 1, "n": 1, "blocks": [["1", -1]]},
        {"m": 1.0, "n": 1, "blocks": [[1, -1]]},
    ],
)
def test_partition_from_json_requires_integer_labels(obj):
    with pytest.raises(DiagramParseError, match="integer"):
        formats.partition_from_json(obj)
    with pytest.raises(DiagramParseError, match="integer"):
        formats.partition_from_json(json.dumps(obj))


def test_from_blocks_rejects_non_integer_vertices():
    with pytest.raises(DiagramError, match="not an integer"):
        Partition.from_blocks(1, 1, [[1.0, -1]])
    with pytest.raises(DiagramError, match="not an integer"):
        Partition.from_blocks(1, 1, [[True, -1]])


class TestLinear:
    def test_format(self):
        a = formats.parse_partition("2,2:{1,2}{1',2'}")
        b = Partition.identity(2)
        u = LinearCombination.from_terms(2, 2, [(a, 3), (b, -1)])
        assert formats.format_linear(u) == "2,2: 3*{1,2}{1',2'} + -1*{1,1'}{2,2'}"
        assert formats.format_linear(LinearCombination.zero(1, 1)) == "1,1: 0"

    def test_round_trip(self):
        text = "2,2: 3*{1,2}{1',2'} + -1/2*{1,1'}{2,2'} + {1}{2}{1',2'}"
        u = formats.parse_linear(text)
        assert u.coefficient(Partition.identity(2)) == Fraction(-1, 2)
        assert formats.parse_linear(formats.format_linear(u)) == u
        assert formats.linear_from_json(json.loads(json.dumps(formats.linear_to_json(u)))) == u

    def test_shape(self):
        assert formats.parse_linear("{1,1'}", shape=(1, 1)) == LinearCombination.of(Partition.identity(1))
        assert formats.parse_linear("1,1: 0").is_zero()
        assert formats.parse_linear("0,0: 2*").coefficient(Partition.identity(0)) == 2
        with pytest.raises(DiagramParseError, match="header"):
            formats.parse_linear("0")
        with pytest.raises(DiagramParseError, match="disagrees"):
            formats.parse_linear("1,1: {1,1'}", shape=(2, 2))

    def test_shape_inferred_without_header(self):
        u = formats.parse_linear("3*{1,2}{1',2'} + -1*{1,1'}{2,2'}")
        assert (u.m, u.n) == (2, 2)
        assert u == formats.parse_linear("2,2: 3*{1,2}{1',2'} + -1*{1,1'}{2,2'}")
        w = formats.parse_linear("{1,2}{1',2',3'} + 2*{1,1'}{2}{2'}{3'}")
        assert (w.m, w.n) == (2, 3)
        assert formats.parse_linear("{1,1'}") == LinearCombination.of(Partition.identity(1))

    def test_like_terms_merge(self):
        u = formats.parse_linear("1,1: 2*{1,1'} + -2*{1,1'}")
        assert u.is_zero()


class TestMatrices:
    def test_json(self):
        M = rep.phi(formats.parse_partition(P2_EXAMPLES["a"][0]), INTEGER)
        obj = formats.matrix_to_json(M)
        assert obj["semiring"] == "int"
        assert obj["rows"] == [[], [1], [2], [1, 2]]
        assert obj["data"][0] == [1, 0, 1, 0]
        assert formats.matrix_from_json(obj, 2, 2) == M

    def test_json_keeps_tropical_zero(self):
        M = rep.phi(Partition.identity(1), TROPICAL)
        obj = json.loads(formats.format_matrix(M, "json"))
        assert obj["data"] == [[0, None], [None, 0]]
        assert formats.matrix_from_json(obj, 1, 1).entry(1, 0) is NEG_INF

    def test_csv(self):
        M = rep.phi(Partition.identity(1))
        assert formats.format_matrix(M, "csv") == ",0,1\n0,1,0\n1,0,1"

    def test_relation(self):
        M = rep.phi(Partition.identity(1))
        assert json.loads(formats.format_matrix(M, "relation")) == [[[], []], [[1], [1]]]

    def test_text_uses_the_row_order(self):
        M = rep.phi(Partition.identity(2), order=OrderKind.PARITY)
        lines = formats.format_matrix(M, "text").splitlines()
        assert len(lines) == 5
        assert lines[1].split("|")[0].strip() == "{1}"

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="Unknown matrix format"):
            formats.format_matrix(rep.phi(Partition.identity(1)), "xml")


def test_render_ascii():
    picture = formats.render_ascii(formats.parse_partition("2,3:{1,2'}{2}{1',3'}"))
    assert picture.splitlines() == ["  1  2", "  A  B", "  C  A  C", " 1' 2' 3'"]
