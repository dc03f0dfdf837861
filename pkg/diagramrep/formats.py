"""Text, JSON and CSV codecs for diagrams, linear combinations and matrices.

The diagram text format is `m,n:{1,4}{2,3,4',5'}{1',2',6'}{3'}`: a mandatory
`m,n:` header followed by blocks of upper labels `i` and lower labels `j'`.
`0,0:` is the empty diagram.
"""

import csv
import io
import json
import re
import string
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from . import utils
from .diagrams import Partition, Twisted, TwistedElement, ZeroMorphism
from .errors import DiagramError, DiagramParseError
from .linear import LinearCombination
from .matrices import IndexedMatrix
from .semiring import get_semiring

_HEADER = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*:")
_VERTEX = re.compile(r"\s*(\d+)(')?\s*")
_TWISTED = re.compile(r"^\s*\(\s*(\d+)\s*,(.*)\)\s*$", re.DOTALL)
_ZERO = re.compile(r"^\s*zero\s*:\s*(\d+)\s*,\s*(\d+)\s*$")
_TERM = re.compile(r"\s*([+-]?\s*\d+(?:/\d+)?)\s*\*\s*")


class _Scanner:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = offset

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise DiagramParseError(f"Expected '{char}', found {found}", self.pos)
        self.pos += 1

    def header(self) -> Tuple[int, int]:
        match = _HEADER.match(self.text, self.pos)
        if not match:
            raise DiagramParseError("Expected an 'm,n:' header", self.pos)
        self.pos = match.end()
        return int(match.group(1)), int(match.group(2))

    def vertex(self) -> int:
        match = _VERTEX.match(self.text, self.pos)
        if not match:
            raise DiagramParseError("Expected a vertex such as 3 or 3'", self.pos)
        self.pos = match.end()
        value = int(match.group(1))
        return -value if match.group(2) else value

    def blocks(self, stop: str = "") -> Tuple[List[List[int]], List[int]]:
        """Blocks up to `stop` (or the end), with the offset each block starts at."""
        blocks, starts = [], []
        while self.peek() == "{":
            starts.append(self.pos)
            self.pos += 1
            block = [] if self.peek() == "}" else [self.vertex()]
            while self.peek() == ",":
                self.pos += 1
                block.append(self.vertex())
            self.expect("}")
            blocks.append(block)
        rest = self.peek()
        if rest and rest != stop:
            raise DiagramParseError(f"Unexpected {rest!r}", self.pos)
        return blocks, starts


def _vertex_text(v: int) -> str:
    return f"{-v}'" if v < 0 else str(v)


def _build(m: int, n: int, blocks: List[List[int]], starts: List[int], fallback: int) -> Partition:
    # Point at the offending block where the error can be pinned to one.
    for block, start in zip(blocks, starts):
        if not block:
            raise DiagramParseError("Empty block", start)
        for v in block:
            if v == 0 or v > m or -v > n:
                raise DiagramParseError(f"Vertex {_vertex_text(v)} is outside the {m},{n} header", start)
    try:
        return Partition.from_blocks(m, n, blocks)
    except DiagramError as e:
        raise DiagramParseError(str(e), fallback) from e


def parse_partition(text: str) -> Partition:
    scanner = _Scanner(text)
    m, n = scanner.header()
    blocks, starts = scanner.blocks()
    return _build(m, n, blocks, starts, len(text))


def format_partition(a: Partition) -> str:
    return str(a)


def parse_twisted(text: str) -> Twisted:
    """`(i, m,n:{...})`, `zero:m,n`, or a bare diagram (twist 0)."""
    zero = _ZERO.match(text)
    if zero:
        return ZeroMorphism(int(zero.group(1)), int(zero.group(2)))
    match = _TWISTED.match(text)
    if not match:
        return TwistedElement(0, parse_partition(text))
    inner = match.group(2)
    try:
        return TwistedElement(int(match.group(1)), parse_partition(inner))
    except DiagramParseError as e:
        raise DiagramParseError(e.detail, e.position + match.start(2)) from e


def format_twisted(x: Twisted) -> str:
    return str(x)


# JSON
def partition_to_json(a: Partition) -> Dict[str, Any]:
    return {"m": a.m, "n": a.n, "blocks": [list(b) for b in a.blocks]}


def partition_from_json(obj: Union[str, Dict[str, Any]]) -> Partition:
    """Accepts the dict form or its JSON text; lower vertices are negative."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise DiagramParseError(f"Invalid JSON: {e.msg}", e.pos) from e
    try:
        m, n, blocks = obj["m"], obj["n"], obj["blocks"]
    except (KeyError, TypeError) as e:
        raise DiagramParseError(f"Expected keys m, n and blocks: {e}", 0) from e
    if any(isinstance(k, bool) or not isinstance(k, int) for k in (m, n)):
        raise DiagramParseError(f"Row sizes must be integers, got {m!r},{n!r}", 0)
    try:
        return Partition.from_blocks(m, n, blocks)
    except (DiagramError, TypeError) as e:
        raise DiagramParseError(str(e), 0) from e


# Linear combinations
def _coefficient_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_linear(u: LinearCombination) -> str:
    """`m,n: 3*{1,2}{1',2'} + -1*{1,1'}{2,2'}`; the zero combination is `m,n: 0`."""
    if u.is_zero():
        return f"{u.m},{u.n}: 0"
    terms = " + ".join(f"{_coefficient_text(c)}*{str(a).split(':', 1)[1]}" for a, c in u.terms)
    return f"{u.m},{u.n}: {terms}"


def parse_linear(text: str, shape: Optional[Tuple[int, int]] = None) -> LinearCombination:
    """Parse a linear combination.

    Without an `m,n:` header the shape is `shape` when given, otherwise the
    largest upper and lower labels across all terms.
    """
    scanner = _Scanner(text)
    header = _HEADER.match(text)
    if header:
        m, n = scanner.header()
        if shape is not None and shape != (m, n):
            raise DiagramParseError(f"Header {m},{n} disagrees with the expected shape {shape}", 0)
    elif shape is not None:
        m, n = shape
    else:
        m = n = None

    if scanner.peek() == "0" and not text[scanner.pos + 1 :].strip():
        if m is None:
            raise DiagramParseError("The zero combination needs an 'm,n:' header", scanner.pos)
        return LinearCombination.zero(m, n)
    raw = []
    while True:
        scanner.skip_space()
        term_start = scanner.pos
        coeff = _TERM.match(text, scanner.pos)
        if coeff:
            try:
                value = Fraction(coeff.group(1).replace(" ", ""))
            except ZeroDivisionError as e:
                raise DiagramParseError("Zero denominator", term_start) from e
            scanner.pos = coeff.end()
        else:
            value = Fraction(1)
        if scanner.peek() != "{" and (m is None or m + n):
            raise DiagramParseError("Expected a coefficient and a diagram", scanner.pos)
        blocks, starts = scanner.blocks(stop="+")
        raw.append((blocks, starts, term_start, value))
        if scanner.peek() != "+":
            break
        scanner.pos += 1

    if m is None:
        labels = [v for blocks, *_ in raw for block in blocks for v in block]
        m = max([v for v in labels if v > 0], default=0)
        n = max([-v for v in labels if v < 0], default=0)
    terms = [(_build(m, n, blocks, starts, term_start), value) for blocks, starts, term_start, value in raw]
    return LinearCombination.from_terms(m, n, terms)


def linear_to_json(u: LinearCombination) -> Dict[str, Any]:
    return {
        "m": u.m,
        "n": u.n,
        "terms": [{"coefficient": _coefficient_text(c), "blocks": [list(b) for b in a.blocks]} for a, c in u.terms],
    }


def linear_from_json(obj: Dict[str, Any]) -> LinearCombination:
    m, n = int(obj["m"]), int(obj["n"])
    terms = [
        (partition_from_json({"m": m, "n": n, "blocks": t["blocks"]}), Fraction(str(t["coefficient"])))
        for t in obj.get("terms", [])
    ]
    return LinearCombination.from_terms(m, n, terms)


# Matrices
def matrix_to_json(M: IndexedMatrix) -> Dict[str, Any]:
    return {
        "semiring": M.semiring.name,
        "rows": [utils.members(x) for x in M.row_labels],
        "cols": [utils.members(y) for y in M.col_labels],
        "data": [[M.semiring.to_json(v) for v in row] for row in M.data],
    }


def matrix_from_json(obj: Dict[str, Any], row_ground: int, col_ground: int) -> IndexedMatrix:
    S = get_semiring(obj["semiring"])
    return IndexedMatrix(
        S,
        row_ground,
        col_ground,
        tuple(utils.mask_of(x) for x in obj["rows"]),
        tuple(utils.mask_of(y) for y in obj["cols"]),
        tuple(tuple(S.from_json(v) for v in row) for row in obj["data"]),
    )


def matrix_to_csv(M: IndexedMatrix) -> str:
    """Bitmask labels in the header row and first column."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["", *M.col_labels])
    for x, row in zip(M.row_labels, M.data):
        writer.writerow([x, *(M.semiring.format(v) for v in row)])
    return buffer.getvalue()


def matrix_to_text(M: IndexedMatrix) -> str:
    cols = [utils.format_subset(y) for y in M.col_labels]
    rows = [utils.format_subset(x) for x in M.row_labels]
    cells = [[M.semiring.format(v) for v in row] for row in M.data]
    width = max([len(c) for c in cols] + [len(v) for row in cells for v in row] + [1])
    label_width = max([len(r) for r in rows] + [1])
    lines = [" " * label_width + " | " + " ".join(c.rjust(width) for c in cols)]
    lines += [r.rjust(label_width) + " | " + " ".join(v.rjust(width) for v in row) for r, row in zip(rows, cells)]
    return "\n".join(lines)


def matrix_to_relation(M: IndexedMatrix) -> List[List[List[int]]]:
    """The zero-one view as a list of [X, Y] pairs of subsets."""
    return [[utils.members(x), utils.members(y)] for x, y in M.as_relation()]


def format_matrix(M: IndexedMatrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(matrix_to_json(M))
    if fmt == "csv":
        return matrix_to_csv(M).rstrip("\n")
    if fmt == "relation":
        return json.dumps(matrix_to_relation(M))
    if fmt == "text":
        return matrix_to_text(M)
    raise ValueError(f"Unknown matrix format '{fmt}'. Choose text, json, csv or relation")


# Pictures
def _letter(i: int) -> str:
    letters = string.ascii_uppercase
    return letters[i] if i < len(letters) else f"{letters[i % len(letters)]}{i // len(letters)}"


def render_ascii(a: Partition) -> str:
    """Two rows of labels with a letter per block under (and over) each vertex."""
    letters = {v: _letter(i) for i, block in enumerate(a.blocks) for v in block}
    upper = [str(i) for i in range(1, a.m + 1)]
    lower = [f"{j}'" for j in range(1, a.n + 1)]
    width = max([len(t) for t in upper + lower + list(letters.values())] + [1]) + 1

    def row(cells: List[str]) -> str:
        return "".join(c.rjust(width) for c in cells).rstrip()

    return "\n".join(
        [
            row(upper),
            row([letters[i] for i in range(1, a.m + 1)]),
            row([letters[-j] for j in range(1, a.n + 1)]),
            row(lower),
        ]
    )
