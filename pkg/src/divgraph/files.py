"""Text formats for graphs and divisors.

Graph files:

    # comment lines and trailing comments start with '#'
    vertices 3
    edge 0 1 1
    edge 0 2 1/2
    edge 1 2 0.75

Divisor files hold one `v<i> <value>` line per vertex; omitted vertices
default to zero.  Accepted rational literals are integers, fractions `p/q`,
and finite decimals; output is always canonical `p/q` (or `p` when the
denominator is one).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Divisor, WeightedGraph

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*|\.\d+)?$")
_DIVISOR_LINE_RE = re.compile(r"^v(\d+)\s+(\S+)$")


class ParseError(ValueError):
    """Input text error, carrying the 1-based line number."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_rational(text: str) -> Fraction:
    """Parse `p`, `p/q`, or a finite decimal; everything else raises."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


def format_divisor(divisor: Divisor) -> str:
    return "(" + ", ".join(format_rational(v) for v in divisor) + ")"


def format_vector(vector: tuple[int, ...]) -> str:
    return "(" + ", ".join(str(v) for v in vector) + ")"


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def parse_graph(text: str) -> WeightedGraph:
    """Parse a graph file; raises ParseError for malformed lines and
    ValueError for graph-invariant violations (e.g. disconnected)."""
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError(1, "empty graph file")
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or fields[0] != "vertices":
        raise ParseError(number, f"expected 'vertices <count>', got {header!r}")
    try:
        n_vertices = int(fields[1])
    except ValueError:
        raise ParseError(number, f"vertex count is not an integer: {fields[1]!r}")
    if n_vertices < 2:
        raise ParseError(number, "need at least two vertices")
    edges = []
    seen = set()
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 4 or fields[0] != "edge":
            raise ParseError(number, f"expected 'edge <i> <j> <weight>', got {line!r}")
        try:
            i, j = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(number, f"edge endpoints must be integers: {line!r}")
        if not (0 <= i < j < n_vertices):
            raise ParseError(number, f"edge needs 0 <= i < j < {n_vertices}: {line!r}")
        if (i, j) in seen:
            raise ParseError(number, f"duplicate edge ({i}, {j})")
        seen.add((i, j))
        try:
            weight = parse_rational(fields[3])
        except ValueError as exc:
            raise ParseError(number, str(exc))
        if weight <= 0:
            raise ParseError(number, f"edge weight must be positive: {fields[3]}")
        edges.append((i, j, weight))
    return WeightedGraph.from_edges(n_vertices, edges)


def parse_divisor(text: str, n_vertices: int) -> Divisor:
    """Parse a divisor file for a graph with the given vertex count."""
    values = [Fraction(0)] * n_vertices
    assigned = set()
    for number, line in _meaningful_lines(text):
        match = _DIVISOR_LINE_RE.match(line)
        if not match:
            raise ParseError(number, f"expected 'v<i> <value>', got {line!r}")
        index = int(match.group(1))
        if index >= n_vertices:
            raise ParseError(number, f"vertex v{index} out of range")
        if index in assigned:
            raise ParseError(number, f"vertex v{index} assigned twice")
        assigned.add(index)
        try:
            values[index] = parse_rational(match.group(2))
        except ValueError as exc:
            raise ParseError(number, str(exc))
    return Divisor(tuple(values))


def serialize_graph(graph: WeightedGraph) -> str:
    lines = [f"vertices {graph.n_vertices}"]
    for i, j, w in graph.edges():
        lines.append(f"edge {i} {j} {format_rational(w)}")
    return "\n".join(lines) + "\n"


def serialize_divisor(divisor: Divisor) -> str:
    lines = [f"v{i} {format_rational(v)}" for i, v in enumerate(divisor)]
    return "\n".join(lines) + "\n"
