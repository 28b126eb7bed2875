"""Exact data model: weighted graphs, divisors, and firing moves.

The value ring is the rationals (`fractions.Fraction`), so every comparison
and every arithmetic step in this package is exact; floats are rejected at
the boundaries because the strict thresholds the algorithms hinge on
(`> -1`, `<= -1`) do not survive rounding.

Vertices are labelled 0..n.  Vertex 0 is the distinguished base vertex
everywhere: firing vectors are integer vectors indexed by the remaining
vertices 1..n, and callers who want a different base vertex relabel first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an exact value to Fraction.  Floats raise."""
    if isinstance(value, float):
        raise TypeError(f"floats are not exact: {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class Divisor:
    """A rational value attached to every vertex of a graph."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))

    @staticmethod
    def of(values: Iterable[int | str | Fraction]) -> "Divisor":
        return Divisor(tuple(as_rational(v) for v in values))

    @staticmethod
    def zero(n_vertices: int) -> "Divisor":
        return Divisor((Fraction(0),) * n_vertices)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, vertex: int) -> Fraction:
        return self.values[vertex]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def degree(self) -> Fraction:
        """Sum of the values over all vertices."""
        return sum(self.values, Fraction(0))

    def _same_support(self, other: "Divisor") -> None:
        if len(self.values) != len(other.values):
            raise ValueError("divisors live on different vertex sets")

    def __add__(self, other: "Divisor") -> "Divisor":
        self._same_support(other)
        return Divisor(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._same_support(other)
        return Divisor(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Divisor":
        return Divisor(tuple(-a for a in self.values))

    def positive_part(self) -> "Divisor":
        """Pointwise max with zero."""
        zero = Fraction(0)
        return Divisor(tuple(v if v > 0 else zero for v in self.values))

    def negative_part(self) -> "Divisor":
        """Pointwise min with zero."""
        zero = Fraction(0)
        return Divisor(tuple(v if v < 0 else zero for v in self.values))

    def all_above(self, bound: int | Fraction) -> bool:
        """Strict pointwise comparison against a scalar."""
        return all(v > bound for v in self.values)

    def dominated_by(self, other: "Divisor") -> bool:
        """Pointwise <=."""
        self._same_support(other)
        return all(a <= b for a, b in zip(self.values, other.values))


def off_base(divisor: Divisor) -> tuple[Fraction, ...]:
    """The values away from the base vertex, as a vector indexed by 1..n."""
    return divisor.values[1:]


@dataclass(frozen=True)
class WeightedGraph:
    """Connected loop-free graph on vertices 0..n with symmetric nonnegative
    rational edge weights.  A zero weight means "no edge".

    Validated once at construction; immutable and hashable afterwards.
    """

    weights: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.weights)
        object.__setattr__(self, "weights", rows)
        n1 = len(rows)
        if n1 < 2:
            raise ValueError("need at least two vertices")
        if any(len(row) != n1 for row in rows):
            raise ValueError("weight matrix is not square")
        for i in range(n1):
            if rows[i][i] != 0:
                raise ValueError(f"loop at vertex {i}")
            for j in range(n1):
                w = rows[i][j]
                if isinstance(w, float):
                    raise TypeError(f"floats are not exact: {w!r}")
                if w < 0:
                    raise ValueError(f"negative weight between vertices {i} and {j}")
                if w != rows[j][i]:
                    raise ValueError(f"weights not symmetric at ({i}, {j})")
        object.__setattr__(
            self, "_degrees", tuple(sum(row, Fraction(0)) for row in rows)
        )
        if not self._is_connected():
            raise ValueError("graph not connected")

    @staticmethod
    def from_edges(
        n_vertices: int, edges: Iterable[tuple[int, int, int | str | Fraction]]
    ) -> "WeightedGraph":
        """Build from an edge list; duplicate pairs and nonpositive weights raise."""
        matrix = [[Fraction(0)] * n_vertices for _ in range(n_vertices)]
        seen: set[tuple[int, int]] = set()
        for i, j, w in edges:
            if not (0 <= i < n_vertices and 0 <= j < n_vertices):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            weight = as_rational(w)
            if weight <= 0:
                raise ValueError(f"edge ({i}, {j}) needs a positive weight")
            matrix[i][j] = weight
            matrix[j][i] = weight
        return WeightedGraph(tuple(tuple(row) for row in matrix))

    @property
    def n_vertices(self) -> int:
        return len(self.weights)

    def _check_vertex(self, j: int) -> None:
        if not 0 <= j < self.n_vertices:
            raise IndexError(f"vertex {j} out of range")

    def weight(self, i: int, j: int) -> Fraction:
        self._check_vertex(i)
        self._check_vertex(j)
        return self.weights[i][j]

    def degree(self, j: int) -> Fraction:
        """Total weight incident to vertex j."""
        self._check_vertex(j)
        return self._degrees[j]  # type: ignore[attr-defined]

    def genus(self) -> Fraction:
        """Total edge weight minus n; may be negative or fractional."""
        n1 = self.n_vertices
        total = Fraction(0)
        for i in range(n1):
            for j in range(i + 1, n1):
                total += self.weights[i][j]
        return total - (n1 - 1)

    def canonical_divisor(self) -> Divisor:
        """The divisor with value degree(v) - 2 at every vertex."""
        return Divisor(tuple(d - 2 for d in self._degrees))  # type: ignore[attr-defined]

    def principal_generator(self, j: int) -> Divisor:
        """Degree-zero divisor of firing vertex j once: degree(j) at j, -w_ij elsewhere."""
        self._check_vertex(j)
        values = [-w for w in self.weights[j]]
        values[j] = self.degree(j)
        return Divisor(tuple(values))

    def edges(self) -> Iterator[tuple[int, int, Fraction]]:
        """Positive-weight pairs (i, j, w) with i < j, in index order."""
        n1 = self.n_vertices
        for i in range(n1):
            for j in range(i + 1, n1):
                w = self.weights[i][j]
                if w > 0:
                    yield i, j, w

    def _is_connected(self) -> bool:
        n1 = self.n_vertices
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(n1):
                if v not in seen and self.weights[u][v] > 0:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == n1


def principal_divisor(graph: WeightedGraph, firing: Sequence[int]) -> Divisor:
    """The divisor of an integer firing vector over vertices 1..n.

    Firing vertex j a total of c_j times moves c_j * w_ij weight from j to
    each neighbour i; the result always has degree zero.
    """
    n = graph.n_vertices - 1
    if len(firing) != n:
        raise ValueError(f"firing vector needs length {n}, got {len(firing)}")
    values = [Fraction(0)] * graph.n_vertices
    for j, c in enumerate(firing, start=1):
        if not isinstance(c, int):
            raise TypeError(f"firing vectors are integer, got {c!r}")
        if c == 0:
            continue
        values[j] += c * graph.degree(j)
        row = graph.weights[j]
        for i in range(graph.n_vertices):
            if i != j:
                values[i] -= c * row[i]
    return Divisor(tuple(values))


def apply_firing(graph: WeightedGraph, divisor: Divisor, firing: Sequence[int]) -> Divisor:
    """Subtract the principal divisor of the firing vector; degree is preserved."""
    if len(divisor) != graph.n_vertices:
        raise ValueError("divisor does not match the graph")
    return divisor - principal_divisor(graph, firing)
