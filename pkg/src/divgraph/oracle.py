"""Brute-force cross-checks for the tests and the fuzz harness.

Everything here exists to disagree loudly with the production algorithms if
either side is wrong, so these routines deliberately avoid the production
code paths: they carry their own determinant-based solver, their own subset
logic, and their own permutation-formula enumeration.  All of them are
guarded to small instances; they are exponential by design.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Divisor, WeightedGraph
from .reduction import linear_system_nonempty

MAX_OFFBASE_VERTICES = 5
MAX_CUBE_VERTICES = 4
MAX_RANK_DEGREE = 24
MAX_BOX_POINTS = 500_000


class GuardRailError(ValueError):
    """An oracle was asked for an instance beyond its intended size."""


def _guard_offbase(graph: WeightedGraph, limit: int) -> int:
    n = graph.n_vertices - 1
    if n > limit:
        raise GuardRailError(f"oracle limited to {limit} non-base vertices, got {n}")
    return n


@dataclass(frozen=True)
class IntegerInstance:
    """A graph and divisor whose weights and values are all integers."""

    graph: WeightedGraph
    divisor: Divisor

    def __post_init__(self) -> None:
        for row in self.graph.weights:
            for w in row:
                if Fraction(w).denominator != 1:
                    raise ValueError(f"non-integer weight {w}")
        for v in self.divisor:
            if v.denominator != 1:
                raise ValueError(f"non-integer divisor value {v}")
        if len(self.divisor) != self.graph.n_vertices:
            raise ValueError("divisor does not match the graph")


def _det(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = Fraction(0)
    sign = 1
    for col in range(n):
        if matrix[0][col] != 0:
            minor = [
                [matrix[r][c] for c in range(n) if c != col] for r in range(1, n)
            ]
            total += sign * matrix[0][col] * _det(minor)
        sign = -sign
    return total


def _laplacian_rows(graph: WeightedGraph) -> list[list[Fraction]]:
    n1 = graph.n_vertices
    rows = []
    for i in range(1, n1):
        row = [-Fraction(graph.weights[i][j]) for j in range(1, n1)]
        row[i - 1] = graph.degree(i)
        rows.append(row)
    return rows


def _cramer_solve(matrix: list[list[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    n = len(matrix)
    d = _det(matrix)
    if d == 0:
        raise ArithmeticError("singular matrix in oracle solve")
    out = []
    for col in range(n):
        replaced = [
            [rhs[r] if c == col else matrix[r][c] for c in range(n)] for r in range(n)
        ]
        out.append(_det(replaced) / d)
    return out


def baker_norine_rank(instance: IntegerInstance) -> int:
    """Textbook recursive rank of an integer divisor: -1 on empty systems,
    else one more than the worst single-chip removal."""
    graph = instance.graph
    _guard_offbase(graph, MAX_OFFBASE_VERTICES)
    degree = instance.divisor.degree()
    if degree > MAX_RANK_DEGREE:
        raise GuardRailError(f"rank oracle limited to degree {MAX_RANK_DEGREE}")
    n1 = graph.n_vertices
    memo: dict[tuple[Fraction, ...], int] = {}

    def rank(values: tuple[Fraction, ...]) -> int:
        if sum(values) < 0:
            return -1
        cached = memo.get(values)
        if cached is not None:
            return cached
        if not linear_system_nonempty(graph, Divisor(values)):
            memo[values] = -1
            return -1
        result = 1 + min(
            rank(values[:v] + (values[v] - 1,) + values[v + 1 :]) for v in range(n1)
        )
        memo[values] = result
        return result

    return rank(instance.divisor.values)


def reduced_by_subsets(graph: WeightedGraph, divisor: Divisor) -> bool:
    """Literal reducedness: values > -1 off the base, and every nonempty set
    of non-base vertices drops some member to -1 or below when fired."""
    n = _guard_offbase(graph, MAX_OFFBASE_VERTICES)
    vertices = range(1, n + 1)
    if any(divisor[v] <= -1 for v in vertices):
        return False
    for size in range(1, n + 1):
        for subset in itertools.combinations(vertices, size):
            chosen = set(subset)
            blocked = False
            for v in vertices:
                fired = divisor[v]
                if v in chosen:
                    fired -= graph.degree(v)
                for j in chosen:
                    if j != v:
                        fired += graph.weights[j][v]
                if fired <= -1:
                    blocked = True
                    break
            if not blocked:
                return False
    return True


def enumerate_admissible_firings(
    graph: WeightedGraph, slack: Sequence[Fraction]
) -> frozenset[tuple[int, ...]]:
    """All nonnegative integer firings keeping slack - image strictly positive,
    found by scanning one unit beyond the solved upper-bound box."""
    n = _guard_offbase(graph, MAX_OFFBASE_VERTICES)
    if len(slack) != n:
        raise ValueError(f"slack needs length {n}")
    if any(s <= 0 for s in slack):
        raise ValueError("slack must be strictly positive")
    rows = _laplacian_rows(graph)
    bound = _cramer_solve(rows, list(slack))
    ranges = [range(0, math.floor(b) + 2) for b in bound]
    if math.prod(len(r) for r in ranges) > MAX_BOX_POINTS:
        raise GuardRailError("admissible-firing box too large for the oracle")
    members = set()
    for c in itertools.product(*ranges):
        ok = True
        for i in range(n):
            image = sum(rows[i][j] * c[j] for j in range(n))
            if slack[i] - image <= 0:
                ok = False
                break
        if ok:
            members.add(c)
    return frozenset(members)


def _formula_divisors(graph: WeightedGraph) -> list[tuple[Fraction, ...]]:
    """Permutation-formula enumeration of the extremal empty-system divisors,
    independent of the production implementation."""
    n1 = graph.n_vertices
    out: list[tuple[Fraction, ...]] = []
    for perm in itertools.permutations(range(1, n1)):
        values = [Fraction(-1)] * n1
        ok = True
        burnt = [0]
        for v in perm:
            s = sum(graph.weights[u][v] for u in burnt)
            if s <= 0:
                ok = False
                break
            values[v] = s - 1
            burnt.append(v)
        if ok:
            candidate = tuple(values)
            if candidate not in out:
                out.append(candidate)
    return out


def dimension_by_cube_scan(
    graph: WeightedGraph, divisor: Divisor, radius: int
) -> Fraction:
    """Minimise deg((D - N0 - firing)^+) by scanning integer cubes of the
    given radius around zero and around the rounded relaxed minimiser."""
    n = _guard_offbase(graph, MAX_CUBE_VERTICES)
    rows = _laplacian_rows(graph)
    base_weights = [graph.weights[0][j] for j in range(1, n + 1)]
    best: Optional[Fraction] = None
    for formula in _formula_divisors(graph):
        gap = [divisor[v] - formula[v] for v in range(graph.n_vertices)]
        relaxed = _cramer_solve(rows, gap[1:])
        centers = {(0,) * n, tuple(math.floor(q + Fraction(1, 2)) for q in relaxed)}
        for center in centers:
            for offset in itertools.product(range(-radius, radius + 1), repeat=n):
                c = [center[j] + offset[j] for j in range(n)]
                total = gap[0] + sum(base_weights[j] * c[j] for j in range(n))
                if total < 0:
                    total = Fraction(0)
                for i in range(n):
                    x = gap[i + 1] - sum(rows[i][j] * c[j] for j in range(n))
                    if x > 0:
                        total += x
                if best is None or total < best:
                    best = total
    assert best is not None
    return best


def nonempty_by_box_search(instance: IntegerInstance) -> bool:
    """Exhaustive integer emptiness test: look for a firing whose result is
    effective.  Sound box: an effective equivalent is pinned between zero and
    its own degree pointwise, and monotonicity turns that into firing bounds."""
    graph = instance.graph
    divisor = instance.divisor
    n = _guard_offbase(graph, MAX_CUBE_VERTICES)
    degree = divisor.degree()
    if degree < 0:
        return False
    rows = _laplacian_rows(graph)
    offbase = [divisor[v] for v in range(1, n + 1)]
    hi_exact = _cramer_solve(rows, offbase)
    lo_exact = _cramer_solve(rows, [v - degree for v in offbase])
    lo = [math.ceil(q) for q in lo_exact]
    hi = [math.floor(q) for q in hi_exact]
    if any(a > b for a, b in zip(lo, hi)):
        return False
    if math.prod(b - a + 1 for a, b in zip(lo, hi)) > MAX_BOX_POINTS:
        raise GuardRailError("emptiness search box too large for the oracle")
    base_weights = [graph.weights[0][j] for j in range(1, n + 1)]
    for c in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        base = divisor[0] + sum(base_weights[j] * c[j] for j in range(n))
        if base < 0:
            continue
        if all(
            offbase[i] - sum(rows[i][j] * c[j] for j in range(n)) >= 0 for i in range(n)
        ):
            return True
    return False


def find_equality_permutation(
    graph: WeightedGraph, divisor: Divisor
) -> Optional[tuple[int, ...]]:
    """A permutation realising the genus-bound equality pattern: each vertex
    in turn carries exactly its burnt-prefix weight minus one.  None if no
    permutation fits."""
    n = _guard_offbase(graph, MAX_OFFBASE_VERTICES)

    def extend(order: list[int], remaining: set[int]) -> Optional[tuple[int, ...]]:
        if not remaining:
            return tuple(order)
        for v in sorted(remaining):
            s = graph.weights[0][v] + sum(graph.weights[u][v] for u in order)
            if divisor[v] == s - 1:
                order.append(v)
                remaining.remove(v)
                found = extend(order, remaining)
                if found is not None:
                    return found
                order.pop()
                remaining.add(v)
        return None

    return extend([], set(range(1, n + 1)))
