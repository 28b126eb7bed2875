"""The base-deleted Laplacian and exact rational linear algebra over it.

The matrix obtained by deleting the base vertex's row and column from the
weighted Laplacian is symmetric, invertible, and monotone: a nonnegative
image forces a nonnegative preimage.  Monotonicity is a known fact about
these matrices; rather than assuming it silently, `solve` re-asserts it on
every solve with a nonnegative right-hand side.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .core import Divisor, WeightedGraph, off_base

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


class SingularMatrixError(ArithmeticError):
    """The base-deleted Laplacian of a connected graph is never singular, so
    this signals a disconnected graph smuggled past validation."""


@lru_cache(maxsize=None)
def reduced_laplacian(graph: WeightedGraph) -> Matrix:
    """Weighted Laplacian with the base vertex deleted, indexed by 1..n."""
    n1 = graph.n_vertices
    rows = []
    for i in range(1, n1):
        row = [-graph.weights[i][j] for j in range(1, n1)]
        row[i - 1] = graph.degree(i)
        rows.append(tuple(row))
    return tuple(rows)


def laplacian_image(graph: WeightedGraph, vector: Sequence[int | Fraction]) -> Vector:
    """Matrix-vector product of the base-deleted Laplacian with `vector`."""
    matrix = reduced_laplacian(graph)
    n = len(matrix)
    if len(vector) != n:
        raise ValueError(f"vector needs length {n}, got {len(vector)}")
    return tuple(
        sum((row[j] * vector[j] for j in range(n)), Fraction(0)) for row in matrix
    )


def solve(matrix: Matrix, rhs: Sequence[Fraction]) -> Vector:
    """Exact solve by Gaussian elimination with partial pivoting.

    When the right-hand side is entrywise nonnegative the solution must be
    nonnegative too (monotonicity); that is checked here on every such call.
    """
    n = len(matrix)
    if len(rhs) != n:
        raise ValueError(f"right-hand side needs length {n}, got {len(rhs)}")
    aug = [list(matrix[i]) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[pivot][col] == 0:
            raise SingularMatrixError("singular matrix: is the graph connected?")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(col + 1, n):
            factor = aug[r][col] / aug[col][col]
            if factor == 0:
                continue
            for c in range(col, n + 1):
                aug[r][c] -= factor * aug[col][c]
    solution = [Fraction(0)] * n
    for row in range(n - 1, -1, -1):
        acc = aug[row][n]
        for c in range(row + 1, n):
            acc -= aug[row][c] * solution[c]
        solution[row] = acc / aug[row][row]
    if all(v >= 0 for v in rhs) and any(x < 0 for x in solution):
        raise ArithmeticError("monotone matrix produced a negative solution")
    return tuple(solution)


def is_equivalent(
    graph: WeightedGraph, first: Divisor, second: Divisor
) -> Optional[tuple[int, ...]]:
    """Integer firing vector c with first - second = sum_j c_j * H_j, if one exists.

    Equal degrees plus an integral solve against the off-base difference pin
    the base coordinate automatically, so no separate check is needed there.
    """
    if first.degree() != second.degree():
        return None
    diff = first - second
    x = solve(reduced_laplacian(graph), off_base(diff))
    if any(v.denominator != 1 for v in x):
        return None
    return tuple(int(v) for v in x)


def is_admissible_firing(
    graph: WeightedGraph, slack: Sequence[Fraction], firing: Sequence[int]
) -> bool:
    """True iff firing >= 0 and slack - (Laplacian @ firing) stays strictly positive."""
    n = graph.n_vertices - 1
    if len(slack) != n or len(firing) != n:
        raise ValueError(f"vectors need length {n}")
    if any(c < 0 for c in firing):
        return False
    image = laplacian_image(graph, firing)
    return all(slack[i] - image[i] > 0 for i in range(n))


def admissible_firing_bound(graph: WeightedGraph, slack: Sequence[Fraction]) -> Vector:
    """Coordinatewise upper bound on every admissible firing for a positive slack.

    The bound is the exact preimage of the slack; monotonicity makes it
    dominate every member.
    """
    if any(s <= 0 for s in slack):
        raise ValueError("slack must be strictly positive")
    return solve(reduced_laplacian(graph), slack)


def dominating_firing(graph: WeightedGraph, target: Sequence[Fraction]) -> tuple[int, ...]:
    """Nonnegative integer firing whose Laplacian image dominates target >= 0.

    Constructive recipe: solve against target plus the degree vector and take
    ceilings.  The ceiling error lies in [0, 1) per coordinate, and its
    Laplacian image costs at most one degree vector, which the padding paid
    for up front.
    """
    n = graph.n_vertices - 1
    if len(target) != n:
        raise ValueError(f"target needs length {n}, got {len(target)}")
    if any(t < 0 for t in target):
        raise ValueError("target must be nonnegative")
    padded = tuple(target[i] + graph.degree(i + 1) for i in range(n))
    exact = solve(reduced_laplacian(graph), padded)
    return tuple(math.ceil(q) for q in exact)
