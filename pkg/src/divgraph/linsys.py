"""Extremal empty-system divisors, linear-system dimension, and the
Riemann-Roch residual.

The divisors of degree (genus - 1) with empty linear systems form a single
lattice generated, up to firing, by finitely many reduced "extremal"
divisors, one per admissible permutation of the non-base vertices.  The
dimension of a linear system is the least degree of an effective divisor
whose removal empties it, and it is attained as the minimum of
deg((D - N)^+) with N ranging over that lattice.  That minimum is computed
here exactly: per extremal divisor, every integer firing that could do at
least as well as the incumbent lies in an explicit box (by monotonicity of
the base-deleted Laplacian), and the box is searched with sound pruning.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .core import Divisor, WeightedGraph, off_base, principal_divisor
from .lattice import reduced_laplacian, solve
from .reduction import reduce_divisor


@dataclass(frozen=True)
class ExtremalDivisor:
    """A reduced degree-(g-1) empty-system divisor with the permutation that
    builds it: value -1 at the base vertex and, along `witness_order`, the
    burnt-prefix weight minus one."""

    divisor: Divisor
    witness_order: tuple[int, ...]


def _order_divisor(graph: WeightedGraph, order: tuple[int, ...]) -> Divisor:
    """The divisor determined by a burn order: -1 at the base vertex, and at
    the k-th vertex of the order the weight into {base} + earlier vertices,
    minus one."""
    values = [Fraction(-1)] * graph.n_vertices
    for k, v in enumerate(order):
        s = graph.weights[0][v]
        for u in order[:k]:
            s += graph.weights[u][v]
        values[v] = s - 1
    return Divisor(tuple(values))


@lru_cache(maxsize=None)
def extremal_empty_divisors(graph: WeightedGraph) -> tuple[ExtremalDivisor, ...]:
    """All reduced degree-(g-1) divisors with empty linear systems.

    One candidate per permutation of the non-base vertices whose running
    burnt-prefix weights stay positive (other permutations produce a value
    <= -1 off the base and are not reduced); duplicates collapse to the
    first witness order.
    """
    n1 = graph.n_vertices
    found: list[ExtremalDivisor] = []
    seen: set[Divisor] = set()
    for perm in itertools.permutations(range(1, n1)):
        values = [Fraction(-1)] * n1
        ok = True
        for k, v in enumerate(perm):
            s = graph.weights[0][v]
            for u in perm[:k]:
                s += graph.weights[u][v]
            if s <= 0:
                ok = False
                break
            values[v] = s - 1
        if not ok:
            continue
        divisor = Divisor(tuple(values))
        if divisor in seen:
            continue
        seen.add(divisor)
        found.append(ExtremalDivisor(divisor, perm))
    return tuple(found)


def domination_witness(graph: WeightedGraph, divisor: Divisor) -> Optional[Divisor]:
    """A degree-(g-1) empty-system divisor dominating the input, when the
    input's linear system is empty; None otherwise.

    The reduced form's burn order yields an extremal divisor that dominates
    it pointwise; translating back by the reduction certificate preserves
    both the domination and the class.
    """
    result = reduce_divisor(graph, divisor)
    if result.reduced[0] > -1:
        return None
    extremal = _order_divisor(graph, result.burn_order)
    return extremal + (divisor - result.reduced)


def _round_nearest(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def dimension_witness(graph: WeightedGraph, divisor: Divisor) -> tuple[Fraction, Divisor]:
    """The dimension of the divisor's linear system together with a
    minimizing degree-(g-1) empty-system divisor N: deg((D - N)^+) attains
    the returned value.

    Empty systems short-circuit to zero with a dominating witness.  The
    general search walks every extremal divisor; for each, any firing c
    whose objective could match the incumbent u satisfies, coordinatewise,

        image(c) >= offbase(D - N0) - u    and
        image(c) <= offbase(D - N0) + (u - deg(D - N0)),

    because a single positive value is at most the positive-part degree and
    a single value is at least the total minus the positive part.  Solving
    both sides gives an integer box, scanned depth-first with an exact
    interval lower bound; incumbent updates keep the scan sound, so the
    final value is the true minimum.
    """
    result = reduce_divisor(graph, divisor)
    if result.reduced[0] <= -1:
        extremal = _order_divisor(graph, result.burn_order)
        return Fraction(0), extremal + (divisor - result.reduced)

    matrix = reduced_laplacian(graph)
    n = graph.n_vertices - 1
    base_weights = tuple(graph.weights[0][j] for j in range(1, n + 1))
    deg_gap = divisor.degree() - graph.genus() + 1
    floor_value = deg_gap if deg_gap > 0 else Fraction(0)
    best: Optional[Fraction] = None
    best_witness: Optional[Divisor] = None

    for elem in extremal_empty_divisors(graph):
        gap = divisor - elem.divisor
        gap0 = gap[0]
        gapv = off_base(gap)

        def objective(c: list[int] | tuple[int, ...]) -> Fraction:
            total = gap0
            for w, cj in zip(base_weights, c):
                total += w * cj
            if total < 0:
                total = Fraction(0)
            for i in range(n):
                x = gapv[i]
                row = matrix[i]
                for j in range(n):
                    x -= row[j] * c[j]
                if x > 0:
                    total += x
            return total

        relaxed = solve(matrix, gapv)
        center = tuple(_round_nearest(q) for q in relaxed)
        for start in ((0,) * n, center):
            candidate = _descend(objective, list(start), n)
            value = objective(candidate)
            if best is None or value < best:
                best = value
                best_witness = elem.divisor + principal_divisor(graph, tuple(candidate))
        assert best is not None
        if best == floor_value:
            break

        lo_exact = solve(matrix, tuple(v - best for v in gapv))
        hi_exact = solve(matrix, tuple(v + (best - deg_gap) for v in gapv))
        lo = [math.ceil(q) for q in lo_exact]
        hi = [math.floor(q) for q in hi_exact]
        if any(a > b for a, b in zip(lo, hi)):
            continue
        scan_center = [min(max(center[j], lo[j]), hi[j]) for j in range(n)]

        prefix = [0] * n

        def bound(upto: int) -> Fraction:
            # Interval lower bound with coordinates < upto fixed: minimise
            # each term over the remaining box independently.
            base = gap0
            for j in range(n):
                base += base_weights[j] * (prefix[j] if j < upto else lo[j])
            total = base if base > 0 else Fraction(0)
            for i in range(n):
                row = matrix[i]
                s = Fraction(0)
                for j in range(n):
                    if j < upto:
                        s += row[j] * prefix[j]
                    elif row[j] > 0:
                        s += row[j] * hi[j]
                    else:
                        s += row[j] * lo[j]
                x = gapv[i] - s
                if x > 0:
                    total += x
            return total if total > floor_value else floor_value

        def visit(depth: int) -> None:
            nonlocal best, best_witness
            if depth == n:
                value = objective(prefix)
                if value < best:
                    best = value
                    best_witness = elem.divisor + principal_divisor(graph, tuple(prefix))
                return
            for direction, first in ((1, scan_center[depth]), (-1, scan_center[depth] - 1)):
                v = first
                prev = None
                while lo[depth] <= v <= hi[depth]:
                    prefix[depth] = v
                    b = bound(depth + 1)
                    if b < best:
                        visit(depth + 1)
                    elif prev is not None and b >= prev:
                        # the bound is convex along this coordinate: once it
                        # is non-decreasing and no better than the incumbent,
                        # it stays that way
                        break
                    prev = b
                    v += direction

        visit(0)
        if best == floor_value:
            break

    assert best is not None and best_witness is not None
    return best, best_witness


def _descend(objective, start: list[int], n: int) -> list[int]:
    """Greedy unit-step descent; only used to tighten the incumbent.

    Besides single-coordinate steps, the all-ones diagonal is tried: its
    Laplacian image is just the weight vector into the base vertex, so it is
    the flat valley direction whenever the base is weakly attached, and pure
    coordinate steps stall on it.
    """
    current = list(start)
    value = objective(current)
    for _ in range(600):
        improved = False
        for j in range(n):
            for step in (1, -1):
                current[j] += step
                candidate = objective(current)
                if candidate < value:
                    value = candidate
                    improved = True
                else:
                    current[j] -= step
        for step in (1, -1):
            shifted = [c + step for c in current]
            candidate = objective(shifted)
            if candidate < value:
                value = candidate
                current = shifted
                improved = True
        if not improved:
            break
    return current


def linear_system_dimension(graph: WeightedGraph, divisor: Divisor) -> Fraction:
    """deg of the cheapest effective divisor whose removal empties the system."""
    return dimension_witness(graph, divisor)[0]


def riemann_roch_residual(graph: WeightedGraph, divisor: Divisor) -> Fraction:
    """dim(D) - dim(K - D) - (deg(D) + 1 - genus); identically zero."""
    canonical = graph.canonical_divisor()
    return (
        linear_system_dimension(graph, divisor)
        - linear_system_dimension(graph, canonical - divisor)
        - (divisor.degree() + 1 - graph.genus())
    )


def canonical_symmetry_check(graph: WeightedGraph) -> bool:
    """Whether K - N0 reduces back into the extremal set for every extremal N0."""
    canonical = graph.canonical_divisor()
    members = {elem.divisor for elem in extremal_empty_divisors(graph)}
    return all(
        reduce_divisor(graph, canonical - elem.divisor).reduced in members
        for elem in extremal_empty_divisors(graph)
    )
