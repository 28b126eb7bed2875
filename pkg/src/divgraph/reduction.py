"""Unique reduced representatives via burning, and linear-system emptiness.

A divisor is reduced when its values off the base vertex all exceed -1 and
no nonempty set of non-base vertices can fire without dropping some member
to -1 or below.  The burning search decides that condition: start a fire at
the base vertex, and burn any vertex whose value is covered by the weight
of its already-burnt neighbourhood.  If everything burns the divisor is
reduced; otherwise the surviving set can fire safely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .core import Divisor, WeightedGraph, apply_firing
from .lattice import dominating_firing

TieBreak = Callable[[list[int]], int]


@dataclass(frozen=True)
class BurnOutcome:
    """Result of one burning pass.

    `order` lists the vertices that burned, in order; `unburnt` is the
    surviving set, empty exactly when the burn covered everything.
    """

    order: tuple[int, ...]
    unburnt: frozenset[int]

    @property
    def all_burned(self) -> bool:
        return not self.unburnt


@dataclass(frozen=True)
class ReductionResult:
    """Reduced divisor with its certificate.

    `reduced` equals the input minus the principal divisor of `certificate`,
    and `burn_order` is the permutation produced by the final, complete burn.
    """

    reduced: Divisor
    certificate: tuple[int, ...]
    burn_order: tuple[int, ...]


def dhar_burn(
    graph: WeightedGraph, divisor: Divisor, tie_break: Optional[TieBreak] = None
) -> BurnOutcome:
    """Burning search from the base vertex.

    Requires divisor > -1 off the base vertex.  A vertex burns once its
    value is at most (burnt neighbourhood weight - 1); ties go to the lowest
    index unless a tie_break callable is supplied.
    """
    n1 = graph.n_vertices
    if len(divisor) != n1:
        raise ValueError("divisor does not match the graph")
    if any(divisor[v] <= -1 for v in range(1, n1)):
        raise ValueError("burning needs values > -1 off the base vertex")
    burnt_weight = {v: graph.weights[0][v] for v in range(1, n1)}
    remaining = set(range(1, n1))
    order: list[int] = []
    while remaining:
        burnable = sorted(
            v for v in remaining if divisor[v] <= burnt_weight[v] - 1
        )
        if not burnable:
            break
        v = burnable[0] if tie_break is None else burnable[tie_break(burnable)]
        order.append(v)
        remaining.remove(v)
        for u in remaining:
            burnt_weight[u] += graph.weights[v][u]
    return BurnOutcome(tuple(order), frozenset(remaining))


def is_reduced(graph: WeightedGraph, divisor: Divisor) -> bool:
    """True iff the divisor exceeds -1 off the base vertex and burns completely."""
    if any(divisor[v] <= -1 for v in range(1, graph.n_vertices)):
        return False
    return dhar_burn(graph, divisor).all_burned


def reduce_divisor(
    graph: WeightedGraph, divisor: Divisor, tie_break: Optional[TieBreak] = None
) -> ReductionResult:
    """The unique reduced divisor equivalent to the input, with certificate.

    Phase 1 lifts the divisor above -1 off the base vertex by un-firing a
    dominating firing of the negative part.  Phase 2 repeatedly burns and
    fires the surviving set; each such firing keeps the off-base values
    above -1, and the cumulative firing stays admissible for the lifted
    slack, which is bounded, so the loop terminates.
    """
    n1 = graph.n_vertices
    if len(divisor) != n1:
        raise ValueError("divisor does not match the graph")
    lift_target = tuple(
        -divisor[v] if divisor[v] < 0 else Fraction(0) for v in range(1, n1)
    )
    lift = dominating_firing(graph, lift_target)
    net = [-c for c in lift]
    current = apply_firing(graph, divisor, tuple(net))
    while True:
        outcome = dhar_burn(graph, current, tie_break)
        if outcome.all_burned:
            break
        step = tuple(1 if v in outcome.unburnt else 0 for v in range(1, n1))
        current = apply_firing(graph, current, step)
        for i, s in enumerate(step):
            net[i] += s
    return ReductionResult(current, tuple(net), outcome.order)


def linear_system_nonempty(graph: WeightedGraph, divisor: Divisor) -> bool:
    """Whether some equivalent divisor exceeds -1 everywhere.

    Equivalent to the reduced representative exceeding -1 at the base
    vertex, since it already does off the base.
    """
    return reduce_divisor(graph, divisor).reduced[0] > -1
