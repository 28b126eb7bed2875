"""Seeded invariant fuzzing over random instances.

Each case draws a fresh graph and divisor from a stream derived from
(seed, case index), runs the whole invariant suite against them, and the
report aggregates one pass/fail line per property.  Output is a pure
function of the arguments: fixed seed, identical bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, TextIO

from . import generate, oracle
from .core import Divisor, WeightedGraph, apply_firing
from .files import parse_divisor, parse_graph, serialize_divisor, serialize_graph
from .lattice import (
    admissible_firing_bound,
    dominating_firing,
    is_admissible_firing,
    laplacian_image,
)
from .linsys import (
    canonical_symmetry_check,
    extremal_empty_divisors,
    domination_witness,
    linear_system_dimension,
    riemann_roch_residual,
)
from .reduction import is_reduced, linear_system_nonempty, reduce_divisor

Check = Callable[[WeightedGraph, Divisor, random.Random], Optional[str]]


def _check_round_trip(graph, divisor, rng):
    if parse_graph(serialize_graph(graph)) != graph:
        return "graph did not survive serialize/parse"
    if parse_divisor(serialize_divisor(divisor), graph.n_vertices) != divisor:
        return "divisor did not survive serialize/parse"
    return None


def _check_rr_residual(graph, divisor, rng):
    residual = riemann_roch_residual(graph, divisor)
    if residual != 0:
        return f"residual {residual} != 0"
    return None


def _check_reduce_idempotent(graph, divisor, rng):
    reduced = reduce_divisor(graph, divisor).reduced
    again = reduce_divisor(graph, reduced)
    if again.reduced != reduced:
        return "reducing a reduced divisor changed it"
    if any(c != 0 for c in again.certificate):
        return f"reduced input produced certificate {again.certificate}"
    return None


def _check_reduce_class_invariant(graph, divisor, rng):
    firing = generate.random_firing(rng, graph.n_vertices - 1)
    shifted = apply_firing(graph, divisor, firing)
    if reduce_divisor(graph, shifted).reduced != reduce_divisor(graph, divisor).reduced:
        return f"reduction depends on representative (firing {firing})"
    return None


def _check_certificate(graph, divisor, rng):
    result = reduce_divisor(graph, divisor)
    if apply_firing(graph, divisor, result.certificate) != result.reduced:
        return "certificate does not reproduce the reduced divisor"
    if not is_reduced(graph, result.reduced):
        return "reduce produced a non-reduced divisor"
    return None


def _check_genus_bound(graph, divisor, rng):
    reduced = reduce_divisor(graph, divisor).reduced
    offbase_sum = sum(reduced[v] for v in range(1, graph.n_vertices))
    genus = graph.genus()
    if offbase_sum > genus:
        return f"off-base sum {offbase_sum} exceeds genus {genus}"
    if offbase_sum == genus:
        if oracle.find_equality_permutation(graph, reduced) is None:
            return "genus equality without a realising permutation"
    return None


def _check_canonical_symmetry(graph, divisor, rng):
    if not canonical_symmetry_check(graph):
        return "extremal set is not symmetric under the canonical involution"
    return None


def _check_domination(graph, divisor, rng):
    witness = domination_witness(graph, divisor)
    if linear_system_nonempty(graph, divisor):
        if witness is not None:
            return "nonempty system received a domination witness"
        return None
    if witness is None:
        return "empty system without a domination witness"
    if not divisor.dominated_by(witness):
        return "witness does not dominate the divisor"
    if witness.degree() != graph.genus() - 1:
        return f"witness degree {witness.degree()} != genus - 1"
    members = {elem.divisor for elem in extremal_empty_divisors(graph)}
    if reduce_divisor(graph, witness).reduced not in members:
        return "witness does not reduce into the extremal set"
    return None


def _check_reduced_subset_oracle(graph, divisor, rng):
    reduced = reduce_divisor(graph, divisor).reduced
    if not oracle.reduced_by_subsets(graph, reduced):
        return "reduce output fails the all-subsets oracle"
    if oracle.reduced_by_subsets(graph, divisor) != is_reduced(graph, divisor):
        return "subset oracle disagrees with the burning test"
    return None


def _check_lattice_lemmas(graph, divisor, rng):
    n = graph.n_vertices - 1
    slack = generate.random_positive_vector(rng, n, "rational")
    target = generate.random_nonnegative_vector(rng, n, "rational")
    if n > oracle.MAX_CUBE_VERTICES:
        return None
    members = oracle.enumerate_admissible_firings(graph, slack)
    bound = admissible_firing_bound(graph, slack)
    for c in members:
        if any(c[i] > bound[i] for i in range(n)):
            return f"member {c} escapes the solved bound {bound}"
        if not is_admissible_firing(graph, slack, c):
            return f"oracle member {c} rejected by the membership test"
    pairs = sorted(members)[:60]  # closure check capped for runtime
    for a in pairs:
        for b in pairs:
            joined = tuple(max(x, y) for x, y in zip(a, b))
            if joined not in members:
                return f"max of {a} and {b} left the admissible set"
    firing = dominating_firing(graph, target)
    if any(c < 0 for c in firing):
        return f"dominating firing {firing} has a negative entry"
    image = laplacian_image(graph, firing)
    if any(image[i] < target[i] for i in range(n)):
        return f"dominating firing image {image} below target {target}"
    return None


def _check_rank_oracle(graph, divisor, rng):
    try:
        instance = oracle.IntegerInstance(graph, divisor)
    except ValueError:
        return None
    try:
        rank = oracle.baker_norine_rank(instance)
    except oracle.GuardRailError:
        return None
    dimension = linear_system_dimension(graph, divisor)
    if dimension != rank + 1:
        return f"dimension {dimension} != rank {rank} + 1"
    return None


_PROPERTIES: tuple[tuple[str, Check], ...] = (
    ("round-trip", _check_round_trip),
    ("rr-residual", _check_rr_residual),
    ("reduce-idempotent", _check_reduce_idempotent),
    ("reduce-class-invariant", _check_reduce_class_invariant),
    ("reduce-certificate", _check_certificate),
    ("genus-bound", _check_genus_bound),
    ("canonical-symmetry", _check_canonical_symmetry),
    ("domination", _check_domination),
    ("reduced-subset-oracle", _check_reduced_subset_oracle),
    ("lattice-lemmas", _check_lattice_lemmas),
    ("rank-oracle", _check_rank_oracle),
)


@dataclass
class Failure:
    prop: str
    case_index: int
    graph: WeightedGraph
    divisor: Divisor
    message: str


def _shrink(failure: Failure, check: Check, seed: int) -> tuple[WeightedGraph, Divisor]:
    """Greedy shrink: drop extra edges and zero divisor values while the
    property keeps failing.  Checks re-run on a fresh stream each attempt."""
    graph, divisor = failure.graph, failure.divisor

    def still_fails(g: WeightedGraph, d: Divisor) -> bool:
        return check(g, d, random.Random(f"shrink:{seed}")) is not None

    changed = True
    while changed:
        changed = False
        edges = list(graph.edges())
        for drop in range(len(edges)):
            kept = edges[:drop] + edges[drop + 1 :]
            try:
                candidate = WeightedGraph.from_edges(graph.n_vertices, kept)
            except ValueError:
                continue
            if still_fails(candidate, divisor):
                graph = candidate
                changed = True
                break
        if changed:
            continue
        for v in range(graph.n_vertices):
            if divisor[v] == 0:
                continue
            values = list(divisor.values)
            values[v] = Fraction(0)
            candidate = Divisor(tuple(values))
            if still_fails(graph, candidate):
                divisor = candidate
                changed = True
                break
    return graph, divisor


def run_fuzz(
    seed: int, count: int, profile: str, max_offbase: int, out: TextIO
) -> int:
    """Run the invariant suite on `count` seeded cases; 0 iff everything passed."""
    print(
        f"fuzz seed={seed} count={count} profile={profile} max-n={max_offbase}",
        file=out,
    )
    failures: dict[str, list[Failure]] = {name: [] for name, _ in _PROPERTIES}
    for index in range(count):
        rng = random.Random(f"{seed}:{index}")
        graph, divisor = generate.random_instance(rng, max_offbase, profile)
        for name, check in _PROPERTIES:
            message = check(graph, divisor, rng)
            if message is not None:
                failures[name].append(Failure(name, index, graph, divisor, message))
    for name, _ in _PROPERTIES:
        failed = failures[name]
        if failed:
            print(f"{name}: FAIL ({len(failed)} of {count} cases)", file=out)
        else:
            print(f"{name}: PASS ({count} cases)", file=out)
    first: Optional[Failure] = None
    for name, check in _PROPERTIES:
        for failure in failures[name]:
            print(
                f"replay: divgraph fuzz --seed {seed} --count {failure.case_index + 1}"
                f" --profile {profile} --max-n {max_offbase}"
                f"  # {name} at case {failure.case_index}: {failure.message}",
                file=out,
            )
            if first is None:
                first = failure
    if first is None:
        return 0
    check = dict(_PROPERTIES)[first.prop]
    graph, divisor = _shrink(first, check, seed)
    print(f"minimal failing instance for {first.prop}:", file=out)
    print("--- graph ---", file=out)
    out.write(serialize_graph(graph))
    print("--- divisor ---", file=out)
    out.write(serialize_divisor(divisor))
    return 1
