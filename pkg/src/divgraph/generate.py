"""Deterministic random instances for the fuzz harness and the test suites.

All draws are integer draws from a caller-supplied `random.Random`, so a
fixed seed replays the exact same stream; no floats are involved anywhere.
Graphs are built connected by construction: a random spanning tree first,
then extra weighted edges.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Divisor, WeightedGraph

PROFILES = ("int", "rational")
MAX_DENOMINATOR = 4
MAX_WEIGHT = 3
MAX_VALUE = 5
EXTRA_EDGE_PERCENT = 35


def _check_profile(profile: str) -> None:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")


def random_weight(rng: random.Random, profile: str) -> Fraction:
    """Positive weight up to MAX_WEIGHT; rational profile draws denominators
    up to MAX_DENOMINATOR."""
    _check_profile(profile)
    if profile == "int":
        return Fraction(rng.randint(1, MAX_WEIGHT))
    den = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(1, MAX_WEIGHT * den), den)


def random_value(rng: random.Random, profile: str) -> Fraction:
    """Divisor value in [-MAX_VALUE, MAX_VALUE]."""
    _check_profile(profile)
    if profile == "int":
        return Fraction(rng.randint(-MAX_VALUE, MAX_VALUE))
    den = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(-MAX_VALUE * den, MAX_VALUE * den), den)


def random_graph(rng: random.Random, n_vertices: int, profile: str) -> WeightedGraph:
    """Connected graph: spanning tree plus extra edges with some probability."""
    if n_vertices < 2:
        raise ValueError("need at least two vertices")
    edges = []
    tree_pairs = set()
    for v in range(1, n_vertices):
        u = rng.randrange(v)
        tree_pairs.add((u, v))
        edges.append((u, v, random_weight(rng, profile)))
    for i in range(n_vertices):
        for j in range(i + 1, n_vertices):
            if (i, j) in tree_pairs:
                continue
            if rng.randrange(100) < EXTRA_EDGE_PERCENT:
                edges.append((i, j, random_weight(rng, profile)))
    return WeightedGraph.from_edges(n_vertices, edges)


def random_divisor(rng: random.Random, n_vertices: int, profile: str) -> Divisor:
    return Divisor(tuple(random_value(rng, profile) for _ in range(n_vertices)))


def random_instance(
    rng: random.Random, max_offbase: int, profile: str
) -> tuple[WeightedGraph, Divisor]:
    """Graph with 1..max_offbase non-base vertices, plus a matching divisor."""
    if max_offbase < 1:
        raise ValueError("need at least one non-base vertex")
    n_vertices = rng.randint(2, max_offbase + 1)
    graph = random_graph(rng, n_vertices, profile)
    return graph, random_divisor(rng, n_vertices, profile)


def random_firing(rng: random.Random, n: int, bound: int = 3) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def random_positive_vector(
    rng: random.Random, n: int, profile: str
) -> tuple[Fraction, ...]:
    """Strictly positive vector with entries up to MAX_WEIGHT."""
    _check_profile(profile)
    out = []
    for _ in range(n):
        if profile == "int":
            out.append(Fraction(rng.randint(1, MAX_WEIGHT)))
        else:
            den = rng.randint(1, MAX_DENOMINATOR)
            out.append(Fraction(rng.randint(1, MAX_WEIGHT * den), den))
    return tuple(out)


def random_nonnegative_vector(
    rng: random.Random, n: int, profile: str
) -> tuple[Fraction, ...]:
    """Nonnegative vector with entries up to 2 * MAX_VALUE."""
    _check_profile(profile)
    out = []
    for _ in range(n):
        if profile == "int":
            out.append(Fraction(rng.randint(0, 2 * MAX_VALUE)))
        else:
            den = rng.randint(1, MAX_DENOMINATOR)
            out.append(Fraction(rng.randint(0, 2 * MAX_VALUE * den), den))
    return tuple(out)
