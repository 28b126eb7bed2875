"""Shared fixtures-in-spirit: small named graphs and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from divgraph.core import Divisor, WeightedGraph


def F(*args) -> Fraction:
    return Fraction(*args)


def two_vertex(weight="3/2") -> WeightedGraph:
    return WeightedGraph.from_edges(2, [(0, 1, Fraction(weight))])


def triangle() -> WeightedGraph:
    return WeightedGraph.from_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])


def path_graph(*weights) -> WeightedGraph:
    edges = [(i, i + 1, Fraction(w)) for i, w in enumerate(weights)]
    return WeightedGraph.from_edges(len(weights) + 1, edges)


def divisor(*values) -> Divisor:
    return Divisor.of(values)


rationals = st.builds(
    lambda n, d: Fraction(n, d), st.integers(-12, 12), st.integers(1, 4)
)

positive_rationals = st.builds(
    lambda n, d: Fraction(n, d), st.integers(1, 12), st.integers(1, 4)
)


@st.composite
def graphs(draw, max_vertices: int = 4, integer_weights: bool = False):
    n_vertices = draw(st.integers(2, max_vertices))
    weight_st = (
        st.integers(1, 3).map(Fraction) if integer_weights else positive_rationals
    )
    edges = []
    for v in range(1, n_vertices):
        parent = draw(st.integers(0, v - 1))
        edges.append((parent, v, draw(weight_st)))
    tree = {(min(i, j), max(i, j)) for i, j, _ in edges}
    for i in range(n_vertices):
        for j in range(i + 1, n_vertices):
            if (i, j) not in tree and draw(st.booleans()):
                edges.append((i, j, draw(weight_st)))
    return WeightedGraph.from_edges(n_vertices, edges)


@st.composite
def graph_divisor_pairs(draw, max_vertices: int = 4, integer_values: bool = False):
    graph = draw(graphs(max_vertices=max_vertices, integer_weights=integer_values))
    value_st = st.integers(-5, 5).map(Fraction) if integer_values else rationals
    values = draw(
        st.lists(value_st, min_size=graph.n_vertices, max_size=graph.n_vertices)
    )
    return graph, Divisor(tuple(values))


@st.composite
def firing_vectors(draw, n: int):
    return tuple(draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
