"""Base-deleted Laplacian, exact solves, equivalence, admissible firings."""

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from divgraph.core import Divisor, apply_firing
from divgraph.lattice import (
    SingularMatrixError,
    admissible_firing_bound,
    dominating_firing,
    is_admissible_firing,
    is_equivalent,
    laplacian_image,
    reduced_laplacian,
    solve,
)

from helpers import F, divisor, graphs, path_graph, rationals, triangle, two_vertex


class TestReducedLaplacian:
    def test_triangle(self):
        assert reduced_laplacian(triangle()) == ((F(2), F(-1)), (F(-1), F(2)))

    def test_single_edge(self):
        assert reduced_laplacian(two_vertex("3/2")) == ((F("3/2"),),)

    def test_path(self):
        assert reduced_laplacian(path_graph("1/2", "5/3")) == (
            (F("13/6"), F("-5/3")),
            (F("-5/3"), F("5/3")),
        )


class TestSolve:
    def test_scalar(self):
        assert solve(((F("3/2"),),), (F(3),)) == (F(2),)

    def test_triangle(self):
        matrix = reduced_laplacian(triangle())
        x = solve(matrix, (F(1), F(1)))
        assert x == (F(1), F(1))
        assert laplacian_image(triangle(), x) == (F(1), F(1))

    def test_zero(self):
        matrix = reduced_laplacian(triangle())
        assert solve(matrix, (F(0), F(0))) == (F(0), F(0))

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            solve(((F(1), F(1)), (F(1), F(1))), (F(1), F(0)))

    @settings(max_examples=60)
    @given(graphs(), st.data())
    def test_exact_inverse(self, graph, data):
        n = graph.n_vertices - 1
        rhs = tuple(data.draw(st.lists(rationals, min_size=n, max_size=n)))
        x = solve(reduced_laplacian(graph), rhs)
        assert laplacian_image(graph, x) == rhs

    @settings(max_examples=60)
    @given(graphs(), st.data())
    def test_monotone(self, graph, data):
        n = graph.n_vertices - 1
        rhs = tuple(
            data.draw(
                st.lists(
                    st.builds(lambda a, b: Fraction(a, b), st.integers(0, 12), st.integers(1, 4)),
                    min_size=n,
                    max_size=n,
                )
            )
        )
        assert all(x >= 0 for x in solve(reduced_laplacian(graph), rhs))


class TestIsEquivalent:
    def test_reflexive(self):
        d = divisor(1, "-1/3", 2)
        assert is_equivalent(triangle(), d, d) == (0, 0)

    def test_single_edge(self):
        got = is_equivalent(two_vertex("3/2"), divisor(-2, 2), divisor("-1/2", "1/2"))
        assert got == (1,)

    def test_degree_mismatch(self):
        assert is_equivalent(triangle(), divisor(0, 0, 0), divisor(1, 0, 0)) is None

    def test_same_degree_not_equivalent(self):
        got = is_equivalent(
            triangle(), divisor(0, 0, 0), divisor(F("-1/3"), F("1/3"), 0)
        )
        assert got is None

    @settings(max_examples=40)
    @given(graphs(), st.data())
    def test_recovers_firing(self, graph, data):
        n = graph.n_vertices - 1
        firing = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
        base = Divisor.zero(graph.n_vertices)
        shifted = apply_firing(graph, base, firing)
        assert is_equivalent(graph, base, shifted) == firing


class TestAdmissibleFirings:
    def test_zero_always_admissible_for_positive_slack(self):
        assert is_admissible_firing(two_vertex("3/2"), (F(1),), (0,))

    def test_rejected(self):
        assert not is_admissible_firing(two_vertex("3/2"), (F(1),), (1,))

    def test_accepted(self):
        assert is_admissible_firing(two_vertex("3/2"), (F(2),), (1,))

    def test_negative_firing_rejected(self):
        assert not is_admissible_firing(two_vertex("3/2"), (F(2),), (-1,))

    def test_bound_single_edge(self):
        assert admissible_firing_bound(two_vertex("3/2"), (F(3),)) == (F(2),)

    def test_bound_triangle(self):
        assert admissible_firing_bound(triangle(), (F(1), F(1))) == (F(1), F(1))

    @settings(max_examples=40)
    @given(graphs())
    def test_bound_of_laplacian_ones(self, graph):
        # the image of all-ones is the weight into the base vertex, so the
        # positivity precondition holds exactly when the base neighbours all
        n = graph.n_vertices - 1
        image = laplacian_image(graph, (1,) * n)
        assume(all(v > 0 for v in image))
        assert admissible_firing_bound(graph, image) == (F(1),) * n

    def test_bound_requires_positive_slack(self):
        with pytest.raises(ValueError):
            admissible_firing_bound(two_vertex("3/2"), (F(0),))


class TestDominatingFiring:
    def test_single_edge_value(self):
        # solve against 3 + 3/2 gives exactly 3, so the ceiling is 3
        c = dominating_firing(two_vertex("3/2"), (F(3),))
        assert c == (3,)
        assert laplacian_image(two_vertex("3/2"), c) == (F("9/2"),)

    def test_zero_target_contract(self):
        graph = triangle()
        c = dominating_firing(graph, (F(0), F(0)))
        assert all(v >= 0 for v in c)
        assert all(v >= 0 for v in laplacian_image(graph, c))

    def test_negative_target_rejected(self):
        with pytest.raises(ValueError):
            dominating_firing(two_vertex("3/2"), (F(-1),))

    def test_contract_on_random_targets(self):
        for case in range(50):
            rng = random.Random(f"dominate:{case}")
            from divgraph.generate import random_graph, random_nonnegative_vector

            graph = random_graph(rng, rng.randint(2, 5), "rational")
            n = graph.n_vertices - 1
            target = random_nonnegative_vector(rng, n, "rational")
            c = dominating_firing(graph, target)
            image = laplacian_image(graph, c)
            assert all(v >= 0 for v in c)
            assert all(image[i] >= target[i] for i in range(n))
