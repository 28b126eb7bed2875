"""The brute-force oracles themselves, plus oracle/production differentials."""

import random
from fractions import Fraction

import pytest

from divgraph.core import Divisor, WeightedGraph
from divgraph.generate import random_graph, random_instance, random_positive_vector
from divgraph.lattice import admissible_firing_bound, is_admissible_firing
from divgraph.linsys import linear_system_dimension
from divgraph.oracle import (
    GuardRailError,
    IntegerInstance,
    baker_norine_rank,
    dimension_by_cube_scan,
    enumerate_admissible_firings,
    find_equality_permutation,
    nonempty_by_box_search,
    reduced_by_subsets,
)
from divgraph.reduction import is_reduced, linear_system_nonempty, reduce_divisor

from helpers import F, divisor, triangle, two_vertex


class TestIntegerInstance:
    def test_accepts_integers(self):
        IntegerInstance(triangle(), divisor(1, -2, 0))

    def test_rejects_fractional_value(self):
        with pytest.raises(ValueError):
            IntegerInstance(triangle(), divisor(0, "1/2", 0))

    def test_rejects_fractional_weight(self):
        with pytest.raises(ValueError):
            IntegerInstance(two_vertex("3/2"), divisor(0, 0))


class TestBakerNorineRank:
    def test_cycle_zero_divisor(self):
        assert baker_norine_rank(IntegerInstance(triangle(), divisor(0, 0, 0))) == 0

    def test_cycle_canonical(self):
        canonical = triangle().canonical_divisor()
        assert baker_norine_rank(IntegerInstance(triangle(), canonical)) == 0

    def test_negative_degree(self):
        assert baker_norine_rank(IntegerInstance(triangle(), divisor(-1, 0, 0))) == -1

    def test_differential_against_dimension(self):
        for case in range(60):
            rng = random.Random(f"bn:{case}")
            graph, d = random_instance(rng, 3, "int")
            try:
                rank = baker_norine_rank(IntegerInstance(graph, d))
            except GuardRailError:
                continue
            assert linear_system_dimension(graph, d) == rank + 1

    def test_guard_rail(self):
        big = WeightedGraph.from_edges(8, [(i, i + 1, 1) for i in range(7)])
        with pytest.raises(GuardRailError):
            baker_norine_rank(IntegerInstance(big, Divisor.zero(8)))


class TestReducedBySubsets:
    def test_true_case(self):
        assert reduced_by_subsets(two_vertex("3/2"), divisor(0, "-1/2"))

    def test_false_case(self):
        assert not reduced_by_subsets(two_vertex("3/2"), divisor(-2, 2))

    def test_agreement_with_burning(self):
        for case in range(80):
            rng = random.Random(f"subsets:{case}")
            graph, d = random_instance(rng, 4, "rational")
            assert reduced_by_subsets(graph, d) == is_reduced(graph, d)
            reduced = reduce_divisor(graph, d).reduced
            assert reduced_by_subsets(graph, reduced)


class TestEnumerateAdmissibleFirings:
    def test_reduced_divisor_slack_gives_only_zero(self):
        graph = two_vertex("3/2")
        reduced = divisor(0, "-1/2")
        slack = tuple(reduced[v] + 1 for v in range(1, 2))
        assert enumerate_admissible_firings(graph, slack) == frozenset({(0,)})

    def test_single_edge(self):
        got = enumerate_admissible_firings(two_vertex("3/2"), (F(2),))
        assert got == frozenset({(0,), (1,)})

    def test_closure_and_bound(self):
        for case in range(40):
            rng = random.Random(f"aset:{case}")
            graph = random_graph(rng, rng.randint(2, 4), "rational")
            n = graph.n_vertices - 1
            slack = random_positive_vector(rng, n, "rational")
            members = enumerate_admissible_firings(graph, slack)
            bound = admissible_firing_bound(graph, slack)
            for c in members:
                assert is_admissible_firing(graph, slack, c)
                assert all(c[i] <= bound[i] for i in range(n))
            for a in members:
                for b in members:
                    joined = tuple(max(x, y) for x, y in zip(a, b))
                    assert joined in members

    def test_requires_positive_slack(self):
        with pytest.raises(ValueError):
            enumerate_admissible_firings(two_vertex("3/2"), (F(0),))


class TestDimensionByCubeScan:
    def test_extremal_element(self):
        assert dimension_by_cube_scan(two_vertex("3/2"), divisor(-1, "1/2"), 2) == 0

    def test_rational_differential(self):
        # radius 4 reaches the integer minimiser on every pinned seed here
        for case in range(40):
            rng = random.Random(f"cube:{case}")
            graph, d = random_instance(rng, 3, "rational")
            dim = linear_system_dimension(graph, d)
            scanned = dimension_by_cube_scan(graph, d, 4)
            assert scanned >= dim  # the scan covers a subset of the firings
            assert scanned == dim

    def test_integer_differential(self):
        for case in range(30):
            rng = random.Random(f"cubeint:{case}")
            graph, d = random_instance(rng, 3, "int")
            try:
                rank = baker_norine_rank(IntegerInstance(graph, d))
            except GuardRailError:
                continue
            assert dimension_by_cube_scan(graph, d, 3) == rank + 1

    def test_guard_rail(self):
        big = WeightedGraph.from_edges(7, [(i, i + 1, 1) for i in range(6)])
        with pytest.raises(GuardRailError):
            dimension_by_cube_scan(big, Divisor.zero(7), 1)


class TestNonemptyByBoxSearch:
    def test_agreement(self):
        for case in range(60):
            rng = random.Random(f"nebox:{case}")
            graph, d = random_instance(rng, 3, "int")
            instance = IntegerInstance(graph, d)
            try:
                boxed = nonempty_by_box_search(instance)
            except GuardRailError:
                continue
            assert boxed == linear_system_nonempty(graph, d)


class TestFindEqualityPermutation:
    def test_extremal_elements_realise_equality(self):
        from divgraph.linsys import extremal_empty_divisors

        for case in range(20):
            rng = random.Random(f"eq:{case}")
            graph = random_graph(rng, rng.randint(2, 4), "rational")
            for elem in extremal_empty_divisors(graph):
                assert find_equality_permutation(graph, elem.divisor) is not None

    def test_strict_inequality_has_no_permutation(self):
        assert find_equality_permutation(two_vertex("3/2"), divisor(0, "-1/2")) is None
