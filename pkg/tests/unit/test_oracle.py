from fractions import Fraction
from math import comb

import pytest

from treecut.exceptions import BudgetExceededError, DisconnectedGraphError
from treecut.graph import Graph, Partition, singletons, whole
from treecut.matrix_tree import count_spanning_trees
from treecut.oracle import (EnumerationBudget, brute_force_count, brute_force_law, brute_force_probability,
                            enumerate_connected_partitions, enumerate_spanning_trees, exact_partition_law,
                            exact_randmst_partition_law, exact_randmst_tree_distribution, randmst_audit,
                            restricted_growth_strings, stirling2, uniform_tree_law)
from treecut.probability import partition_probability
from treecut.sampler import SpanningTree

from tests.graphs import CYCLE4, CYCLE4_CHORD, TRIANGLE, complete_graph, cycle_graph, path_graph, small_suite, star_graph


def test_enumerate_spanning_trees_small():
    assert enumerate_spanning_trees(TRIANGLE) == [
        SpanningTree(3, ((0, 1), (0, 2))),
        SpanningTree(3, ((0, 1), (1, 2))),
        SpanningTree(3, ((0, 2), (1, 2))),
    ]
    assert len(enumerate_spanning_trees(CYCLE4)) == 4
    assert enumerate_spanning_trees(Graph(1)) == [SpanningTree(1, ())]


def test_enumerate_spanning_trees_example_graph(example_graph):
    trees = enumerate_spanning_trees(example_graph)
    assert len(trees) == 4546
    assert len(set(trees)) == 4546


def test_enumerate_spanning_trees_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        enumerate_spanning_trees(Graph(3, ((0, 1),)))


def test_stirling_numbers():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(10, 3) == 9330
    assert stirling2(0, 0) == 1


def test_restricted_growth_strings():
    assert list(restricted_growth_strings(3, 2)) == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]
    for n in range(1, 7):
        for k in range(1, n + 1):
            strings = list(restricted_growth_strings(n, k))
            assert len(strings) == len(set(strings)) == stirling2(n, k)


def test_connected_partitions_of_small_graphs():
    assert len(enumerate_connected_partitions(CYCLE4, 2)) == 6
    for n in range(2, 7):
        for k in range(1, n + 1):
            assert len(enumerate_connected_partitions(path_graph(n), k)) == comb(n - 1, k - 1)
    assert enumerate_connected_partitions(complete_graph(4), 1) == [whole(4)]
    assert enumerate_connected_partitions(complete_graph(4), 4) == [singletons(4)]
    assert len(enumerate_connected_partitions(complete_graph(5), 2)) == stirling2(5, 2)


def test_connected_partitions_are_distinct(example_graph):
    partitions = enumerate_connected_partitions(example_graph, 3)
    assert len(partitions) == len(set(partitions))
    assert all(c.k == 3 for c in partitions)


def test_brute_force_matches_closed_form():
    for name, g in small_suite().items():
        assert count_spanning_trees(g) <= 5000, name
        for k in range(1, g.n + 1):
            assert brute_force_law(g, k) == exact_partition_law(g, k), (name, k)


def test_each_compatible_tree_has_one_producing_subset():
    for name, g in small_suite().items():
        for k in range(1, g.n + 1):
            partitions = enumerate_connected_partitions(g, k)
            for c in (partitions[0], partitions[-1]):
                counted = brute_force_count(g, c)
                assert counted.pairs == counted.compatible_trees, (name, c)
                assert counted.probability == partition_probability(g, c), (name, c)


def test_brute_force_probability_on_cycle():
    assert brute_force_probability(CYCLE4, Partition(((0,), (1, 2, 3)))) == Fraction(1, 6)
    assert brute_force_probability(CYCLE4, Partition(((0, 2), (1, 3)))) == 0


def test_brute_force_count_example_partition(example_graph, example_partition):
    counted = brute_force_count(example_graph, example_partition)
    assert counted.total_trees == 4546
    assert counted.subsets_per_tree == 36
    # K-1 = 2 boundary edges are always the two deleted ones, so each compatible tree pairs once
    assert counted.pairs == counted.compatible_trees == 1152
    assert counted.probability == Fraction(16, 2273)


def test_brute_force_law_example_graph(example_graph):
    law = brute_force_law(example_graph, 3)
    assert sum(law.values()) == 1
    assert law == exact_partition_law(example_graph, 3)


def test_exact_law_is_normalized():
    for g in (CYCLE4_CHORD, cycle_graph(5), complete_graph(5)):
        for k in range(1, g.n + 1):
            assert sum(exact_partition_law(g, k).values()) == 1


def test_tree_budget():
    with pytest.raises(BudgetExceededError) as info:
        enumerate_spanning_trees(complete_graph(6), EnumerationBudget(max_trees=100))
    assert info.value.required == 1296
    assert info.value.limit == 100


def test_node_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_connected_partitions(path_graph(13), 2)
    with pytest.raises(BudgetExceededError):
        enumerate_connected_partitions(path_graph(8), 4, EnumerationBudget(max_nodes=7))


def test_set_partition_budget(example_graph):
    with pytest.raises(BudgetExceededError):
        enumerate_connected_partitions(example_graph, 3, EnumerationBudget(max_set_partitions=1000))


def test_budget_values_must_be_positive():
    with pytest.raises(ValueError):
        EnumerationBudget(max_trees=0)


def test_randmst_law_on_triangle_is_uniform():
    law = exact_randmst_tree_distribution(TRIANGLE)
    assert list(law.values()) == [Fraction(1, 3)] * 3
    assert randmst_audit(TRIANGLE).is_uniform


def test_randmst_law_on_a_tree():
    g = star_graph(5)
    assert exact_randmst_tree_distribution(g) == {SpanningTree(5, g.edges): Fraction(1)}


def test_randmst_is_not_uniform_on_cycle_with_chord():
    law = exact_randmst_tree_distribution(CYCLE4_CHORD)
    assert len(law) == 8
    assert sum(law.values()) == 1
    with_chord = {tree: p for tree, p in law.items() if (0, 2) in tree.edges}
    without_chord = {tree: p for tree, p in law.items() if (0, 2) not in tree.edges}
    assert set(with_chord.values()) == {Fraction(2, 15)}
    assert set(without_chord.values()) == {Fraction(7, 60)}
    audit = randmst_audit(CYCLE4_CHORD)
    assert not audit.is_uniform
    assert audit.uniform == Fraction(1, 8)
    assert audit.max_deviation == Fraction(1, 120)


def test_randmst_ordering_budget():
    with pytest.raises(BudgetExceededError):
        exact_randmst_tree_distribution(complete_graph(5))


def test_randmst_partition_law():
    for k in range(1, 5):
        law = exact_randmst_partition_law(CYCLE4_CHORD, k)
        assert sum(law.values()) == 1
        assert set(law) == set(enumerate_connected_partitions(CYCLE4_CHORD, k))
    assert exact_randmst_partition_law(TRIANGLE, 2) == exact_partition_law(TRIANGLE, 2)


def test_uniform_tree_law():
    law = uniform_tree_law(CYCLE4_CHORD)
    assert len(law) == 8
    assert set(law.values()) == {Fraction(1, 8)}
