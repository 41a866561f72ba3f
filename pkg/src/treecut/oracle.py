"""
Brute-force ground truth for small graphs.

Exhaustive spanning-tree and connected-partition enumeration, direct
probabilities by counting (tree, deleted edge set) pairs, and the exact law
of the random-weight minimum spanning tree by sweeping every edge ordering.
All enumeration is guarded by an explicit budget checked before any work.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, List

import networkx as nx

from .exceptions import BudgetExceededError, DisconnectedGraphError
from .graph import Edge, Graph, Partition, edge_graph, induced_subgraph, is_connected, union_find
from .matrix_tree import count_spanning_trees
from .probability import partition_probability
from .sampler import SpanningTree, check_k, components_after_deletion, kruskal

logger = logging.getLogger(__name__)

MAX_ORDERING_EDGES = 9


@dataclass(frozen=True)
class EnumerationBudget:
    max_nodes: int = 12
    max_trees: int = 100_000
    max_set_partitions: int = 10 ** 7

    def __post_init__(self):
        for name in ("max_nodes", "max_trees", "max_set_partitions"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def check_nodes(self, g: Graph) -> None:
        if g.n > self.max_nodes:
            raise BudgetExceededError(
                f"graph has {g.n} nodes, enumeration budget allows {self.max_nodes}",
                required=g.n, limit=self.max_nodes)

    def check_trees(self, g: Graph) -> int:
        self.check_nodes(g)
        t = count_spanning_trees(g)
        if t > self.max_trees:
            raise BudgetExceededError(
                f"graph has {t} spanning trees, enumeration budget allows {self.max_trees}",
                required=t, limit=self.max_trees)
        return t


DEFAULT_BUDGET = EnumerationBudget()


@dataclass(frozen=True)
class BruteForceCount:
    """Raw counts behind a brute-force probability."""
    partition: Partition
    pairs: int
    compatible_trees: int
    total_trees: int
    subsets_per_tree: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.pairs, self.total_trees * self.subsets_per_tree)


@dataclass(frozen=True)
class RandmstAudit:
    """Exact random-MST tree law next to the uniform law 1/t."""
    tree_count: int
    law: Dict[SpanningTree, Fraction]

    @property
    def uniform(self) -> Fraction:
        return Fraction(1, self.tree_count)

    @property
    def is_uniform(self) -> bool:
        return len(self.law) == self.tree_count and all(p == self.uniform for p in self.law.values())

    @property
    def max_deviation(self) -> Fraction:
        return max(abs(p - self.uniform) for p in self.law.values())


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def enumerate_spanning_trees(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> List[SpanningTree]:
    """Every spanning tree of ``g`` exactly once, in canonical order.

    Branches on each edge in turn: contract it when it joins two components
    of the partial forest, then delete it when the remaining edges still
    connect the graph.
    """
    _require_connected(g)
    expected = budget.check_trees(g)
    edges = g.edges
    m, target = len(edges), g.n - 1
    chosen: List[Edge] = []
    trees: List[SpanningTree] = []

    def extend(i: int) -> None:
        if len(chosen) == target:
            trees.append(SpanningTree(g.n, tuple(chosen)))
            return
        if m - i < target - len(chosen):
            return
        u, v = edges[i]
        forest = union_find(g.n, chosen)
        if forest[u] != forest[v]:
            chosen.append(edges[i])
            extend(i + 1)
            chosen.pop()
        if nx.is_connected(edge_graph(g.n, chosen + list(edges[i + 1:]))):
            extend(i + 1)

    extend(0)
    logger.debug("enumerated %d spanning trees (determinant says %d)", len(trees), expected)
    return sorted(trees)


def stirling2(n: int, k: int) -> int:
    """Number of set partitions of n elements into k blocks."""
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def restricted_growth_strings(n: int, k: int):
    """Restricted growth strings of length n using exactly k labels, in lexicographic order."""
    labels = [0] * n

    def grow(i: int, used: int):
        if i == n:
            if used == k:
                yield tuple(labels)
            return
        if k - used > n - i:
            return
        for label in range(min(used + 1, k)):
            labels[i] = label
            yield from grow(i + 1, max(used, label + 1))

    if n:
        yield from grow(1, 1)


def enumerate_connected_partitions(g: Graph, k: int,
                                   budget: EnumerationBudget = DEFAULT_BUDGET) -> List[Partition]:
    """All connected k-partitions of ``g``, canonical and duplicate free."""
    _require_connected(g)
    check_k(g, k)
    budget.check_nodes(g)
    scanned = stirling2(g.n, k)
    if scanned > budget.max_set_partitions:
        raise BudgetExceededError(
            f"{scanned} set partitions to scan, budget allows {budget.max_set_partitions}",
            required=scanned, limit=budget.max_set_partitions)
    found = []
    for labels in restricted_growth_strings(g.n, k):
        blocks: List[List[int]] = [[] for _ in range(k)]
        for v, label in enumerate(labels):
            blocks[label].append(v)
        if all(is_connected(induced_subgraph(g, block)[0]) for block in blocks):
            found.append(Partition(tuple(tuple(b) for b in blocks)))
    logger.debug("%d of %d set partitions into %d blocks are connected", len(found), scanned, k)
    return found


def brute_force_count(g: Graph, c: Partition, budget: EnumerationBudget = DEFAULT_BUDGET) -> BruteForceCount:
    """Count (tree, deleted edge set) pairs producing ``c`` over all trees and subsets."""
    c.check_covers(g)
    trees = enumerate_spanning_trees(g, budget)
    cuts = c.k - 1
    pairs = compatible = 0
    for tree in trees:
        hits = sum(1 for removed in combinations(tree.edges, cuts)
                   if components_after_deletion(tree, removed) == c)
        pairs += hits
        compatible += 1 if hits else 0
    return BruteForceCount(c, pairs, compatible, len(trees), comb(g.n - 1, cuts))


def brute_force_probability(g: Graph, c: Partition, budget: EnumerationBudget = DEFAULT_BUDGET) -> Fraction:
    return brute_force_count(g, c, budget).probability


def brute_force_law(g: Graph, k: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> Dict[Partition, Fraction]:
    """Law of SampleConnectedPartition by tallying every (tree, subset) pair once."""
    check_k(g, k)
    trees = enumerate_spanning_trees(g, budget)
    tally: Dict[Partition, int] = defaultdict(int)
    for tree in trees:
        for removed in combinations(tree.edges, k - 1):
            tally[components_after_deletion(tree, removed)] += 1
    total = len(trees) * comb(g.n - 1, k - 1)
    return {c: Fraction(count, total) for c, count in sorted(tally.items())}


def exact_partition_law(g: Graph, k: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> Dict[Partition, Fraction]:
    """Closed-form probabilities over every connected k-partition."""
    return {c: partition_probability(g, c) for c in enumerate_connected_partitions(g, k, budget)}


def exact_randmst_tree_distribution(g: Graph,
                                    budget: EnumerationBudget = DEFAULT_BUDGET) -> Dict[SpanningTree, Fraction]:
    """Exact law of the minimum spanning tree under i.i.d. continuous edge weights.

    Every ordering of the edges is equally likely, so greedy selection over
    all |E|! orderings gives the law exactly.
    """
    _require_connected(g)
    budget.check_nodes(g)
    m = g.num_edges
    if m > MAX_ORDERING_EDGES:
        raise BudgetExceededError(
            f"{m} edges give {factorial(m)} orderings, limit is {MAX_ORDERING_EDGES} edges",
            required=m, limit=MAX_ORDERING_EDGES)
    tally: Dict[SpanningTree, int] = defaultdict(int)
    for order in permutations(range(m)):
        tally[kruskal(g.n, g.edges, order)] += 1
    orderings = factorial(m)
    return {tree: Fraction(count, orderings) for tree, count in sorted(tally.items())}


def exact_randmst_partition_law(g: Graph, k: int,
                                budget: EnumerationBudget = DEFAULT_BUDGET) -> Dict[Partition, Fraction]:
    """Law of partitions when step one uses the random-weight minimum spanning tree."""
    check_k(g, k)
    subsets = comb(g.n - 1, k - 1)
    law: Dict[Partition, Fraction] = defaultdict(Fraction)
    for tree, p in exact_randmst_tree_distribution(g, budget).items():
        for removed in combinations(tree.edges, k - 1):
            law[components_after_deletion(tree, removed)] += p / subsets
    return dict(sorted(law.items()))


def randmst_audit(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> RandmstAudit:
    return RandmstAudit(count_spanning_trees(g), exact_randmst_tree_distribution(g, budget))


def uniform_tree_law(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> Dict[SpanningTree, Fraction]:
    trees = enumerate_spanning_trees(g, budget)
    return {tree: Fraction(1, len(trees)) for tree in trees}
