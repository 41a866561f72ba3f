"""
Spanning-tree samplers and SampleConnectedPartition.

A connected K-partition is drawn by sampling a spanning tree, deleting K-1
of its edges uniformly without replacement and reading off the components.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from .exceptions import DisconnectedGraphError, PreconditionError
from .graph import Edge, Graph, Partition, canonical_edge, components, edge_graph, is_connected, union_find

logger = logging.getLogger(__name__)

_WORD_MAX = 2 ** 64 - 1


class SamplerMode(str, Enum):
    UNIFORM_TREE = "uniform-tree"
    RANDMST_TREE = "randmst-tree"


class RngState:
    """Seeded random stream identified by ``(seed, stream)``.

    Streams with the same seed and different stream indices are independent
    (numpy ``SeedSequence`` spawn keys). Floats and 64-bit words are drawn from the
    generator in blocks; the sequence depends only on seed and stream.
    An instance must not be shared between threads.
    """

    def __init__(self, seed: int, stream: int = 0, block: int = 4096):
        if seed < 0 or stream < 0:
            raise PreconditionError("seed and stream index must be nonnegative")
        self.seed = seed
        self.stream = stream
        self._generator = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))
        self._block = block
        self._floats: List[float] = []
        self._float_pos = 0
        self._words: List[int] = []
        self._word_pos = 0

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        if self._float_pos == len(self._floats):
            self._floats = self._generator.random(self._block).tolist()
            self._float_pos = 0
        u = self._floats[self._float_pos]
        self._float_pos += 1
        return u

    def _word(self) -> int:
        if self._word_pos == len(self._words):
            self._words = self._generator.integers(0, _WORD_MAX, size=self._block, dtype=np.uint64,
                                                   endpoint=True).tolist()
            self._word_pos = 0
        w = self._words[self._word_pos]
        self._word_pos += 1
        return w

    def randbelow(self, bound: int) -> int:
        """Exactly uniform integer in ``0..bound-1``, by rejection on 64-bit words."""
        if not 1 <= bound <= _WORD_MAX:
            raise PreconditionError(f"bound must lie in 1..2**64-1, got {bound}")
        # words below 2**64 mod bound would overweight the low residues
        floor = (_WORD_MAX + 1) % bound
        while True:
            w = self._word()
            if w >= floor:
                return w % bound


@dataclass(frozen=True, order=True)
class SpanningTree:
    """The n-1 edges of a spanning tree on nodes ``0..n-1``, canonically ordered."""
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(canonical_edge(u, v) for u, v in self.edges))
        if len(edges) != self.n - 1:
            raise PreconditionError(f"a spanning tree on {self.n} nodes has {self.n - 1} edges, got {len(edges)}")
        forest = union_find(self.n)
        for u, v in edges:
            if not 0 <= u < v < self.n:
                raise PreconditionError(f"edge ({u}, {v}) is not a proper edge on 0..{self.n - 1}")
            if forest[u] == forest[v]:
                raise PreconditionError(f"edge ({u}, {v}) closes a cycle")
            forest.union(u, v)
        object.__setattr__(self, "edges", edges)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def sample_spanning_tree_uniform(g: Graph, rng: RngState) -> SpanningTree:
    """Uniform spanning tree by Wilson's loop-erased random walks rooted at node 0.

    Overwriting the successor of a revisited node erases the loop closed
    at that node, in the order loops form.
    """
    _require_connected(g)
    adjacency = g.adjacency
    in_tree = [False] * g.n
    in_tree[0] = True
    successor = [-1] * g.n
    for start in range(g.n):
        u = start
        while not in_tree[u]:
            nbrs = adjacency[u]
            successor[u] = nbrs[rng.randbelow(len(nbrs))]
            u = successor[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = successor[u]
    return SpanningTree(g.n, tuple(canonical_edge(v, successor[v]) for v in range(1, g.n)))


def kruskal(n: int, edges: Sequence[Edge], order: Iterable[int]) -> SpanningTree:
    """Minimum spanning tree when each edge is weighted by its rank in ``order``."""
    ranked = edge_graph(n, ())
    for rank, index in enumerate(order):
        u, v = edges[index]
        ranked.add_edge(u, v, weight=rank)
    tree = nx.minimum_spanning_tree(ranked, weight="weight", algorithm="kruskal")
    return SpanningTree(n, tuple(tree.edges()))


def sample_spanning_tree_randmst(g: Graph, rng: RngState) -> SpanningTree:
    """Minimum spanning tree under i.i.d. uniform edge weights.

    Ties are broken by edge index. This law is not the uniform one in general.
    """
    _require_connected(g)
    weights = [rng.random() for _ in range(g.num_edges)]
    order = sorted(range(g.num_edges), key=lambda i: (weights[i], i))
    return kruskal(g.n, g.edges, order)


def sample_spanning_tree(g: Graph, rng: RngState,
                         mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE) -> SpanningTree:
    if SamplerMode(mode) is SamplerMode.RANDMST_TREE:
        return sample_spanning_tree_randmst(g, rng)
    return sample_spanning_tree_uniform(g, rng)


def choose_edges(edges: Sequence[Edge], count: int, rng: RngState) -> Tuple[Edge, ...]:
    """Uniform ``count``-subset of ``edges`` by a partial Fisher-Yates shuffle."""
    pool = list(edges)
    if not 0 <= count <= len(pool):
        raise PreconditionError(f"cannot choose {count} of {len(pool)} edges")
    for i in range(count):
        j = i + rng.randbelow(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(pool[:count])


def components_after_deletion(t: SpanningTree, removed: Iterable[Edge], k: Optional[int] = None) -> Partition:
    """Components of the forest left after deleting ``removed`` from ``t``.

    Deleting r distinct tree edges leaves exactly r+1 components, so the
    block count follows from ``removed``; pass ``k`` to have it checked.
    """
    cut = {canonical_edge(u, v) for u, v in removed}
    missing = cut.difference(t.edges)
    if missing:
        raise PreconditionError(f"edges {sorted(missing)} are not in the tree")
    if k is not None and len(cut) != k - 1:
        raise PreconditionError(f"a {k}-partition needs {k - 1} deleted edges, got {len(cut)}")
    return components(t.n, (e for e in t.edges if e not in cut))


def check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise PreconditionError(f"k must lie in 1..{g.n}, got {k}")


def sample_connected_partition(g: Graph, k: int, rng: RngState,
                               mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE) -> Partition:
    """Draw one connected k-partition of ``g``."""
    check_k(g, k)
    tree = sample_spanning_tree(g, rng, mode)
    return components_after_deletion(tree, choose_edges(tree.edges, k - 1, rng), k)
