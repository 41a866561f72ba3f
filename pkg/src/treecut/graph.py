"""
Graph, multigraph and partition types plus the structural operations on them.

Nodes are the contiguous ids ``0..n-1``. Every type here is immutable once
constructed, so instances can be shared freely and used as cache keys.
Connectivity and union-find work is delegated to ``networkx``.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import InvalidGraphError, InvalidPartitionError, PreconditionError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
IntMatrix = Tuple[Tuple[int, ...], ...]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_graph(n: int, edges: Iterable[Edge]) -> nx.Graph:
    """A fresh ``nx.Graph`` on nodes ``0..n-1`` holding ``edges``."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    return nxg


def union_find(n: int, edges: Iterable[Edge] = ()) -> UnionFind:
    """Union-find over ``0..n-1`` with ``edges`` already merged."""
    forest = UnionFind(range(n))
    for u, v in edges:
        forest.union(u, v)
    return forest


def components(n: int, edges: Iterable[Edge]) -> "Partition":
    """Connected components of ``(0..n-1, edges)`` as a partition."""
    return Partition(tuple(tuple(c) for c in nx.connected_components(edge_graph(n, edges))))


@dataclass(frozen=True, order=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    ``edges`` may be given in any order and orientation; it is stored as a
    sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidGraphError(f"node count must be a positive integer, got {self.n!r}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"self loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            e = canonical_edge(u, v)
            if e in seen:
                raise InvalidGraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        nbrs: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(row)) for row in nbrs)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def to_networkx(self) -> nx.Graph:
        """Mutable ``nx.Graph`` copy; isolated nodes are kept."""
        return edge_graph(self.n, self.edges)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph on ``k`` nodes, stored as a dense multiplicity matrix."""
    k: int
    matrix: IntMatrix = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix) if self.matrix else ()
        if not rows:
            rows = tuple((0,) * self.k for _ in range(self.k))
        if len(rows) != self.k or any(len(row) != self.k for row in rows):
            raise InvalidGraphError(f"multiplicity matrix must be {self.k}x{self.k}")
        for i in range(self.k):
            if rows[i][i] != 0:
                raise InvalidGraphError(f"self loop of multiplicity {rows[i][i]} at node {i}")
            for j in range(i + 1, self.k):
                if rows[i][j] != rows[j][i]:
                    raise InvalidGraphError(f"multiplicity ({i}, {j}) is not symmetric")
                if rows[i][j] < 0:
                    raise InvalidGraphError(f"negative multiplicity at ({i}, {j})")
        object.__setattr__(self, "matrix", rows)

    def mult(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    @property
    def num_edges(self) -> int:
        return sum(self.matrix[i][j] for i in range(self.k) for j in range(i + 1, self.k))


@dataclass(frozen=True, order=True)
class Partition:
    """Unlabeled partition of ``0..n-1`` into nonempty blocks.

    Blocks are stored sorted, and ordered by their smallest id, so two
    partitions are equal exactly when they group the nodes the same way.
    """
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if not blocks:
            raise InvalidPartitionError("a partition needs at least one block")
        if any(not b for b in blocks):
            raise InvalidPartitionError("partition blocks must be nonempty")
        ids = [v for b in blocks for v in b]
        if len(set(ids)) != len(ids):
            raise InvalidPartitionError("partition blocks overlap")
        if set(ids) != set(range(len(ids))):
            raise InvalidPartitionError(f"blocks do not cover nodes 0..{len(ids) - 1}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def block_of(self) -> Tuple[int, ...]:
        owner = [0] * self.n
        for index, block in enumerate(self.blocks):
            for v in block:
                owner[v] = index
        return tuple(owner)

    def check_covers(self, g: Graph) -> None:
        if self.n != g.n:
            raise InvalidPartitionError(
                f"partition covers {self.n} nodes but the graph has {g.n}")


def whole(n: int) -> Partition:
    return Partition((tuple(range(n)),))


def singletons(n: int) -> Partition:
    return Partition(tuple((v,) for v in range(n)))


def _node_set(g: Graph, nodes: Iterable[int]) -> List[int]:
    chosen = sorted(set(nodes))
    if not chosen:
        raise PreconditionError("node set must be nonempty")
    if chosen[0] < 0 or chosen[-1] >= g.n:
        raise PreconditionError(f"node set has ids outside 0..{g.n - 1}")
    return chosen


def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.to_networkx())


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph induced by ``nodes``, relabeled by ascending original id.

    Returns the subgraph and the map from new ids to original ids.
    """
    original = _node_set(g, nodes)
    relabel = {old: new for new, old in enumerate(original)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(original), tuple(edges)), tuple(original)


def boundary_edges(g: Graph, s: Iterable[int]) -> Tuple[Edge, ...]:
    """Edges with exactly one endpoint in ``s``."""
    inside = set(_node_set(g, s))
    if len(inside) == g.n:
        raise PreconditionError("boundary of the full node set is undefined")
    return tuple(e for e in g.edges if (e[0] in inside) != (e[1] in inside))


def contract(g: Graph, c: Partition) -> Multigraph:
    """Collapse every block of ``c`` to one node; intra-block edges are dropped."""
    c.check_covers(g)
    owner = c.block_of
    counts = [[0] * c.k for _ in range(c.k)]
    for u, v in g.edges:
        a, b = owner[u], owner[v]
        if a != b:
            counts[a][b] += 1
            counts[b][a] += 1
    return Multigraph(c.k, tuple(tuple(row) for row in counts))


def laplacian(g: Union[Graph, Multigraph]) -> IntMatrix:
    """Degree matrix minus adjacency; multiplicities act as edge weights."""
    if isinstance(g, Multigraph):
        rows = [[-x for x in row] for row in g.matrix]
        for i in range(g.k):
            rows[i][i] = sum(g.matrix[i])
        return tuple(tuple(row) for row in rows)
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
    for v in range(g.n):
        rows[v][v] = g.degree(v)
    return tuple(tuple(row) for row in rows)


def from_adjacency(matrix: Sequence[Sequence[int]]) -> Graph:
    """Build a Graph from a symmetric 0/1 matrix with zero diagonal."""
    n = len(matrix)
    edges = []
    for i in range(n):
        if len(matrix[i]) != n:
            raise InvalidGraphError(f"row {i} has {len(matrix[i])} entries, expected {n}")
        if matrix[i][i] != 0:
            raise InvalidGraphError(f"nonzero diagonal entry at node {i}")
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise InvalidGraphError(f"matrix is not symmetric at ({i}, {j})")
            if matrix[i][j] not in (0, 1):
                raise InvalidGraphError(f"entry ({i}, {j}) must be 0 or 1")
            if matrix[i][j]:
                edges.append((i, j))
    return Graph(n, tuple(edges))
