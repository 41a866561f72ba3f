"""Fixture graphs shared by the unit and integration tests."""
import itertools
from pathlib import Path

import networkx as nx

from treecut.graph import Graph

DATA = Path(__file__).parent / "data"

# 0-based ids of the example partition {1,2,3,4}, {5,6,7}, {8,9,10}
EXAMPLE_BLOCKS = ((0, 1, 2, 3), (4, 5, 6), (7, 8, 9))


def path_graph(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n):
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def star_graph(n):
    return Graph(n, tuple((0, i) for i in range(1, n)))


def random_connected_graph(n, p, seed):
    """First connected G(n, p) draw at or after ``seed``."""
    for s in itertools.count(seed):
        nxg = nx.gnp_random_graph(n, p, seed=s)
        if nx.is_connected(nxg):
            return Graph(n, tuple(nxg.edges()))


TRIANGLE = complete_graph(3)
CYCLE4 = cycle_graph(4)
CYCLE4_CHORD = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))


def small_suite():
    """Connected graphs on at most 6 nodes used for the exhaustive checks."""
    return {
        "single": Graph(1),
        "edge": path_graph(2),
        "path4": path_graph(4),
        "path6": path_graph(6),
        "triangle": TRIANGLE,
        "cycle4": CYCLE4,
        "cycle5": cycle_graph(5),
        "cycle6": cycle_graph(6),
        "cycle4_chord": CYCLE4_CHORD,
        "k4": complete_graph(4),
        "k5": complete_graph(5),
        "k6": complete_graph(6),
        "star5": star_graph(5),
        "random6a": random_connected_graph(6, 0.5, seed=11),
        "random6b": random_connected_graph(6, 0.4, seed=29),
    }
