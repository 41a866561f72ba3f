import pytest

from treecut.graph import Partition
from treecut.io import dump_graph_text, load_graph_file

from tests.graphs import DATA, EXAMPLE_BLOCKS


@pytest.fixture(scope="session")
def example_graph():
    return load_graph_file(DATA / "example.adj", "adjacency-matrix")


@pytest.fixture(scope="session")
def example_partition():
    return Partition(EXAMPLE_BLOCKS)


@pytest.fixture
def write_graph(tmp_path):
    """Write a Graph as an edge-list file and return its path."""
    def write(g, name="graph.txt"):
        path = tmp_path / name
        path.write_text(dump_graph_text(g))
        return path
    return write
