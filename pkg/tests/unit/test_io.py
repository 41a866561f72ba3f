import json

import pytest

from treecut.exceptions import GraphParseError, PartitionParseError
from treecut.graph import Graph, Multigraph, Partition
from treecut.io import (dump_graph_text, dumps, graph_to_dict, load_graph, load_graph_file, load_partition,
                        load_partition_file, multigraph_to_dict, partition_to_dict)

from tests.graphs import DATA, EXAMPLE_BLOCKS, TRIANGLE, small_suite


def test_edge_list_is_one_based_and_canonical():
    g = load_graph("1 2\n2 3\n1 3\n")
    assert g == TRIANGLE
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_edge_list_header_comments_and_blank_lines():
    source = "# a path\nn 4\n\n1 2  # first\n2 3\n3 4\n"
    g = load_graph(source, "edge-list")
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (2, 3))


def test_edge_list_header_allows_isolated_nodes():
    g = load_graph("n 1\n")
    assert g.n == 1 and g.edges == ()
    assert load_graph("n 3\n1 2\n").n == 3


@pytest.mark.parametrize("source", [
    "",
    "1 2 3\n",
    "1 x\n",
    "1 2\n2 1\n",
    "n 2\n1 3\n",
    "0 1\n",
    "1 1\n",
    "1 2\nn 2\n",
])
def test_edge_list_errors(source):
    with pytest.raises(GraphParseError):
        load_graph(source, "edge-list")


def test_adjacency_matrix_example_file():
    g = load_graph_file(DATA / "example.adj", "adjacency-matrix")
    assert g.n == 10
    assert g.num_edges == 17
    assert sum(g.degree(v) for v in range(10)) == 34


def test_adjacency_matrix_accepts_whitespace():
    g = load_graph("0 1 1\n1 0 1\n1 1 0\n", "adjacency-matrix")
    assert g == TRIANGLE


@pytest.mark.parametrize("source", [
    "0 1\n0 0\n",
    "1 1\n1 0\n",
    "0 1 1\n1 0 1\n",
    "0 2\n2 0\n",
    "",
])
def test_adjacency_matrix_errors(source):
    with pytest.raises(GraphParseError):
        load_graph(source, "adjacency-matrix")


def test_missing_graph_file(tmp_path):
    with pytest.raises(GraphParseError):
        load_graph_file(tmp_path / "nope.txt")


def test_dump_graph_text_round_trips():
    for name, g in small_suite().items():
        assert load_graph(dump_graph_text(g)) == g, name


def test_partition_text_file():
    c = load_partition_file(DATA / "example_partition.txt", n=10)
    assert c == Partition(EXAMPLE_BLOCKS)
    assert load_partition("1 2 3 4\n5 6 7\n8 9 10\n") == c


def test_partition_json_document():
    c = load_partition('{"blocks": [[8, 9, 10], [1, 2, 3, 4], [5, 6, 7]]}')
    assert c == Partition(EXAMPLE_BLOCKS)


@pytest.mark.parametrize("source, n", [
    ("1 2\n2 3\n", None),
    ("1 2\n4\n", None),
    ("0 1\n", None),
    ("1 2\n3\n", 4),
    ('{"parts": []}', None),
    ("1 a\n", None),
])
def test_partition_errors(source, n):
    with pytest.raises(PartitionParseError):
        load_partition(source, n)


@pytest.mark.parametrize("source", [
    '{"blocks": [[1.9, 2], [3]]}',
    '{"blocks": [[1, 2], [true]]}',
    '{"blocks": [["1", 2], [3]]}',
    '{"blocks": [[1, 2], [3.0]]}',
])
def test_partition_json_ids_must_be_integers(source):
    with pytest.raises(PartitionParseError):
        load_partition(source)


def test_json_documents():
    assert graph_to_dict(TRIANGLE) == {"schema_version": 1, "n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}
    m = Multigraph(3, ((0, 2, 1), (2, 0, 2), (1, 2, 0)))
    assert multigraph_to_dict(m)["multiplicities"] == [[0, 2, 1], [2, 0, 2], [1, 2, 0]]
    assert partition_to_dict(Partition(((1,), (0, 2))))["blocks"] == [[1, 3], [2]]


def test_dumps_is_stable():
    doc = {"b": 1, "a": [1, 2]}
    assert dumps(doc) == '{"a":[1,2],"b":1}'
    assert json.loads(dumps(doc, pretty=True)) == doc
    assert dumps(graph_to_dict(Graph(2, ((1, 0),)))) == dumps(graph_to_dict(Graph(2, ((0, 1),))))
