"""
Text and JSON formats for graphs, multigraphs and partitions.

All file formats use 1-based node ids; everything inside the library is
0-based.
"""
import json
import re
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .exceptions import GraphParseError, InvalidGraphError, InvalidPartitionError, PartitionParseError
from .graph import Graph, Multigraph, Partition, from_adjacency

SCHEMA_VERSION = 1

_SEPARATORS = re.compile(r"[,\s]+")


class GraphFormat(str, Enum):
    EDGE_LIST = "edge-list"
    ADJACENCY_MATRIX = "adjacency-matrix"


def _content_lines(source: str):
    """Yield (line number, tokens) for every non-blank line with comments removed."""
    for number, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, [tok for tok in _SEPARATORS.split(line) if tok]


def _parse_int(token: str, number: int, error=GraphParseError) -> int:
    try:
        return int(token)
    except ValueError as err:
        raise error(f"line {number}: {token!r} is not an integer") from err


def _parse_edge_list(source: str) -> Graph:
    n: Optional[int] = None
    edges = []
    seen = set()
    for number, tokens in _content_lines(source):
        if tokens[0].lower() == "n":
            if n is not None or edges:
                raise GraphParseError(f"line {number}: header 'n <count>' must come first")
            if len(tokens) != 2:
                raise GraphParseError(f"line {number}: header must read 'n <count>'")
            n = _parse_int(tokens[1], number)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"line {number}: expected 'u v', got {len(tokens)} fields")
        u, v = (_parse_int(tok, number) for tok in tokens)
        if u < 1 or v < 1 or (n is not None and (u > n or v > n)):
            raise GraphParseError(f"line {number}: node id out of range in edge {u} {v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"line {number}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u - 1, v - 1))
    if n is None:
        if not edges:
            raise GraphParseError("empty edge list needs an 'n <count>' header")
        n = max(max(e) for e in edges) + 1
    try:
        return Graph(n, tuple(edges))
    except InvalidGraphError as err:
        raise GraphParseError(str(err)) from err


def _parse_adjacency_matrix(source: str) -> Graph:
    rows: List[List[int]] = []
    for number, tokens in _content_lines(source):
        rows.append([_parse_int(tok, number) for tok in tokens])
    if not rows:
        raise GraphParseError("adjacency matrix is empty")
    try:
        return from_adjacency(rows)
    except InvalidGraphError as err:
        raise GraphParseError(str(err)) from err


def load_graph(source: str, format: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
    """Parse a graph document in the given format."""
    fmt = GraphFormat(format)
    if fmt is GraphFormat.ADJACENCY_MATRIX:
        return _parse_adjacency_matrix(source)
    return _parse_edge_list(source)


def load_graph_file(path: Union[str, Path], format: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as err:
        raise GraphParseError(f"cannot read graph file {path}: {err}") from err
    return load_graph(text, format)


def dump_graph_text(g: Graph) -> str:
    """Canonical edge-list document; ``load_graph`` reads it back unchanged."""
    lines = [f"n {g.n}"] + [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _json_id(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise PartitionParseError(f"partition id {value!r} is not an integer")
    return value


def load_partition(source: str, n: Optional[int] = None) -> Partition:
    """Parse a partition: one block per line, or a JSON object with ``blocks``.

    When ``n`` is given the partition must cover exactly ``n`` nodes.
    """
    if source.lstrip().startswith("{"):
        try:
            raw = json.loads(source)["blocks"]
            blocks = [[_json_id(v) for v in block] for block in raw]
        except (ValueError, KeyError, TypeError) as err:
            raise PartitionParseError(f"invalid partition JSON: {err}") from err
    else:
        blocks = [
            [_parse_int(tok, number, PartitionParseError) for tok in tokens]
            for number, tokens in _content_lines(source)
        ]
    if any(v < 1 for block in blocks for v in block):
        raise PartitionParseError("partition ids are 1-based")
    try:
        partition = Partition(tuple(tuple(v - 1 for v in block) for block in blocks))
    except InvalidPartitionError as err:
        raise PartitionParseError(str(err)) from err
    if n is not None and partition.n != n:
        raise PartitionParseError(f"partition covers {partition.n} nodes, graph has {n}")
    return partition


def load_partition_file(path: Union[str, Path], n: Optional[int] = None) -> Partition:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as err:
        raise PartitionParseError(f"cannot read partition file {path}: {err}") from err
    return load_partition(text, n)


def blocks_to_json(c: Partition) -> List[List[int]]:
    return [[v + 1 for v in block] for block in c.blocks]


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": g.n,
        "edges": [[u + 1, v + 1] for u, v in g.edges],
    }


def multigraph_to_dict(m: Multigraph) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "k": m.k,
        "multiplicities": [list(row) for row in m.matrix],
    }


def partition_to_dict(c: Partition) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "blocks": blocks_to_json(c)}


def outcome_to_json(outcome: Any) -> Any:
    """JSON label for a sampled outcome: a partition's blocks or a tree's edges."""
    if isinstance(outcome, Partition):
        return blocks_to_json(outcome)
    edges = getattr(outcome, "edges", None)
    if edges is not None:
        return [[u + 1, v + 1] for u, v in edges]
    return outcome


def dumps(document: Dict[str, Any], pretty: bool = False) -> str:
    """Stable JSON rendering; identical documents give identical bytes."""
    if pretty:
        return json.dumps(document, indent=2, sort_keys=True)
    return json.dumps(document, sort_keys=True, separators=(",", ":"))
