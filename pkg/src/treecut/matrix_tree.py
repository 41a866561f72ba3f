"""
Exact spanning-tree counts by the Matrix Tree Theorem.
"""
import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Union

from .exceptions import PreconditionError
from .graph import Graph, Multigraph, laplacian

logger = logging.getLogger(__name__)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every division is exact, so intermediate values stay integers.
    """
    a: List[List[int]] = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[size - 1][size - 1]


def minor_determinant(m: Sequence[Sequence[int]], i: Optional[int] = None) -> int:
    """Determinant of ``m`` with row and column ``i`` (0-based) removed.

    ``i`` defaults to the last index.
    """
    size = len(m)
    if size < 1 or any(len(row) != size for row in m):
        raise PreconditionError("minor_determinant needs a nonempty square matrix")
    if i is None:
        i = size - 1
    if not 0 <= i < size:
        raise PreconditionError(f"index {i} outside 0..{size - 1}")
    minor = [
        [x for c, x in enumerate(row) if c != i]
        for r, row in enumerate(m) if r != i
    ]
    return bareiss_determinant(minor)


@lru_cache(maxsize=4096)
def count_spanning_trees(g: Union[Graph, Multigraph]) -> int:
    """Number of spanning trees; 0 for disconnected input, 1 for a single node.

    Multigraph multiplicities count as parallel edges.
    """
    count = minor_determinant(laplacian(g))
    logger.debug("t = %d for %s on %d nodes", count, type(g).__name__,
                 g.k if isinstance(g, Multigraph) else g.n)
    return count
