"""
Closed-form probability of a connected partition under SampleConnectedPartition.

For a partition C = (U_1, ..., U_K) of a connected graph G on n nodes,

    P(C) = t(M(G, C)) * prod_k t(U_k) / (binom(n-1, K-1) * t(G))

where t counts spanning trees and M(G, C) is the contraction of G by C.
"""
import logging
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Optional, Tuple

from .exceptions import DisconnectedGraphError, PreconditionError
from .graph import Graph, Partition, boundary_edges, contract, induced_subgraph, is_connected
from .matrix_tree import count_spanning_trees

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 4


@dataclass(frozen=True)
class ProbabilityBreakdown:
    """Every factor of the closed form for one partition."""
    partition: Partition
    t_graph: int
    t_blocks: Tuple[int, ...]
    t_contraction: int
    binom: int

    @property
    def compatible(self) -> int:
        return self.t_contraction * prod(self.t_blocks)

    @property
    def probability(self) -> Fraction:
        return Fraction(self.compatible, self.binom * self.t_graph)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def block_tree_count(g: Graph, block: Iterable[int]) -> int:
    """Spanning trees of the subgraph induced by ``block``."""
    sub, _ = induced_subgraph(g, block)
    return count_spanning_trees(sub)


def validate_partition(g: Graph, c: Partition, k: Optional[int] = None) -> bool:
    """True iff ``c`` has ``k`` blocks and each block induces a connected subgraph.

    ``k`` defaults to the block count of ``c``.
    """
    c.check_covers(g)
    if k is not None and c.k != k:
        return False
    return all(is_connected(induced_subgraph(g, block)[0]) for block in c.blocks)


def probability_breakdown(g: Graph, c: Partition) -> ProbabilityBreakdown:
    _require_connected(g)
    c.check_covers(g)
    breakdown = ProbabilityBreakdown(
        partition=c,
        t_graph=count_spanning_trees(g),
        t_blocks=tuple(block_tree_count(g, block) for block in c.blocks),
        t_contraction=count_spanning_trees(contract(g, c)),
        binom=comb(g.n - 1, c.k - 1),
    )
    logger.debug("breakdown for k=%d: t(G)=%d t(U)=%s t(M)=%d binom=%d", c.k,
                 breakdown.t_graph, breakdown.t_blocks, breakdown.t_contraction, breakdown.binom)
    return breakdown


def compatible_tree_count(g: Graph, c: Partition) -> int:
    """Number of spanning trees of ``g`` from which ``c`` arises by deleting K-1 edges."""
    return probability_breakdown(g, c).compatible


def partition_probability(g: Graph, c: Partition, k: Optional[int] = None) -> Fraction:
    """Exact probability that SampleConnectedPartition returns ``c``.

    K is the block count of ``c``; passing a different ``k`` is an error.
    Partitions with a disconnected block get probability 0.
    """
    if k is not None and k != c.k:
        raise PreconditionError(f"partition has {c.k} blocks but k={k} was requested")
    return probability_breakdown(g, c).probability


def two_block_probability(g: Graph, s: Iterable[int]) -> Fraction:
    """Probability of the split (S, V \\ S), counted through the boundary of S."""
    _require_connected(g)
    inside = set(s)
    if not inside or len(inside) >= g.n:
        raise PreconditionError("S must be a nonempty proper subset of the nodes")
    outside = set(range(g.n)) - inside
    cut = boundary_edges(g, inside)
    numerator = block_tree_count(g, inside) * block_tree_count(g, outside) * len(cut)
    return Fraction(numerator, (g.n - 1) * count_spanning_trees(g))


def round_half_even(value: Fraction, digits: int = DEFAULT_DIGITS) -> Decimal:
    """``value`` rounded to ``digits`` decimal places, ties to even, computed exactly."""
    if digits < 0:
        raise PreconditionError("digits must be nonnegative")
    quotient, remainder = divmod(value.numerator * 10 ** digits, value.denominator)
    twice = 2 * remainder
    if twice > value.denominator or (twice == value.denominator and quotient % 2 == 1):
        quotient += 1
    return Decimal(quotient).scaleb(-digits)


def format_probability(value: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    return format(round_half_even(value, digits), "f")


def format_rational(value: Fraction) -> str:
    """Always ``num/den``, including ``1/1`` and ``0/1``."""
    return f"{value.numerator}/{value.denominator}"
