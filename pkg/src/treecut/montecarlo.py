"""
Empirical check of sampled frequencies against an exact law.

Trials are split over independent ``(seed, stream)`` random streams; the
split depends only on the sample count and the number of streams, never on
the number of worker processes, so results are reproducible under any
parallelism.
"""
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Hashable, List, Mapping, Optional, Tuple, Union

from scipy import stats

from .exceptions import PreconditionError, UnknownPartitionError
from .graph import Graph
from .io import SCHEMA_VERSION, outcome_to_json
from .probability import format_rational
from .sampler import RngState, SamplerMode, check_k, sample_connected_partition, sample_spanning_tree

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.001
DEFAULT_Z_BOUND = 4.0
DEFAULT_MIN_EXPECTED = 5.0
# rows expecting fewer hits take their z-score from the exact binomial tail
DEFAULT_Z_MIN_EXPECTED = 30.0


@dataclass(frozen=True)
class TrialRow:
    outcome: Hashable
    expected: Fraction
    observed: int
    frequency: float
    z_score: float

    @property
    def expected_float(self) -> float:
        return float(self.expected)


@dataclass(frozen=True)
class TrialReport:
    rows: Tuple[TrialRow, ...]
    chi_square: float
    df: int
    p_value: float
    samples: int
    seed: Optional[int]
    mode: str
    alpha: float
    z_bound: float
    z_min_expected: float = DEFAULT_Z_MIN_EXPECTED

    @property
    def max_abs_z(self) -> float:
        """Largest |z| over every row of the support."""
        return max((abs(row.z_score) for row in self.rows), default=0.0)

    @property
    def passed(self) -> bool:
        return self.p_value >= self.alpha and self.max_abs_z <= self.z_bound

    def row_for(self, outcome: Hashable) -> TrialRow:
        for row in self.rows:
            if row.outcome == outcome:
                return row
        raise KeyError(outcome)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "samples": self.samples,
            "seed": self.seed,
            "mode": self.mode,
            "chi_square": self.chi_square,
            "df": self.df,
            "p_value": self.p_value,
            "alpha": self.alpha,
            "z_bound": self.z_bound,
            "z_min_expected": self.z_min_expected,
            "max_abs_z": self.max_abs_z,
            "passed": self.passed,
            "rows": [
                {
                    "outcome": outcome_to_json(row.outcome),
                    "expected": format_rational(row.expected),
                    "expected_float": row.expected_float,
                    "observed": row.observed,
                    "frequency": row.frequency,
                    "z": row.z_score,
                }
                for row in self.rows
            ],
        }


def split_samples(samples: int, streams: int) -> List[int]:
    """Per-stream sample counts; the first ``samples % streams`` streams take one extra."""
    base, extra = divmod(samples, streams)
    return [base + (1 if i < extra else 0) for i in range(streams)]


def run_stream(g: Graph, k: int, samples: int, seed: int, stream: int = 0,
               mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE) -> Counter:
    """Tally of partitions from one random stream."""
    rng = RngState(seed, stream)
    return Counter(sample_connected_partition(g, k, rng, mode) for _ in range(samples))


def run_tree_stream(g: Graph, samples: int, seed: int, stream: int = 0,
                    mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE) -> Counter:
    """Tally of spanning trees from one random stream."""
    rng = RngState(seed, stream)
    return Counter(sample_spanning_tree(g, rng, mode) for _ in range(samples))


def _stream_task(args) -> Counter:
    kind, g, k, count, seed, stream, mode = args
    if kind == "tree":
        return run_tree_stream(g, count, seed, stream, mode)
    return run_stream(g, k, count, seed, stream, mode)


def merge_tallies(*tallies: Mapping[Hashable, int]) -> Counter:
    merged: Counter = Counter()
    for tally in tallies:
        merged.update(tally)
    return merged


def _run(kind: str, g: Graph, k: int, samples: int, seed: int, mode, streams: int, workers: int) -> Counter:
    if samples < 1:
        raise PreconditionError("samples must be at least 1")
    if streams < 1 or workers < 1:
        raise PreconditionError("streams and workers must be at least 1")
    mode = SamplerMode(mode).value
    tasks = [(kind, g, k, count, seed, stream, mode)
             for stream, count in enumerate(split_samples(samples, streams)) if count]
    logger.info("running %d %s samples over %d streams with %d workers", samples, kind, len(tasks), workers)
    if workers == 1 or len(tasks) == 1:
        tallies = [_stream_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(_stream_task, tasks))
    return merge_tallies(*tallies)


def run_trials(g: Graph, k: int, samples: int, seed: int,
               mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE,
               streams: int = 1, workers: int = 1) -> Counter:
    """Tally of canonical partitions over ``samples`` runs of the sampler."""
    check_k(g, k)
    return _run("partition", g, k, samples, seed, mode, streams, workers)


def run_tree_trials(g: Graph, samples: int, seed: int,
                    mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE,
                    streams: int = 1, workers: int = 1) -> Counter:
    """Tally of sampled spanning trees."""
    return _run("tree", g, 0, samples, seed, mode, streams, workers)


def _z_score(observed: int, p: Fraction, samples: int, z_min_expected: float) -> float:
    """Signed z-score of an observed count under Binomial(samples, p).

    Rows expecting fewer than ``z_min_expected`` hits get the normal quantile
    of their exact binomial tail instead of the skewed normal approximation.
    """
    expected = samples * float(p)
    variance = expected * (1.0 - float(p))
    if variance == 0.0:
        return 0.0 if observed == expected else math.inf
    if expected >= z_min_expected:
        return (observed - expected) / math.sqrt(variance)
    if observed > expected:
        return max(0.0, float(stats.norm.isf(stats.binom.sf(observed - 1, samples, float(p)))))
    if observed < expected:
        return -max(0.0, float(stats.norm.isf(stats.binom.cdf(observed, samples, float(p)))))
    return 0.0


def _pooled_cells(cells: List[Tuple[float, int]], min_expected: float) -> List[Tuple[float, int]]:
    """Pool cells whose expected count is below ``min_expected``.

    Small cells only ever merge with each other. The pool stands as its own
    cell even when it is still small, so its deviation is never absorbed by
    a regular cell.
    """
    small = [c for c in cells if c[0] < min_expected]
    regular = [c for c in cells if c[0] >= min_expected]
    if not small:
        return regular
    return [(sum(e for e, _ in small), sum(o for _, o in small))] + regular


def compare(tally: Mapping[Hashable, int], exact: Mapping[Hashable, Fraction], samples: int, *,
            seed: Optional[int] = None, mode: Union[SamplerMode, str] = SamplerMode.UNIFORM_TREE,
            alpha: float = DEFAULT_ALPHA, z_bound: float = DEFAULT_Z_BOUND,
            min_expected: float = DEFAULT_MIN_EXPECTED,
            z_min_expected: float = DEFAULT_Z_MIN_EXPECTED) -> TrialReport:
    """Per-outcome z-scores and a pooled Pearson chi-square over the exact support."""
    if sum(tally.values()) != samples:
        raise PreconditionError(f"tally holds {sum(tally.values())} samples, expected {samples}")
    total = sum(exact.values(), Fraction(0))
    if total != 1:
        raise PreconditionError(f"exact law sums to {format_rational(total)}, not 1")
    support = {outcome: p for outcome, p in exact.items() if p > 0}
    for outcome in tally:
        if outcome not in support:
            raise UnknownPartitionError(f"observed outcome {outcome_to_json(outcome)} is outside the exact support",
                                        outcome=outcome)
    rows = tuple(
        TrialRow(outcome, p, tally.get(outcome, 0), tally.get(outcome, 0) / samples,
                 _z_score(tally.get(outcome, 0), p, samples, z_min_expected))
        for outcome, p in sorted(support.items())
    )
    cells = _pooled_cells([(samples * float(row.expected), row.observed) for row in rows], min_expected)
    statistic = sum((o - e) ** 2 / e for e, o in cells)
    df = len(cells) - 1
    p_value = float(stats.chi2.sf(statistic, df)) if df > 0 else 1.0
    logger.info("chi-square %.3f on %d df, p=%.4g", statistic, df, p_value)
    return TrialReport(rows, statistic, df, p_value, samples, seed, SamplerMode(mode).value, alpha, z_bound,
                       z_min_expected)
