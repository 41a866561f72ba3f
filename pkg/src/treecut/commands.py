"""
Command-line interface for treecut.
"""
import functools
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import click

from . import __version__
from .config import OUTPUT_FORMATS, CliConfig
from .exceptions import PreconditionError, TreecutError, VerificationFailed
from .graph import contract
from .io import (SCHEMA_VERSION, GraphFormat, blocks_to_json, dumps, graph_to_dict, load_graph_file,
                 load_partition_file, multigraph_to_dict, outcome_to_json, partition_to_dict)
from .matrix_tree import count_spanning_trees
from .montecarlo import DEFAULT_ALPHA, DEFAULT_Z_BOUND, TrialReport, compare, run_trials
from .oracle import (EnumerationBudget, enumerate_spanning_trees, exact_partition_law,
                     exact_randmst_partition_law, randmst_audit)
from .probability import (DEFAULT_DIGITS, format_probability, format_rational, probability_breakdown,
                          round_half_even)
from .sampler import RngState, SamplerMode, sample_connected_partition

logger = logging.getLogger(__name__)


class CommandError(click.ClickException):
    """Carries a library error out of click with its own exit code."""

    def __init__(self, error: TreecutError):
        super().__init__(str(error))
        self.exit_code = error.exit_code


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except TreecutError as e:
            raise CommandError(e) from e
    return wrapper


def graph_options(fn):
    fn = click.option('--format', 'graph_format', type=click.Choice([f.value for f in GraphFormat]),
                      default=GraphFormat.EDGE_LIST.value, show_default=True,
                      help='Graph file format')(fn)
    fn = click.option('--graph', 'graph_path', type=click.Path(exists=True, dir_okay=False, path_type=Path),
                      help='Graph file, 1-based node ids')(fn)
    return fn


def budget_options(fn):
    defaults = EnumerationBudget()
    fn = click.option('--max-set-partitions', type=click.IntRange(min=1), default=defaults.max_set_partitions,
                      show_default=True, help='Set partitions scanned during enumeration')(fn)
    fn = click.option('--max-trees', type=click.IntRange(min=1), default=defaults.max_trees,
                      show_default=True, help='Spanning trees enumerated')(fn)
    fn = click.option('--max-nodes', type=click.IntRange(min=1), default=defaults.max_nodes,
                      show_default=True, help='Largest graph accepted for enumeration')(fn)
    return fn


def _budget(max_nodes: int, max_trees: int, max_set_partitions: int) -> EnumerationBudget:
    return EnumerationBudget(max_nodes=max_nodes, max_trees=max_trees, max_set_partitions=max_set_partitions)


def _mode_option(fn):
    return click.option('--mode', type=click.Choice([m.value for m in SamplerMode]),
                        default=SamplerMode.UNIFORM_TREE.value, show_default=True,
                        help='Spanning tree sampler; randmst-tree is not the uniform law')(fn)


def _blocks_text(blocks: List[List[int]]) -> str:
    return "|".join(",".join(str(v) for v in block) for block in blocks)


def _probability_fields(p: Fraction, digits: int) -> Dict[str, Any]:
    return {
        "rational": format_rational(p),
        "float": float(round_half_even(p, digits)),
        "decimal": format_probability(p, digits),
    }


@click.group()
@click.version_option(__version__, prog_name='treecut')
@click.option('-v', '--verbose', count=True, help='-v for info, -vv for debug logging')
def cli(verbose):
    """Sample connected graph partitions from spanning trees and compute their exact probabilities."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('treecut').setLevel(level)


@cli.command()
@graph_options
@click.option('--k', type=int, help='Number of blocks')
@click.option('--seed', type=click.IntRange(min=0), help='Random seed (required when TREECUT_CI is set)')
@click.option('--count', 'samples', type=int, default=1, show_default=True, help='Partitions to draw')
@_mode_option
@handle_errors
def sample(graph_path, graph_format, k, seed, samples, mode):
    """Draw connected k-partitions, one JSON object per line."""
    config = CliConfig('sample', graph=graph_path, graph_format=GraphFormat(graph_format), k=k,
                       samples=samples, seed=seed, mode=SamplerMode(mode)).validate()
    g = load_graph_file(config.graph, config.graph_format)
    seed = config.resolved_seed()
    rng = RngState(seed)
    for index in range(config.samples):
        c = sample_connected_partition(g, config.k, rng, config.mode)
        document = partition_to_dict(c)
        document.update(seed=seed, index=index, mode=config.mode.value)
        click.echo(dumps(document))


@cli.command()
@graph_options
@click.option('--partition', 'partition_path', type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help='Partition file: one block per line, or a JSON object with "blocks"')
@click.option('--k', type=int, help='Expected number of blocks')
@click.option('--digits', type=int, default=DEFAULT_DIGITS, show_default=True, help='Decimal places shown')
@handle_errors
def prob(graph_path, graph_format, partition_path, k, digits):
    """Exact probability of a partition, with every factor of the closed form."""
    config = CliConfig('prob', graph=graph_path, graph_format=GraphFormat(graph_format),
                       partition=partition_path, k=k, digits=digits).validate()
    g = load_graph_file(config.graph, config.graph_format)
    c = load_partition_file(config.partition, g.n)
    if config.k is not None and config.k != c.k:
        raise PreconditionError(f"partition has {c.k} blocks but --k {config.k} was given")
    breakdown = probability_breakdown(g, c)
    document = {
        "schema_version": SCHEMA_VERSION,
        "blocks": blocks_to_json(c),
        "k": c.k,
        "t_G": breakdown.t_graph,
        "t_blocks": list(breakdown.t_blocks),
        "t_M": breakdown.t_contraction,
        "binom": breakdown.binom,
        "compatible": breakdown.compatible,
        "contraction": multigraph_to_dict(contract(g, c)),
    }
    document.update(_probability_fields(breakdown.probability, config.digits))
    click.echo(dumps(document, pretty=True))


def _render_table(header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines)


@cli.command(name='enumerate')
@graph_options
@click.option('--k', type=int, help='Number of blocks')
@click.option('--output', type=click.Choice(OUTPUT_FORMATS), default='json', show_default=True)
@click.option('--digits', type=int, default=DEFAULT_DIGITS, show_default=True, help='Decimal places shown')
@budget_options
@handle_errors
def enumerate_partitions(graph_path, graph_format, k, output, digits, max_nodes, max_trees, max_set_partitions):
    """Every connected k-partition with its exact probability."""
    config = CliConfig('enumerate', graph=graph_path, graph_format=GraphFormat(graph_format), k=k,
                       output=output, digits=digits,
                       budget=_budget(max_nodes, max_trees, max_set_partitions)).validate()
    g = load_graph_file(config.graph, config.graph_format)
    law = exact_partition_law(g, config.k, config.budget)
    total = sum(law.values(), Fraction(0))
    if config.output == 'json':
        click.echo(dumps({
            "schema_version": SCHEMA_VERSION,
            "n": g.n,
            "k": config.k,
            "count": len(law),
            "rows": [dict(blocks=blocks_to_json(c), **_probability_fields(p, config.digits))
                     for c, p in law.items()],
            "total": format_rational(total),
            "normalized": total == 1,
        }, pretty=True))
    else:
        rows = [[_blocks_text(blocks_to_json(c)), format_rational(p), format_probability(p, config.digits)]
                for c, p in law.items()]
        footer = ["total", format_rational(total), format_probability(total, config.digits)]
        if config.output == 'tsv':
            for r in [["blocks", "rational", "float"]] + rows + [footer]:
                click.echo("\t".join(r))
        else:
            click.echo(_render_table(["blocks", "probability", "decimal"], rows + [footer]))
    if total != 1:
        raise VerificationFailed(f"probabilities sum to {format_rational(total)}, not 1")


def _render_report(report: TrialReport, digits: int) -> str:
    rows = [[_blocks_text(outcome_to_json(r.outcome)), format_probability(r.expected, digits),
             str(r.observed), f"{r.frequency:.{digits}f}", f"{r.z_score:+.2f}"]
            for r in report.rows]
    table = _render_table(["blocks", "expected", "observed", "frequency", "z"], rows)
    verdict = "PASS" if report.passed else "FAIL"
    return (f"{table}\n\nchi-square {report.chi_square:.3f} on {report.df} df, p = {report.p_value:.4g}; "
            f"max |z| {report.max_abs_z:.2f}; samples {report.samples}, seed {report.seed}, "
            f"mode {report.mode}: {verdict}")


@cli.command()
@graph_options
@click.option('--k', type=int, help='Number of blocks')
@click.option('--samples', type=int, default=10000, show_default=True, help='Partitions to draw')
@click.option('--min-samples', type=int, default=100, show_default=True, help='Refuse smaller runs')
@click.option('--seed', type=click.IntRange(min=0), help='Random seed (required when TREECUT_CI is set)')
@_mode_option
@click.option('--alpha', type=float, default=DEFAULT_ALPHA, show_default=True, help='Chi-square significance level')
@click.option('--z-bound', type=float, default=DEFAULT_Z_BOUND, show_default=True, help='Largest allowed |z|')
@click.option('--streams', type=int, default=1, show_default=True, help='Independent random streams')
@click.option('--workers', type=int, default=1, show_default=True, help='Worker processes')
@click.option('--output', type=click.Choice(['json', 'human']), default='json', show_default=True)
@click.option('--digits', type=int, default=DEFAULT_DIGITS, show_default=True, help='Decimal places shown')
@budget_options
@handle_errors
def verify(graph_path, graph_format, k, samples, min_samples, seed, mode, alpha, z_bound, streams, workers,
           output, digits, max_nodes, max_trees, max_set_partitions):
    """Compare sampled partition frequencies with the exact law."""
    config = CliConfig('verify', graph=graph_path, graph_format=GraphFormat(graph_format), k=k,
                       samples=samples, min_samples=min_samples, seed=seed, mode=SamplerMode(mode),
                       output=output, digits=digits, alpha=alpha, z_bound=z_bound,
                       streams=streams, workers=workers,
                       budget=_budget(max_nodes, max_trees, max_set_partitions)).validate()
    g = load_graph_file(config.graph, config.graph_format)
    if config.mode is SamplerMode.RANDMST_TREE:
        exact = exact_randmst_partition_law(g, config.k, config.budget)
    else:
        exact = exact_partition_law(g, config.k, config.budget)
    seed = config.resolved_seed()
    tally = run_trials(g, config.k, config.samples, seed, config.mode,
                       streams=config.streams, workers=config.workers)
    report = compare(tally, exact, config.samples, seed=seed, mode=config.mode,
                     alpha=config.alpha, z_bound=config.z_bound)
    if config.output == 'json':
        click.echo(dumps(report.to_dict(), pretty=True))
    else:
        click.echo(_render_report(report, config.digits))
    if not report.passed:
        raise VerificationFailed(
            f"sampled frequencies reject the exact law (p={report.p_value:.4g}, max |z|={report.max_abs_z:.2f})",
            report=report)


@cli.command()
@graph_options
@click.option('--enumerate', 'list_trees', is_flag=True, help='List every spanning tree (within budget)')
@click.option('--audit-randmst', is_flag=True, help='Exact random-MST tree law against uniform')
@budget_options
@handle_errors
def trees(graph_path, graph_format, list_trees, audit_randmst, max_nodes, max_trees, max_set_partitions):
    """Exact spanning-tree count."""
    config = CliConfig('trees', graph=graph_path, graph_format=GraphFormat(graph_format),
                       budget=_budget(max_nodes, max_trees, max_set_partitions)).validate()
    g = load_graph_file(config.graph, config.graph_format)
    t = count_spanning_trees(g)
    if not (list_trees or audit_randmst):
        click.echo(str(t))
        return
    document: Dict[str, Any] = {"schema_version": SCHEMA_VERSION, "graph": graph_to_dict(g), "count": str(t)}
    if list_trees:
        document["trees"] = [outcome_to_json(tree) for tree in enumerate_spanning_trees(g, config.budget)]
    if audit_randmst:
        audit = randmst_audit(g, config.budget)
        document["randmst"] = {
            "uniform": format_rational(audit.uniform),
            "is_uniform": audit.is_uniform,
            "max_deviation": format_rational(audit.max_deviation),
            "trees": [{"edges": outcome_to_json(tree), "probability": format_rational(p)}
                      for tree, p in audit.law.items()],
        }
    click.echo(dumps(document, pretty=True))


if __name__ == '__main__':
    cli()
