"""
treecut: sample connected graph partitions by cutting uniform spanning trees,
and compute the exact probability of any partition in closed form.
"""
__version__ = "0.1.0"

from .exceptions import (BudgetExceededError, DisconnectedGraphError, GraphParseError, InvalidGraphError,
                         InvalidPartitionError, PartitionParseError, PreconditionError, TreecutError,
                         UnknownPartitionError, UsageError, VerificationFailed)
from .graph import (Graph, Multigraph, Partition, boundary_edges, contract, induced_subgraph, is_connected,
                    laplacian, singletons, whole)
from .io import GraphFormat, load_graph, load_graph_file, load_partition
from .matrix_tree import count_spanning_trees, minor_determinant
from .oracle import (EnumerationBudget, brute_force_probability, enumerate_connected_partitions,
                     enumerate_spanning_trees, exact_randmst_tree_distribution)
from .probability import (compatible_tree_count, partition_probability, two_block_probability,
                          validate_partition)
from .sampler import (RngState, SamplerMode, SpanningTree, components_after_deletion,
                      sample_connected_partition, sample_spanning_tree_randmst, sample_spanning_tree_uniform)
from .montecarlo import TrialReport, compare, run_trials
