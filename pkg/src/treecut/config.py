"""
Per-invocation configuration for the command-line interface.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

from .exceptions import UsageError
from .io import GraphFormat
from .montecarlo import DEFAULT_ALPHA, DEFAULT_Z_BOUND
from .oracle import EnumerationBudget
from .probability import DEFAULT_DIGITS
from .sampler import SamplerMode
from .utils import ci_mode, entropy_seed

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "tsv", "human")

RANDOMIZED = frozenset({"sample", "verify"})

REQUIRED: Dict[str, Tuple[str, ...]] = {
    "sample": ("graph", "k"),
    "prob": ("graph", "partition"),
    "enumerate": ("graph", "k"),
    "verify": ("graph", "k"),
    "trees": ("graph",),
}


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    graph: Optional[Path] = None
    graph_format: GraphFormat = GraphFormat.EDGE_LIST
    partition: Optional[Path] = None
    k: Optional[int] = None
    samples: int = 1
    min_samples: int = 1
    seed: Optional[int] = None
    mode: SamplerMode = SamplerMode.UNIFORM_TREE
    output: str = "json"
    digits: int = DEFAULT_DIGITS
    budget: EnumerationBudget = field(default_factory=EnumerationBudget)
    alpha: float = DEFAULT_ALPHA
    z_bound: float = DEFAULT_Z_BOUND
    streams: int = 1
    workers: int = 1

    def validate(self) -> "CliConfig":
        """Check the flags this subcommand needs; raises UsageError."""
        if self.subcommand not in REQUIRED:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        missing = [name for name in REQUIRED[self.subcommand] if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name for name in missing)
            raise UsageError(f"{self.subcommand} requires {flags}")
        if self.output not in OUTPUT_FORMATS:
            raise UsageError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.digits < 0:
            raise UsageError("--digits must be nonnegative")
        if self.samples < 1:
            raise UsageError("sample count must be at least 1")
        if self.samples < self.min_samples:
            raise UsageError(f"{self.samples} samples is below the minimum of {self.min_samples}")
        if self.streams < 1 or self.workers < 1:
            raise UsageError("--streams and --workers must be at least 1")
        if self.subcommand in RANDOMIZED and self.seed is None and ci_mode():
            raise UsageError("--seed is required when TREECUT_CI is set")
        return self

    def resolved_seed(self) -> int:
        """The explicit seed, or a fresh one from OS entropy."""
        if self.seed is not None:
            return self.seed
        seed = entropy_seed()
        logger.info("no --seed given, drew %d from OS entropy", seed)
        return seed
