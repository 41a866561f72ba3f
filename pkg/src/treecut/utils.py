import os
from typing import Optional

import numpy as np

CI_ENV_VAR = "TREECUT_CI"

_TRUTHY = {"1", "true", "yes", "on"}


def env_flag(name: str, environ: Optional[dict] = None) -> bool:
    """
    Reads a boolean flag from the environment.

    Returns:
        bool: True when the variable is set to 1, true, yes or on (any case).
    """
    value = (environ if environ is not None else os.environ).get(name, "")
    return value.strip().lower() in _TRUTHY


def ci_mode() -> bool:
    return env_flag(CI_ENV_VAR)


def entropy_seed() -> int:
    """
    Draws a fresh 64-bit seed from operating system entropy.

    Returns:
        int: A seed suitable for ``RngState``.
    """
    return int(np.random.SeedSequence().entropy) % (1 << 64)
