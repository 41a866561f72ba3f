import os
from pathlib import Path
from unittest.mock import patch

import pytest

from treecut.config import CliConfig
from treecut.exceptions import UsageError
from treecut.utils import CI_ENV_VAR, ci_mode, entropy_seed, env_flag

GRAPH = Path("graph.txt")


@pytest.mark.parametrize("value, expected", [
    ("1", True), ("true", True), ("YES", True), (" on ", True),
    ("0", False), ("", False), ("no", False), ("off", False),
])
def test_env_flag(value, expected):
    assert env_flag("FLAG", {"FLAG": value}) is expected


def test_env_flag_unset():
    assert env_flag("FLAG", {}) is False


@pytest.mark.parametrize("config", [
    CliConfig("sample", graph=GRAPH),
    CliConfig("sample", k=2),
    CliConfig("prob", graph=GRAPH),
    CliConfig("enumerate", graph=GRAPH),
    CliConfig("verify", graph=GRAPH),
    CliConfig("trees"),
])
def test_required_flags(config):
    with pytest.raises(UsageError) as info:
        config.validate()
    assert info.value.exit_code == 2


@pytest.mark.parametrize("changes", [
    {"output": "xml"},
    {"digits": -1},
    {"samples": 0},
    {"samples": 50, "min_samples": 100},
    {"streams": 0},
    {"workers": 0},
])
def test_invalid_values(changes):
    with pytest.raises(UsageError):
        CliConfig("verify", graph=GRAPH, k=2, seed=1, **changes).validate()


def test_unknown_subcommand():
    with pytest.raises(UsageError):
        CliConfig("split", graph=GRAPH).validate()


def test_valid_config_returns_itself():
    config = CliConfig("verify", graph=GRAPH, k=3, samples=1000, min_samples=100, seed=9)
    assert config.validate() is config
    assert config.resolved_seed() == 9


def test_ci_mode_requires_seed_for_randomized_commands():
    with patch.dict(os.environ, {CI_ENV_VAR: "1"}):
        assert ci_mode()
        with pytest.raises(UsageError):
            CliConfig("sample", graph=GRAPH, k=2).validate()
        with pytest.raises(UsageError):
            CliConfig("verify", graph=GRAPH, k=2, samples=100).validate()
        CliConfig("sample", graph=GRAPH, k=2, seed=0).validate()
        CliConfig("trees", graph=GRAPH).validate()


def test_missing_seed_is_drawn_from_entropy():
    with patch.dict(os.environ, {CI_ENV_VAR: "0"}):
        config = CliConfig("sample", graph=GRAPH, k=2).validate()
    with patch("treecut.config.entropy_seed", return_value=1234) as drawn:
        assert config.resolved_seed() == 1234
        drawn.assert_called_once_with()


def test_entropy_seed_range():
    seed = entropy_seed()
    assert 0 <= seed < 2 ** 64
