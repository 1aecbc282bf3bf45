import json

import pytest
from pydantic import ValidationError

from src.config import RunConfig, load_run_config
from src.errors import ParseError


def test_defaults_are_the_three_asset_experiment():
    cfg = RunConfig()
    assert cfg.alloc == [3, 3, 3]
    assert cfg.bounds_k == 3.0 and cfg.shots == 120 and cfg.executions == 1 and cfg.seed == 0


def test_comma_lists_are_parsed():
    cfg = RunConfig(alloc="4,4,4", mu_annual="0.10,0.10,0.06", weights="0.25,0.25,0.5")
    assert cfg.alloc == [4, 4, 4]
    assert cfg.mu_annual == [0.10, 0.10, 0.06]
    assert cfg.weights == [0.25, 0.25, 0.5]


@pytest.mark.parametrize(
    "field,value",
    [
        ("shots", 0),
        ("executions", 0),
        ("seed", -1),
        ("alloc", "3,0"),
        ("weights", "0.5,0.6"),
        ("policy", "weekly"),
        ("transaction_cost", 0.01),
        ("bounds_k", 0),
        ("sampler", "quantum"),
    ],
)
def test_invalid_values(field, value):
    with pytest.raises(ValidationError):
        RunConfig(**{field: value})


def test_policy_aliases_are_normalized():
    assert RunConfig(policy="Semi-Annual").policy == "semiannual"


def test_flags_override_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"shots": 60, "executions": 4, "seed": 9}), encoding="utf-8")
    cfg = load_run_config(str(path), {"shots": 30, "seed": None})
    assert cfg.shots == 30 and cfg.executions == 4 and cfg.seed == 9


def test_unreadable_config_file(tmp_path):
    with pytest.raises(ParseError):
        load_run_config(str(tmp_path / "missing.json"), {})


def test_echo_leaves_out_output_and_workers():
    echo = RunConfig(out="somewhere", workers=4).echo()
    assert "out" not in echo and "workers" not in echo
    assert echo == RunConfig(workers=1).echo()
    assert echo["shots"] == 120


def test_sampler_is_normalized():
    assert RunConfig().sampler == "circuit"
    assert RunConfig(sampler=" Classical ").sampler == "classical"
