import json

import numpy as np

from src.config import RunConfig
from src.outputs import build_metadata
from src.portfolio import delta_sigma_disc, load_return_paths
from src.processor import ExperimentProcessor
from src.statevec import derive_seeds


def test_outcomes_are_ordered_and_seeded(fixture_model):
    result = ExperimentProcessor(RunConfig(shots=30, executions=4, seed=11)).run(fixture_model)
    assert [o.index for o in result.outcomes] == [0, 1, 2, 3]
    assert [o.seed for o in result.outcomes] == derive_seeds(11, 4)
    assert all(o.path.months == 30 for o in result.outcomes)
    assert result.delta_sigma_disc.shape == (3, 3)
    assert result.pooled_delta_sigma.shape == (3, 3)


def test_parallel_matches_sequential(fixture_model):
    seq = ExperimentProcessor(RunConfig(shots=40, executions=6, seed=3, workers=1)).run(fixture_model)
    par = ExperimentProcessor(RunConfig(shots=40, executions=6, seed=3, workers=4)).run(fixture_model)
    for a, b in zip(seq.outcomes, par.outcomes):
        assert a.seed == b.seed
        assert a.path.returns.tobytes() == b.path.returns.tobytes()


def test_single_shot_has_no_delta_sigma(fixture_model):
    result = ExperimentProcessor(RunConfig(shots=1, executions=2)).run(fixture_model)
    assert all(o.delta_sigma is None for o in result.outcomes)
    assert result.summary()["max_abs_delta_sigma"] == {}


def test_write_outputs(tmp_path, fixture_model):
    cfg = RunConfig(shots=24, executions=2, seed=5)
    processor = ExperimentProcessor(cfg)
    result = processor.run(fixture_model)
    written = processor.write_outputs(result, tmp_path, build_metadata("simulate", cfg.echo(), cfg.seed))
    assert sorted(p.name for p in written) == [
        "histogram_0000.csv",
        "returns_0000.csv",
        "returns_0001.csv",
        "summary.csv",
        "summary.json",
    ]

    paths = load_return_paths(tmp_path)
    assert [p.seed for p in paths] == derive_seeds(5, 2)
    np.testing.assert_array_equal(paths[1].returns, result.outcomes[1].path.returns)

    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["executions"] == 2 and summary["shots"] == 24
    assert summary["metadata"]["seed"] == 5


def test_classical_sampler_skips_the_circuit(fixture_model):
    result = ExperimentProcessor(RunConfig(shots=60, executions=3, seed=4, sampler="classical")).run(fixture_model)
    assert result.sampler == "classical" and result.summary()["sampler"] == "classical"
    assert [o.seed for o in result.outcomes] == derive_seeds(4, 3)
    np.testing.assert_array_equal(result.delta_sigma_disc, delta_sigma_disc(fixture_model))
