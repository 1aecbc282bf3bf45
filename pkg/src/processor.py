"""Multi-execution experiment pipeline."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import polars as pl

from .config import RunConfig, default_workers, diag_enabled
from .diagnostics import log_delta_sigma_summary, log_discretization_report, log_sampling_tvd, summarize_delta_sigma
from .market import MarketModel, estimate_covariance
from .outputs import header_lines, write_csv, write_json
from .portfolio import (
    PreparedState,
    ReturnPath,
    classical_path,
    delta_sigma,
    delta_sigma_disc,
    path_filename,
    prepare,
    return_histogram,
    run_execution,
    save_return_path,
)
from .statevec import derive_seeds, sample

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExecutionOutcome:
    index: int
    seed: int
    path: ReturnPath
    # None when the execution has fewer than 2 shots
    delta_sigma: Optional[np.ndarray]

    @property
    def max_abs_delta_sigma(self) -> Optional[float]:
        return None if self.delta_sigma is None else float(np.max(np.abs(self.delta_sigma)))


@dataclass(eq=False)
class ExperimentResult:
    model: MarketModel
    shots: int
    base_seed: int
    outcomes: List[ExecutionOutcome]
    delta_sigma_disc: np.ndarray
    pooled_delta_sigma: Optional[np.ndarray] = None
    sampler: str = "circuit"

    def summary_frame(self) -> pl.DataFrame:
        """One row per execution, ordered by execution index."""
        return pl.DataFrame(
            {
                "execution_index": [o.index for o in self.outcomes],
                "seed": [str(o.seed) for o in self.outcomes],
                "months": [o.path.months for o in self.outcomes],
                "max_abs_delta_sigma": [o.max_abs_delta_sigma for o in self.outcomes],
            },
            schema={
                "execution_index": pl.Int64,
                "seed": pl.Utf8,
                "months": pl.Int64,
                "max_abs_delta_sigma": pl.Float64,
            },
        )

    def summary(self) -> Dict[str, Any]:
        def _mat(m: Optional[np.ndarray]):
            return None if m is None else [[float(x) for x in row] for row in m]

        max_abs = [o.max_abs_delta_sigma for o in self.outcomes if o.max_abs_delta_sigma is not None]
        return {
            "names": list(self.model.names),
            "executions": len(self.outcomes),
            "shots": self.shots,
            "sampler": self.sampler,
            "seeds": [o.seed for o in self.outcomes],
            "max_abs_delta_sigma": summarize_delta_sigma(max_abs),
            "pooled_delta_sigma": _mat(self.pooled_delta_sigma),
            "delta_sigma_disc": _mat(self.delta_sigma_disc),
        }


class ExperimentProcessor:
    """Runs ``executions`` seeded executions of one model and writes their artifacts."""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()

    def run(
        self,
        model: MarketModel,
        seeds: Optional[Sequence[int]] = None,
        prepared: Optional[PreparedState] = None,
    ) -> ExperimentResult:
        """Child seeds default to ``derive_seed(base, index)``; results are ordered by index."""
        cfg = self.config
        seeds = list(seeds) if seeds is not None else derive_seeds(cfg.seed, cfg.executions)
        classical = cfg.sampler == "classical"
        if not classical:
            prepared = prepared or prepare(model)
            log_discretization_report(prepared.dist, model.mu_monthly, model.sigma_monthly)

        workers = cfg.workers if cfg.workers > 1 else default_workers()
        logger.info(
            f"[simulate] sampler={cfg.sampler} executions={len(seeds)} shots={cfg.shots} "
            f"base_seed={cfg.seed} workers={workers}"
        )

        def _one(index: int) -> ExecutionOutcome:
            if classical:
                path = classical_path(model, cfg.shots, seeds[index], index)
            else:
                path = run_execution(model, cfg.shots, seeds[index], index, prepared)
            ds = delta_sigma(model, path) if path.months >= 2 else None
            return ExecutionOutcome(index, seeds[index], path, ds)

        if workers > 1 and len(seeds) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(_one, range(len(seeds))))
        else:
            outcomes = [_one(i) for i in range(len(seeds))]
        outcomes.sort(key=lambda o: o.index)

        if outcomes and not classical and diag_enabled():
            log_sampling_tvd(sample(prepared.state, cfg.shots, outcomes[0].seed), prepared.state)

        pooled = None
        stacked = np.vstack([o.path.returns for o in outcomes]) if outcomes else np.empty((0, model.num_assets))
        if stacked.shape[0] >= 2:
            pooled = estimate_covariance(stacked) - model.sigma_monthly

        result = ExperimentResult(
            model=model,
            shots=cfg.shots,
            base_seed=cfg.seed,
            outcomes=outcomes,
            delta_sigma_disc=delta_sigma_disc(model, prepared.dist if prepared else None),
            pooled_delta_sigma=pooled,
            sampler=cfg.sampler,
        )
        log_delta_sigma_summary([o.max_abs_delta_sigma for o in outcomes if o.max_abs_delta_sigma is not None])
        return result

    def write_outputs(self, result: ExperimentResult, out_dir: Path, metadata: Dict[str, Any]) -> List[Path]:
        """Return-path CSVs, the first execution's histogram, and the ΔΣ summary (CSV + JSON)."""
        out_dir = Path(out_dir)
        lines = header_lines(metadata)
        written = [save_return_path(o.path, out_dir / path_filename(o.index), lines) for o in result.outcomes]
        if result.outcomes:
            hist = return_histogram(result.outcomes[0].path, result.model.grid())
            written.append(write_csv(hist, out_dir / "histogram_0000.csv", metadata))
        written.append(write_csv(result.summary_frame(), out_dir / "summary.csv", metadata))
        written.append(write_json(result.summary(), out_dir / "summary.json", metadata))
        logger.info(f"[simulate] wrote {len(written)} files to {out_dir}")
        return written
