#!/usr/bin/env python3
"""
Command-line entry point for the allocation experiment.

Commands: calibrate, build-circuit, simulate, backtest, compare, synth-prices.
Every command is flag-driven and deterministic; ``--out`` is a directory.
Exit codes: 0 success, 2 usage/validation error, 1 internal error. Errors
also print one machine-parseable line on stderr:
``error code=<Code> message=<json string>``.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional

from pydantic import ValidationError

from src.circuit import save_circuit
from src.config import DEFAULT_EXPERIMENT, POLICY_NAMES, RunConfig, load_run_config
from src.distload import QubitAllocation, combine_with_measurement, save_distribution, synthesis_cost, synthesize
from src.errors import AllocationError, MissingArgument
from src.market import build_model, load_model, load_prices, save_model, save_prices, synthetic_prices
from src.outputs import build_metadata, header_lines, write_csv, write_json
from src.portfolio import (
    RebalancePolicy,
    backtest,
    compare_policies,
    load_return_paths,
    save_report,
)
from src.processor import ExperimentProcessor

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def report_error(code: str, message: str) -> None:
    print(f"error code={code} message={json.dumps(message, ensure_ascii=False)}", file=sys.stderr)


class ArgumentParser(argparse.ArgumentParser):
    """argparse with the machine-parseable error line."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        report_error("UsageError", message)
        raise SystemExit(EXIT_USAGE)


def _require(value, flag: str):
    if value is None:
        raise MissingArgument(f"{flag} is required")
    return value


def cmd_calibrate(cfg: RunConfig) -> int:
    series = load_prices(_require(cfg.prices, "--prices"), fill_gaps=cfg.fill_gaps)
    model = build_model(
        _require(cfg.mu_annual, "--mu-annual"),
        QubitAllocation(tuple(cfg.alloc)),
        cfg.bounds_k,
        series=series,
    )
    out = save_model(model, Path(cfg.out) / "model.json", build_metadata("calibrate", cfg.echo()))
    logger.info(f"[calibrate] mu_monthly={model.mu_monthly.tolist()} -> {out}")
    return EXIT_OK


def cmd_build_circuit(cfg: RunConfig) -> int:
    model = load_model(_require(cfg.model, "--model"))
    out_dir = Path(cfg.out)
    meta = build_metadata("build-circuit", cfg.echo())
    dist = model.distribution()
    cost = synthesis_cost(model.alloc, dist=dist)
    save_circuit(combine_with_measurement(synthesize(dist)), out_dir / "circuit.jsonl", meta)
    save_distribution(dist, out_dir / "distribution.json", meta)
    write_json(cost.counts_report(), out_dir / "cost.json", meta)
    # wall-clock timings are the only nondeterministic output
    write_json(cost.timing_report(), out_dir / "build_timing.json", meta)
    return EXIT_OK


def cmd_simulate(cfg: RunConfig) -> int:
    model = load_model(_require(cfg.model, "--model"))
    processor = ExperimentProcessor(cfg)
    result = processor.run(model)
    processor.write_outputs(result, Path(cfg.out), build_metadata("simulate", cfg.echo(), cfg.seed))
    return EXIT_OK


def _policy(cfg: RunConfig) -> RebalancePolicy:
    if cfg.policy is None:
        raise MissingArgument(f"--policy is required; expected one of {'|'.join(POLICY_NAMES)}")
    return RebalancePolicy.from_name(cfg.policy)


def cmd_backtest(cfg: RunConfig) -> int:
    paths = load_return_paths(_require(cfg.returns, "--returns"))
    weights = _require(cfg.weights, "--weights")
    policy = _policy(cfg)
    model = load_model(cfg.model) if cfg.model else None
    meta = build_metadata("backtest", cfg.echo(), cfg.seed)
    out_dir = Path(cfg.out)
    for path in paths:
        report = backtest(path, weights, policy, cfg.transaction_cost, model=model)
        name = "report.json" if len(paths) == 1 else f"report_{path.execution_index:04d}.json"
        save_report(report, out_dir / name, meta)
        logger.info(
            f"[backtest] execution #{path.execution_index} policy={policy.label} "
            f"terminal wealth={report.terminal_wealth:.6f}"
        )
    return EXIT_OK


def cmd_compare(cfg: RunConfig) -> int:
    paths = load_return_paths(_require(cfg.returns, "--returns"))
    table = compare_policies(paths, _require(cfg.weights, "--weights"))
    write_csv(table, Path(cfg.out) / "compare.csv", build_metadata("compare", cfg.echo()))
    return EXIT_OK


def cmd_synth_prices(cfg: RunConfig) -> int:
    series = synthetic_prices(months=cfg.months, seed=cfg.seed)
    meta = build_metadata("synth-prices", cfg.echo(), cfg.seed)
    out = save_prices(series, Path(cfg.out) / "prices.csv", header_lines(meta))
    logger.info(f"[synth-prices] {series.num_months} months -> {out}")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "calibrate": cmd_calibrate,
    "build-circuit": cmd_build_circuit,
    "simulate": cmd_simulate,
    "backtest": cmd_backtest,
    "compare": cmd_compare,
    "synth-prices": cmd_synth_prices,
}


def build_parser() -> ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, help="JSON run configuration; flags override its values")
    common.add_argument("--out", type=str, help="Output directory (default: out)")
    common.add_argument("--verbose", action="store_true", help="Enable verbose logging")

    parser = ArgumentParser(description="Multi-period asset allocation from sampled circuit outputs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("calibrate", parents=[common], help="Estimate the market model from monthly prices")
    p.add_argument("--prices", type=str, help="Monthly price table (CSV or XLSX)")
    p.add_argument("--mu-annual", type=str, help="Annual expected returns, comma list (e.g. 0.10,0.10,0.06)")
    p.add_argument("--alloc", type=str, help=f"Qubits per asset, comma list (default {DEFAULT_EXPERIMENT['alloc']})")
    p.add_argument("--bounds-k", type=float, help="Grid half-width in standard deviations (default 3)")
    p.add_argument("--fill-gaps", action="store_true", default=None, help="Forward-fill missing months")

    p = sub.add_parser("build-circuit", parents=[common], help="Synthesize the state-preparation circuit")
    p.add_argument("--model", type=str, help="Model file written by calibrate")

    p = sub.add_parser("simulate", parents=[common], help="Sample return paths")
    p.add_argument("--model", type=str, help="Model file written by calibrate")
    p.add_argument("--shots", type=int, help="Shots (months) per execution (default 120)")
    p.add_argument("--executions", type=int, help="Number of executions (default 1)")
    p.add_argument("--seed", type=int, help="Base seed (default 0)")
    p.add_argument("--workers", type=int, help="Parallel executions (default QALLOC_WORKERS or 1)")
    p.add_argument("--sampler", type=str, help="circuit (shot-sampled, default) or classical (direct normal draws)")

    for name, help_text in (("backtest", "Backtest return paths"), ("compare", "Compare every policy")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--returns", type=str, help="Return-path CSV, or a directory of returns_*.csv")
        p.add_argument("--weights", type=str, help="Target weights, comma list summing to 1")
        if name == "backtest":
            p.add_argument("--policy", type=str, help="|".join(POLICY_NAMES))
            p.add_argument("--model", type=str, help="Model file; adds ΔΣ and ΔΣ_disc to the report")

    p = sub.add_parser("synth-prices", parents=[common], help="Write a synthetic monthly price table")
    p.add_argument("--months", type=int, help="Number of monthly levels (default 240)")
    p.add_argument("--seed", type=int, help="Seed (default 0)")
    return parser


def _validation_error(e: ValidationError) -> tuple[str, str]:
    """Surface the domain error wrapped by a pydantic validator, if any."""
    for err in e.errors():
        inner = (err.get("ctx") or {}).get("error")
        if isinstance(inner, AllocationError):
            return inner.code, str(inner)
    first = e.errors()[0] if e.errors() else {}
    field = ".".join(str(x) for x in first.get("loc", ()))
    return "ValidationError", f"{field}: {first.get('msg', str(e))}"


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging level
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    overrides = {k: v for k, v in vars(args).items() if k not in {"command", "config", "verbose"}}
    try:
        cfg = load_run_config(args.config, overrides)
        return COMMANDS[args.command](cfg)
    except AllocationError as e:
        logger.error(f"[{args.command}] {e.code}: {e}")
        report_error(e.code, str(e))
        return EXIT_USAGE
    except ValidationError as e:
        code, message = _validation_error(e)
        logger.error(f"[{args.command}] {code}: {message}")
        report_error(code, message)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Application failed: {e}", exc_info=True)
        report_error(type(e).__name__, str(e))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
