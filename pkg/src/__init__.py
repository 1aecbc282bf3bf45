"""Multi-asset return sampling from a simulated state-preparation circuit, and rebalanced backtests."""

from .processor import ExperimentProcessor, ExperimentResult, ExecutionOutcome
from .readers import ReaderRegistry, CSVReader, ExcelReader
from .config import RunConfig, load_run_config
from .errors import AllocationError

__all__ = [
    "ExperimentProcessor",
    "ExperimentResult",
    "ExecutionOutcome",
    "ReaderRegistry",
    "CSVReader",
    "ExcelReader",
    "RunConfig",
    "load_run_config",
    "AllocationError",
]
