"""Return-path CSV files: ``# key=value`` metadata lines, then ``month,<asset1>,...``."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Sequence, Union

import numpy as np
import polars as pl

from ..errors import ParseError
from .execution import ReturnPath

logger = logging.getLogger(__name__)

PATH_GLOB = "returns_*.csv"


def path_filename(execution_index: int) -> str:
    return f"returns_{execution_index:04d}.csv"


def return_path_frame(path: ReturnPath) -> pl.DataFrame:
    return pl.DataFrame({"month": np.arange(path.months, dtype=np.int64)}).with_columns(
        [pl.Series(name, path.returns[:, i]) for i, name in enumerate(path.names)]
    )


def save_return_path(path: ReturnPath, target: Union[str, Path], header_lines: Sequence[str] = ()) -> Path:
    """Write log returns with 17 significant digits, so reloading is bit-exact."""
    target = Path(target)
    target.parent.mkdir(parents=True, exist_ok=True)
    body = return_path_frame(path).write_csv(None, float_scientific=True, float_precision=16)
    with open(target, "w", encoding="utf-8", newline="\n") as f:
        for line in header_lines:
            f.write(f"# {line}\n")
        f.write(f"# seed={path.seed}\n")
        f.write(f"# execution_index={path.execution_index}\n")
        f.write(body)
    return target


def _read_header(target: Path) -> Dict[str, str]:
    meta: Dict[str, str] = {}
    with open(target, "r", encoding="utf-8") as f:
        for line in f:
            if not line.startswith("#"):
                break
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                meta[key.strip()] = value.strip()
    return meta


def load_return_path(target: Union[str, Path]) -> ReturnPath:
    target = Path(target)
    if not target.is_file():
        raise ParseError(f"return-path file not found: {target}")
    try:
        df = pl.read_csv(target, comment_prefix="#", infer_schema_length=0)
    except Exception as e:
        raise ParseError(f"cannot parse {target}: {e}") from e
    if not df.columns or df.columns[0] != "month":
        raise ParseError(f"{target}: first header column must be 'month', got {df.columns[:1]}")
    names = tuple(df.columns[1:])
    try:
        returns = np.array(
            [[float(cell) for cell in row[1:]] for row in df.iter_rows()], dtype=float
        ).reshape(df.height, len(names))
    except (TypeError, ValueError) as e:
        raise ParseError(f"{target}: non-numeric return: {e}") from e

    meta = _read_header(target)
    try:
        seed = int(meta.get("seed", 0))
        index = int(meta.get("execution_index", 0))
    except ValueError as e:
        raise ParseError(f"{target}: bad metadata header: {e}") from e
    return ReturnPath(names, returns, seed, index)


def load_return_paths(source: Union[str, Path]) -> List[ReturnPath]:
    """One CSV, or every ``returns_*.csv`` in a directory ordered by execution index."""
    source = Path(source)
    if source.is_dir():
        files = sorted(source.glob(PATH_GLOB))
        if not files:
            raise ParseError(f"no {PATH_GLOB} files in {source}")
        paths = [load_return_path(f) for f in files]
        paths.sort(key=lambda p: p.execution_index)
        logger.info(f"[backtest] loaded {len(paths)} return paths from {source}")
        return paths
    return [load_return_path(source)]
