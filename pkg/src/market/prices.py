"""Monthly price tables: loading, validation and log returns.

Layout: header ``date,<asset1>,<asset2>,...``; dates ``YYYY-MM``; decimal
point, no thousands separators. Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import polars as pl

from ..errors import MissingMonths, NonPositiveLevel, ParseError, TooShort, UnorderedDates
from ..readers import registry as reader_registry

logger = logging.getLogger(__name__)

MIN_ROWS = 25
_MONTH_RE = re.compile(r"^(\d{4})-(0[1-9]|1[0-2])$")


def month_ordinal(date: str) -> int:
    m = _MONTH_RE.match(date)
    if not m:
        raise ParseError(f"bad month {date!r}; expected YYYY-MM")
    return int(m.group(1)) * 12 + int(m.group(2)) - 1


def month_label(ordinal: int) -> str:
    return f"{ordinal // 12:04d}-{ordinal % 12 + 1:02d}"


@dataclass(frozen=True, eq=False)
class PriceSeries:
    names: Tuple[str, ...]
    dates: Tuple[str, ...]
    levels: np.ndarray
    # months inserted by forward fill, empty unless loaded with fill_gaps
    filled_months: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        levels = np.array(self.levels, dtype=float)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "dates", tuple(self.dates))
        if levels.ndim != 2 or levels.shape != (len(self.dates), len(self.names)):
            raise ParseError(
                f"levels shape {levels.shape} does not match {len(self.dates)} dates x {len(self.names)} assets"
            )
        bad = np.argwhere(~(levels > 0))
        if bad.size:
            r, c = (int(v) for v in bad[0])
            raise NonPositiveLevel(
                f"level at row {r + 1} ({self.dates[r]}), column {self.names[c]!r} is {levels[r, c]!r}; must be > 0"
            )
        ordinals = [month_ordinal(d) for d in self.dates]
        for i in range(1, len(ordinals)):
            if ordinals[i] <= ordinals[i - 1]:
                raise UnorderedDates(
                    f"dates not strictly increasing at row {i + 1}: {self.dates[i - 1]} then {self.dates[i]}"
                )
        for i in range(1, len(ordinals)):
            if ordinals[i] - ordinals[i - 1] > 1:
                raise MissingMonths(
                    f"gap between {self.dates[i - 1]} and {self.dates[i]}; pass fill_gaps to forward-fill"
                )
        if levels.shape[0] < MIN_ROWS:
            raise TooShort(f"{levels.shape[0]} rows; need at least {MIN_ROWS} (24 monthly returns)")
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    @property
    def num_months(self) -> int:
        return len(self.dates)


def _parse_level(text: Optional[str], row: int, date: str, column: str) -> float:
    if text is None or not str(text).strip():
        raise ParseError(f"empty cell at row {row} ({date}), column {column!r}")
    try:
        value = float(str(text).strip())
    except ValueError as e:
        raise ParseError(f"row {row} ({date}), column {column!r}: {text!r} is not a number") from e
    if not np.isfinite(value):
        raise ParseError(f"row {row} ({date}), column {column!r}: non-finite level {text!r}")
    return value


def _forward_fill(dates: List[str], levels: List[List[float]]) -> Tuple[List[str], List[List[float]], List[str]]:
    out_dates, out_levels, filled = [dates[0]], [levels[0]], []
    for date, row in zip(dates[1:], levels[1:]):
        prev = month_ordinal(out_dates[-1])
        for ordinal in range(prev + 1, month_ordinal(date)):
            label = month_label(ordinal)
            out_dates.append(label)
            out_levels.append(list(out_levels[-1]))
            filled.append(label)
        out_dates.append(date)
        out_levels.append(row)
    return out_dates, out_levels, filled


def load_prices(path: Union[str, Path], fmt: Optional[str] = None, fill_gaps: bool = False) -> PriceSeries:
    """Read and validate a monthly price table (``fmt`` = "csv" / "xlsx", else by extension)."""
    path = str(path)
    if not Path(path).is_file():
        raise ParseError(f"price file not found: {path}")
    reader = reader_registry.resolve(path, fmt)
    try:
        df = reader.read_table(path)
    except Exception as e:
        raise ParseError(f"cannot parse {path}: {e}") from e

    if not df.columns or df.columns[0].strip().lower() != "date":
        raise ParseError(f"{path}: first header column must be 'date', got {df.columns[:1]}")
    names = [c.strip() for c in df.columns[1:]]
    if not names:
        raise ParseError(f"{path}: no asset columns")

    dates: List[str] = []
    levels: List[List[float]] = []
    for r, row in enumerate(df.iter_rows(), start=1):
        date = (row[0] or "").strip()
        if not _MONTH_RE.match(date):
            raise ParseError(f"row {r}, column 'date': {row[0]!r} is not YYYY-MM")
        dates.append(date)
        levels.append([_parse_level(cell, r, date, name) for cell, name in zip(row[1:], names)])

    filled: List[str] = []
    if fill_gaps and dates:
        ordinals = [month_ordinal(d) for d in dates]
        if all(b > a for a, b in zip(ordinals, ordinals[1:])):
            dates, levels, filled = _forward_fill(dates, levels)
            if filled:
                logger.warning(f"[market] forward-filled {len(filled)} missing months: {filled[:5]}")

    series = PriceSeries(tuple(names), tuple(dates), np.array(levels, dtype=float), tuple(filled))
    logger.info(f"[market] loaded {path}: months={series.num_months}, assets={list(series.names)}")
    return series


def save_prices(series: PriceSeries, path: Union[str, Path], header_lines: Sequence[str] = ()) -> Path:
    """Write the price layout, 17 significant digits per level."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = pl.DataFrame({"date": list(series.dates)}).with_columns(
        [pl.Series(name, series.levels[:, i]) for i, name in enumerate(series.names)]
    )
    body = df.write_csv(None, float_scientific=True, float_precision=16)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in header_lines:
            f.write(f"# {line}\n")
        f.write(body)
    return path


def monthly_log_returns(series: PriceSeries) -> np.ndarray:
    """``r[t][a] = ln(level[t+1][a] / level[t][a])``, shape (months-1, assets)."""
    levels = series.levels
    return np.log(levels[1:] / levels[:-1])


def levels_from_returns(first_row: Sequence[float], returns: np.ndarray) -> np.ndarray:
    """Inverse of ``monthly_log_returns`` given the first row of levels."""
    first = np.asarray(first_row, dtype=float)
    growth = np.exp(np.cumsum(np.asarray(returns, dtype=float), axis=0))
    return np.vstack([first, first * growth])
