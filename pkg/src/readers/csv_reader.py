"""CSV price tables."""

import polars as pl

from .base import BaseReader


class CSVReader(BaseReader):
    """Every column as String; ``#`` lines are provenance headers and skipped."""

    def read(self, path: str, **kwargs) -> pl.DataFrame:
        options = {"infer_schema_length": 0, "comment_prefix": "#", **kwargs}
        # a ragged row is a parse error, not something to pad
        return pl.read_csv(path, truncate_ragged_lines=False, **options)

    def validate_path(self, path: str) -> bool:
        return path.lower().endswith((".csv", ".txt"))
