"""Excel file reader: keep it simple, always use openpyxl via pandas."""

import polars as pl

from .base import BaseReader


class ExcelReader(BaseReader):
    """Reader for ``.xlsx`` price workbooks (openpyxl only), same layout as the CSV."""

    def read(self, path: str, sheet_name=None, **kwargs) -> pl.DataFrame:
        """Read Excel via pandas/openpyxl, then convert to an all-string polars frame."""
        import pandas as pd

        if sheet_name is None:
            sheet_name = kwargs.pop("sheet", 0)

        df_pd = pd.read_excel(path, sheet_name=sheet_name, engine="openpyxl", **kwargs)
        df_pd.columns = [str(c) for c in df_pd.columns]

        # Excel stores month cells as datetimes; the price layout wants YYYY-MM
        first = df_pd.columns[0]
        if pd.api.types.is_datetime64_any_dtype(df_pd[first]):
            df_pd[first] = df_pd[first].dt.strftime("%Y-%m")

        cells = df_pd.astype(object).apply(lambda col: col.map(lambda v: None if pd.isna(v) else str(v)))
        # pyarrow-backed conversion; empty cells stay null
        return pl.from_pandas(cells).with_columns(pl.all().cast(pl.Utf8))

    def validate_path(self, path: str) -> bool:
        return path.lower().endswith(".xlsx")
