"""Readers for monthly price tables (CSV and XLSX)."""

from .base import BaseReader, ReaderRegistry
from .csv_reader import CSVReader
from .excel_reader import ExcelReader

registry = ReaderRegistry()
registry.register("csv", CSVReader)
registry.register("xlsx", ExcelReader)

__all__ = ["BaseReader", "ReaderRegistry", "CSVReader", "ExcelReader", "registry"]
